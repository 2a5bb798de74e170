#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rouxlab/roux.hpp"
#include "rouxlab/scheme.hpp"

namespace rouxlab {

/// Self-adjoint matrix with zero diagonal and exact root-of-unity entries off
/// the diagonal, stored as exponents of zeta_L.
class SignatureMatrix {
 public:
  SignatureMatrix(int n, int level);

  int n() const { return n_; }
  int level() const { return level_; }
  /// Exponent at (i,j); -1 on the diagonal.
  int at(int i, int j) const { return exps_[static_cast<std::size_t>(i) * n_ + j]; }
  /// Sets (i,j) to zeta^e and (j,i) to the conjugate.
  void set_pair(int i, int j, int e);

  Cyclotomic value(int i, int j) const;
  std::complex<double> value_num(int i, int j) const;

  bool operator==(const SignatureMatrix& o) const {
    return n_ == o.n_ && level_ == o.level_ && exps_ == o.exps_;
  }

 private:
  int n_;
  int level_;
  std::vector<int> exps_;
};

/// Dense complex self-adjoint matrix for detector inputs that are not exact
/// roots of unity.
struct ComplexMatrix {
  int n = 0;
  std::vector<std::complex<double>> a;

  ComplexMatrix() = default;
  explicit ComplexMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * size) {}
  std::complex<double> at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  std::complex<double>& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
};

ComplexMatrix to_complex(const SignatureMatrix& s);

/// Entrywise application of a character to a verified roux.
SignatureMatrix evaluate(const Roux& b, const Character& alpha);

/// Outcome of the two-eigenvalue test on a signature matrix. When is_etf, the
/// eigenvalues are lambda1 (multiplicity d) and lambda2 (multiplicity n-d),
/// the Gram matrix I + mu*S is a scaled rank-d projection, and welch_equality
/// records coherence equality with the Welch bound (always true for an ETF).
struct EtfReport {
  bool is_etf = false;
  int n = 0;
  double d = 0.0;
  bool d_is_integral = false;
  std::int64_t d_int = 0;
  double mu = 0.0;
  bool welch_equality = false;
  double lambda1 = 0.0, lambda2 = 0.0;
  std::int64_t mult1 = 0, mult2 = 0;
  RealScalar t;  // S^2 = (n-1) I + t S
  std::string failure;  // set when !is_etf
};

/// Exact test: reads t off one cell of S^2 - (n-1)I and verifies the identity
/// globally in the cyclotomic field.
EtfReport etf_check(const SignatureMatrix& s);

/// Numeric test through eigenvalue clustering.
EtfReport etf_check(const ComplexMatrix& s, double tol = 1e-9);

/// sqrt((n-d)/(d(n-1))).
double welch_bound(std::int64_t n, std::int64_t d);

/// Unit-norm vectors recovered from a PSD Gram matrix by spectral
/// factorization; vectors[k] is the k-th column (dimension d).
struct LineFamily {
  int d = 0;
  int n = 0;
  std::vector<std::vector<std::complex<double>>> vectors;
};

LineFamily vectors_from_gram(const ComplexMatrix& gram, std::optional<int> expected_rank = {},
                             double tol = 1e-9);

SignatureMatrix hadamard_power(const SignatureMatrix& s, int k);
ComplexMatrix hadamard_power(const ComplexMatrix& s, int k);

/// Switching normalization: first row and column become all-ones.
SignatureMatrix normalize_signature(const SignatureMatrix& s);
ComplexMatrix normalize_signature(const ComplexMatrix& s);

struct RouxLinesYes {
  int r = 0;
  Roux roux;
};
struct RouxLinesNo {
  int failed_power = 0;        // 0 when the failure is a non-root entry
  std::string reason;
};
using RouxLinesVerdict = std::variant<RouxLinesYes, RouxLinesNo>;

/// Normalizes, finds the minimal common root order r, and demands that every
/// Hadamard power k in 1..r pass the two-eigenvalue test. On yes, returns the
/// reconstructed (verified) roux over C_r.
RouxLinesVerdict detect_roux_lines(const SignatureMatrix& s);
/// Numeric variant; roots of unity are recognized up to max_order.
RouxLinesVerdict detect_roux_lines(const ComplexMatrix& s, double tol = 1e-9,
                                   int max_order = 24);

/// True iff S comes from real lines: S^{o2} has spectrum {n-1, -1}, checked
/// exactly as S^{o2} S^{o2} = (n-2) S^{o2} + (n-1) I.
bool detect_real_lines(const SignatureMatrix& s);
bool detect_real_lines(const ComplexMatrix& s, double tol = 1e-9);

/// True iff alpha(g) is real for every g with c_g != 0.
bool real_roux_criterion(const RouxParameters& params, const Character& alpha);

struct DracknLinesYes {
  int r = 0;
  double theta = 0.0, tau = 0.0;  // the shared spectrum
};
struct DracknLinesNo {
  int failed_power = 0;
  std::string reason;
};
using DracknLinesVerdict = std::variant<DracknLinesYes, DracknLinesNo>;

/// Minimal root order r plus a single spectrum shared by all Hadamard powers
/// k in 1..r-1.
DracknLinesVerdict detect_drackn_lines(const SignatureMatrix& s);
DracknLinesVerdict detect_drackn_lines(const ComplexMatrix& s, double tol = 1e-9,
                                       int max_order = 24);

enum class TriState { kYes, kNo, kUndecided };

/// q = (n-2d)^2 (n-1) / (d(n-d)) and the integrality screens behind the
/// roux/drackn feasibility conditions.
struct QIntegrality {
  Rational q;
  bool q_integer = false;
  bool sqrt_integer = false;
  TriState sqrt_in_z_omega = TriState::kUndecided;
};

QIntegrality integrality_q(std::int64_t n, std::int64_t d, std::int64_t r);

}  // namespace rouxlab
