#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rouxlab/roux.hpp"

namespace rouxlab {

/// Dense integer matrix.
struct IntMatrix {
  int n = 0;
  std::vector<std::int64_t> a;

  IntMatrix() = default;
  explicit IntMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0) {}
  std::int64_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  std::int64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  bool operator==(const IntMatrix& o) const = default;
};

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y);

/// 0/1 adjacency matrix with a label.
struct ZeroOneMatrix {
  int n = 0;
  std::vector<std::uint8_t> a;
  std::string label;

  ZeroOneMatrix() = default;
  ZeroOneMatrix(int size, std::string lbl)
      : n(size), a(static_cast<std::size_t>(size) * size, 0), label(std::move(lbl)) {}
  std::uint8_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  void set(int i, int j) { a[static_cast<std::size_t>(i) * n + j] = 1; }
};

struct AdjacencySet {
  int n = 0;
  std::vector<ZeroOneMatrix> matrices;
};

/// n x n matrix over the group ring of an abelian group; cells are dense
/// integer coefficient vectors.
class GroupRingMatrix {
 public:
  GroupRingMatrix(AbelianGroup group, int n);

  /// Indicator of a roux: coefficient 1 at each stored element.
  static GroupRingMatrix indicator(const Roux& b);
  /// g * indicator(B).
  static GroupRingMatrix translate_b(const Roux& b, int g);
  /// g * I.
  static GroupRingMatrix translate_i(const AbelianGroup& group, int n, int g);

  const AbelianGroup& group() const { return group_; }
  int n() const { return n_; }
  std::int64_t coeff(int i, int j, int g) const {
    return cells_[(static_cast<std::size_t>(i) * n_ + j) * group_.order() + g];
  }
  void add_coeff(int i, int j, int g, std::int64_t v) {
    cells_[(static_cast<std::size_t>(i) * n_ + j) * group_.order() + g] += v;
  }

  GroupRingMatrix operator*(const GroupRingMatrix& o) const;

 private:
  AbelianGroup group_;
  int n_;
  std::vector<std::int64_t> cells_;
};

/// Cayley expansion: each cell becomes its r x r circulant; block indices
/// (i, g) in lexicographic order.
IntMatrix expand(const GroupRingMatrix& m);

/// The 2r adjacency matrices {expand(gI)} and {expand(gB)} of a verified roux.
AdjacencySet roux_scheme(const Roux& b);

struct SchemeInfo {
  int classes = 0;
  bool commutative = false;
  /// p[i][j][k]: coefficient of A_k in A_i * A_j.
  std::vector<std::vector<std::vector<std::int64_t>>> constants;
};

struct SchemeError {
  std::string message;
  int witness_i = -1, witness_j = -1;  // offending matrix pair, when applicable
};

using SchemeCheck = std::variant<SchemeInfo, SchemeError>;

/// Verifies (A1) identity present, (A2) matrices sum to all-ones, (A3) the
/// span is closed under products (and adjoints); returns structure constants.
SchemeCheck check_scheme(const AdjacencySet& s);

SchemeInfo require_scheme(const AdjacencySet& s);

/// Matrix of exact root-of-unity entries: exps stores the exponent of zeta_L,
/// or -1 for a zero cell.
struct ExpMatrix {
  int n = 0;
  int level = 1;
  std::vector<int> exps;

  ExpMatrix() = default;
  ExpMatrix(int size, int lvl)
      : n(size), level(lvl), exps(static_cast<std::size_t>(size) * size, -1) {}
  int at(int i, int j) const { return exps[static_cast<std::size_t>(i) * n + j]; }
  void set(int i, int j, int e) { exps[static_cast<std::size_t>(i) * n + j] = e; }
  bool operator==(const ExpMatrix& o) const = default;
};

/// Real scalar stored exactly when rational.
struct RealScalar {
  bool rational = false;
  Rational exact;
  double value = 0.0;

  static RealScalar from_rational(const Rational& r) { return {true, r, r.to_double()}; }
  static RealScalar from_double(double v) { return {false, Rational(0), v}; }
};

/// G_alpha^eps = thin + mu * thick, where thin = sum_g alpha(g) [gI] and
/// thick = sum_g alpha(g) [gB] have exact root-of-unity entries on disjoint
/// supports.
struct IdempotentMatrix {
  int alpha_index = 0;
  int eps = +1;  // +1 or -1
  RealScalar mu;
  RealScalar c_hat;          // Fourier transform of the parameters at alpha
  double d = 0.0;            // rank by the closed formula
  bool d_is_integral = false;
  std::int64_t d_int = 0;    // valid when d_is_integral
  ExpMatrix thin, thick;

  int size() const { return thin.n; }
  std::complex<double> entry(int i, int j) const;
};

/// Primitive idempotent data for the roux scheme at (alpha, eps); rank checked
/// for integrality, optional numeric rank cross-check by the caller.
IdempotentMatrix idempotent_matrix(const Roux& b, const RouxParameters& params,
                                   const Character& alpha, int eps);

/// All 2r idempotents in deterministic order (character index, then + before -).
std::vector<IdempotentMatrix> all_idempotents(const Roux& b, const RouxParameters& params);

/// Partitions cells of an exact root-of-unity-entry matrix into level sets and
/// checks they form an association scheme.
SchemeCheck carries_scheme(const ExpMatrix& m);

/// Level sets of thin + mu * thick; exact for rational mu, and exact by
/// support separation otherwise (|mu| != 1 keeps the two parts apart).
SchemeCheck carries_scheme(const IdempotentMatrix& m);

/// Numeric variant: cells cluster when within tol (relative to the largest
/// magnitude).
SchemeCheck carries_scheme(const std::vector<std::complex<double>>& cells, int n, double tol);

}  // namespace rouxlab
