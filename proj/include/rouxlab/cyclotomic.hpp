#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rouxlab/rational.hpp"

namespace rouxlab {

/// Exact element of Z[zeta_L] extended to rational coefficients, i.e. of the
/// L-th cyclotomic field. Canonical form is the remainder modulo the L-th
/// cyclotomic polynomial, so equality is a coefficient comparison. Values at
/// different levels compare through explicit promotion to the lcm level.
class Cyclotomic {
 public:
  /// Zero at level 1.
  Cyclotomic();
  explicit Cyclotomic(const Rational& r);
  Cyclotomic(std::int64_t n) : Cyclotomic(Rational(n)) {}

  /// zeta_L^k.
  static Cyclotomic root_of_unity(int level, std::int64_t k);
  static Cyclotomic zero(int level);
  static Cyclotomic one() { return Cyclotomic(Rational(1)); }

  /// Builds sum_e coeffs[e] * zeta_L^e from an exponent-indexed vector of
  /// length <= L.
  static Cyclotomic from_exponents(int level, const std::vector<Rational>& coeffs);

  int level() const { return level_; }
  /// Canonical coefficients, length phi(L) (degree of Phi_L).
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Requires is_rational().
  Rational rational_value() const;
  bool is_real() const;

  /// Image under zeta_L -> zeta_L^{-1} (complex conjugation).
  Cyclotomic conj() const;
  /// Embeds into the L'-th field; requires level() | new_level.
  Cyclotomic promoted(int new_level) const;

  std::complex<double> to_complex() const;
  /// Requires is_real(); numeric value of the real embedding.
  double to_real() const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic operator*(const Rational& r) const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  std::string str() const;

 private:
  int level_;
  std::vector<Rational> coeffs_;
};

/// Coefficients of the L-th cyclotomic polynomial, ascending degree, monic.
const std::vector<std::int64_t>& cyclotomic_polynomial(int level);

bool cyclotomic_is_real(const Cyclotomic& x);
bool cyclotomic_is_rational(const Cyclotomic& x);

/// s with s*s == x when x is a nonnegative rational integer square.
std::optional<std::int64_t> sqrt_if_integer(const Cyclotomic& x);

}  // namespace rouxlab
