#pragma once

#include <vector>

namespace rouxlab {

/// Arithmetic tables for GF(q), q = p^k <= 16. Prime fields are residue
/// arithmetic; the prime powers 4, 8, 9, 16 use the built-in irreducible
/// polynomials x^2+x+1, x^3+x+1, x^2+1, x^4+x+1. Elements are indexed by the
/// base-p encoding of their coefficient vectors.
class GaloisField {
 public:
  explicit GaloisField(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add(a, neg_[b]); }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int inv(int a) const;
  int pow(int a, int e) const;
  /// Quadratic-residue test a^((q-1)/2) == 1 for odd q; requires a != 0.
  bool is_square(int a) const;

  static bool is_prime_power(int q);

 private:
  int q_, p_, k_;
  std::vector<int> add_, mul_, neg_, inv_;
};

}  // namespace rouxlab
