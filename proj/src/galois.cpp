#include "rouxlab/galois.hpp"

#include <map>
#include <stdexcept>

namespace rouxlab {

namespace {

int smallest_prime_factor(int n) {
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

// Reduction rules x^k = sum_j rule[j] x^j for the built-in prime powers.
const std::map<int, std::vector<int>>& reduction_registry() {
  static const std::map<int, std::vector<int>> registry = {
      {4, {1, 1}},        // x^2 + x + 1
      {8, {1, 1, 0}},     // x^3 + x + 1
      {9, {2, 0}},        // x^2 + 1
      {16, {1, 1, 0, 0}}  // x^4 + x + 1
  };
  return registry;
}

}  // namespace

bool GaloisField::is_prime_power(int q) {
  if (q < 2) return false;
  int p = smallest_prime_factor(q);
  while (q % p == 0) q /= p;
  return q == 1;
}

GaloisField::GaloisField(int q) : q_(q) {
  if (q < 2 || q > 16 || !is_prime_power(q))
    throw std::invalid_argument("field size must be a prime power in [2, 16]");
  p_ = smallest_prime_factor(q);
  k_ = 0;
  for (int t = q; t > 1; t /= p_) ++k_;

  auto digits = [&](int a) {
    std::vector<int> d(k_);
    for (int j = 0; j < k_; ++j) {
      d[j] = a % p_;
      a /= p_;
    }
    return d;
  };
  auto encode = [&](const std::vector<int>& d) {
    int a = 0;
    for (int j = k_ - 1; j >= 0; --j) a = a * p_ + d[j];
    return a;
  };

  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);

  std::vector<int> rule;
  if (k_ > 1) rule = reduction_registry().at(q);

  for (int a = 0; a < q; ++a) {
    auto da = digits(a);
    std::vector<int> dn(k_);
    for (int j = 0; j < k_; ++j) dn[j] = (p_ - da[j]) % p_;
    neg_[a] = encode(dn);
    for (int b = 0; b < q; ++b) {
      auto db = digits(b);
      std::vector<int> ds(k_);
      for (int j = 0; j < k_; ++j) ds[j] = (da[j] + db[j]) % p_;
      add_[a * q + b] = encode(ds);

      // polynomial product, reduced degree-by-degree from the top
      std::vector<int> prod(2 * k_ - 1, 0);
      for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (int deg = 2 * k_ - 2; deg >= k_; --deg) {
        int c = prod[deg];
        if (c == 0) continue;
        prod[deg] = 0;
        for (int j = 0; j < k_; ++j)
          prod[deg - k_ + j] = (prod[deg - k_ + j] + c * rule[j]) % p_;
      }
      prod.resize(k_);
      mul_[a * q + b] = encode(prod);
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) inv_[a] = b;
}

int GaloisField::inv(int a) const {
  if (a == 0) throw std::domain_error("field inverse of zero");
  return inv_[a];
}

int GaloisField::pow(int a, int e) const {
  int out = 1;
  for (int i = 0; i < e; ++i) out = mul(out, a);
  return out;
}

bool GaloisField::is_square(int a) const {
  if (q_ % 2 == 0) return true;  // every element is a square in characteristic 2
  if (a == 0) throw std::domain_error("quadratic-residue test expects a unit");
  return pow(a, (q_ - 1) / 2) == 1;
}

}  // namespace rouxlab
