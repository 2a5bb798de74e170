#include "rouxlab/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

namespace rouxlab {

namespace {

// Exact division of integer polynomials, used to build Phi_L from x^L - 1.
std::vector<std::int64_t> poly_divide_exact(const std::vector<std::int64_t>& num,
                                            const std::vector<std::int64_t>& den) {
  std::vector<std::int64_t> rem = num;
  int dn = static_cast<int>(rem.size()) - 1;
  int dd = static_cast<int>(den.size()) - 1;
  std::vector<std::int64_t> quot(dn - dd + 1, 0);
  for (int i = dn; i >= dd; --i) {
    std::int64_t c = rem[i] / den[dd];
    quot[i - dd] = c;
    if (c != 0) {
      for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= c * den[j];
    }
  }
  return quot;
}

std::map<int, std::vector<std::int64_t>>& phi_cache() {
  static std::map<int, std::vector<std::int64_t>> cache;
  return cache;
}
std::mutex phi_mutex;

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int level) {
  if (level < 1) throw std::invalid_argument("cyclotomic level must be >= 1");
  std::scoped_lock lock(phi_mutex);
  auto it = phi_cache().find(level);
  if (it != phi_cache().end()) return it->second;
  // compute_phi recurses through this function; release by inserting divisors
  // bottom-up instead.
  for (int d = 1; d <= level; ++d) {
    if (level % d == 0 && !phi_cache().count(d)) {
      std::vector<std::int64_t> poly(d + 1, 0);
      poly[0] = -1;
      poly[d] = 1;
      for (int e = 1; e < d; ++e) {
        if (d % e == 0) poly = poly_divide_exact(poly, phi_cache().at(e));
      }
      phi_cache().emplace(d, std::move(poly));
    }
  }
  return phi_cache().at(level);
}

namespace {

// Remainder of a rational polynomial modulo the monic Phi_L.
std::vector<Rational> reduce_mod_phi(std::vector<Rational> poly, int level) {
  const auto& phi = cyclotomic_polynomial(level);
  int deg_phi = static_cast<int>(phi.size()) - 1;
  for (int i = static_cast<int>(poly.size()) - 1; i >= deg_phi; --i) {
    Rational c = poly[i];
    if (!c.is_zero()) {
      for (int j = 0; j <= deg_phi; ++j) {
        poly[i - deg_phi + j] -= c * Rational(phi[j]);
      }
    }
  }
  poly.resize(deg_phi);
  return poly;
}

}  // namespace

Cyclotomic::Cyclotomic() : level_(1), coeffs_(1, Rational(0)) {}

Cyclotomic::Cyclotomic(const Rational& r) : level_(1), coeffs_(1, r) {}

Cyclotomic Cyclotomic::zero(int level) {
  Cyclotomic c;
  c.level_ = level;
  c.coeffs_.assign(cyclotomic_polynomial(level).size() - 1, Rational(0));
  return c;
}

Cyclotomic Cyclotomic::root_of_unity(int level, std::int64_t k) {
  k %= level;
  if (k < 0) k += level;
  std::vector<Rational> poly(static_cast<std::size_t>(k) + 1, Rational(0));
  poly[static_cast<std::size_t>(k)] = Rational(1);
  Cyclotomic c;
  c.level_ = level;
  c.coeffs_ = reduce_mod_phi(std::move(poly), level);
  return c;
}

Cyclotomic Cyclotomic::from_exponents(int level, const std::vector<Rational>& coeffs) {
  if (static_cast<int>(coeffs.size()) > level)
    throw std::invalid_argument("exponent vector longer than level");
  Cyclotomic c;
  c.level_ = level;
  c.coeffs_ = reduce_mod_phi(coeffs, level);
  return c;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::domain_error("cyclotomic is not rational");
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<Rational> poly(level_, Rational(0));
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    if (coeffs_[e].is_zero()) continue;
    int idx = e == 0 ? 0 : level_ - static_cast<int>(e);
    poly[idx] += coeffs_[e];
  }
  Cyclotomic c;
  c.level_ = level_;
  c.coeffs_ = reduce_mod_phi(std::move(poly), level_);
  return c;
}

bool Cyclotomic::is_real() const { return *this == conj(); }

Cyclotomic Cyclotomic::promoted(int new_level) const {
  if (new_level == level_) return *this;
  if (new_level % level_ != 0)
    throw std::invalid_argument("promotion requires old level dividing new level");
  int m = new_level / level_;
  std::vector<Rational> poly(static_cast<std::size_t>(new_level), Rational(0));
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    if (!coeffs_[e].is_zero()) poly[e * m] = coeffs_[e];
  }
  Cyclotomic c;
  c.level_ = new_level;
  c.coeffs_ = reduce_mod_phi(std::move(poly), new_level);
  return c;
}

namespace {
int common_level(const Cyclotomic& a, const Cyclotomic& b) {
  return static_cast<int>(std::lcm(a.level(), b.level()));
}
}  // namespace

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  int L = common_level(a, b);
  Cyclotomic x = a.promoted(L), y = b.promoted(L);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
  return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  int L = common_level(a, b);
  Cyclotomic x = a.promoted(L), y = b.promoted(L);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
  return x;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic x = *this;
  for (auto& c : x.coeffs_) c = -c;
  return x;
}

Cyclotomic Cyclotomic::operator*(const Rational& r) const {
  Cyclotomic x = *this;
  for (auto& c : x.coeffs_) c *= r;
  return x;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  int L = common_level(a, b);
  Cyclotomic x = a.promoted(L), y = b.promoted(L);
  std::vector<Rational> prod(x.coeffs_.size() + y.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
      if (!y.coeffs_[j].is_zero()) prod[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  Cyclotomic c;
  c.level_ = L;
  c.coeffs_ = reduce_mod_phi(std::move(prod), L);
  return c;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  int L = common_level(a, b);
  return a.promoted(L).coeffs_ == b.promoted(L).coeffs_;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    if (coeffs_[e].is_zero()) continue;
    double ang = 2.0 * std::numbers::pi * static_cast<double>(e) / level_;
    acc += coeffs_[e].to_double() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return acc;
}

double Cyclotomic::to_real() const {
  if (!is_real()) throw std::domain_error("cyclotomic is not real");
  return to_complex().real();
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    if (coeffs_[e].is_zero()) continue;
    if (!first) os << " + ";
    os << coeffs_[e].str();
    if (e > 0) os << "*z" << level_ << "^" << e;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

bool cyclotomic_is_real(const Cyclotomic& x) { return x.is_real(); }
bool cyclotomic_is_rational(const Cyclotomic& x) { return x.is_rational(); }

std::optional<std::int64_t> sqrt_if_integer(const Cyclotomic& x) {
  if (!x.is_rational()) return std::nullopt;
  Rational r = x.rational_value();
  if (!r.is_integer() || r.sign() < 0) return std::nullopt;
  std::int64_t s = isqrt(r.num());
  if (s * s != r.num()) return std::nullopt;
  return s;
}

}  // namespace rouxlab
