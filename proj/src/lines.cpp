#include "rouxlab/lines.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace rouxlab {

SignatureMatrix::SignatureMatrix(int n, int level)
    : n_(n), level_(level), exps_(static_cast<std::size_t>(n) * n, -1) {
  if (n < 2) throw std::invalid_argument("signature matrix needs n >= 2");
  if (level < 1) throw std::invalid_argument("level must be >= 1");
}

void SignatureMatrix::set_pair(int i, int j, int e) {
  if (i == j) throw std::invalid_argument("diagonal entries stay zero");
  e = ((e % level_) + level_) % level_;
  exps_[static_cast<std::size_t>(i) * n_ + j] = e;
  exps_[static_cast<std::size_t>(j) * n_ + i] = (level_ - e) % level_;
}

Cyclotomic SignatureMatrix::value(int i, int j) const {
  int e = at(i, j);
  if (e < 0) return Cyclotomic::zero(level_);
  return Cyclotomic::root_of_unity(level_, e);
}

std::complex<double> SignatureMatrix::value_num(int i, int j) const {
  int e = at(i, j);
  if (e < 0) return {0.0, 0.0};
  double ang = 2.0 * std::numbers::pi * e / level_;
  return {std::cos(ang), std::sin(ang)};
}

ComplexMatrix to_complex(const SignatureMatrix& s) {
  ComplexMatrix m(s.n());
  for (int i = 0; i < s.n(); ++i)
    for (int j = 0; j < s.n(); ++j) m.at(i, j) = s.value_num(i, j);
  return m;
}

SignatureMatrix evaluate(const Roux& b, const Character& alpha) {
  if (alpha.group() != b.group()) throw std::invalid_argument("character group mismatch");
  require_roux(b);
  SignatureMatrix s(b.n(), b.group().exponent());
  for (int i = 0; i < b.n(); ++i)
    for (int j = i + 1; j < b.n(); ++j) s.set_pair(i, j, alpha.exponent_at(b.at(i, j)));
  return s;
}

namespace {

// Exponent counts of (S^2)_ij / zeta^{e_ij}, i.e. the scalar the cell demands.
std::vector<std::int64_t> cell_demand(const SignatureMatrix& s, int i, int j) {
  const int L = s.level();
  if (s.at(i, j) < 0) throw std::invalid_argument("malformed signature: unset off-diagonal cell");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(L), 0);
  for (int k = 0; k < s.n(); ++k) {
    if (k == i || k == j) continue;
    if (s.at(i, k) < 0 || s.at(k, j) < 0)
      throw std::invalid_argument("malformed signature: unset off-diagonal cell");
    int e = (s.at(i, k) + s.at(k, j) - s.at(i, j)) % L;
    if (e < 0) e += L;
    ++counts[static_cast<std::size_t>(e)];
  }
  return counts;
}

EtfReport report_from_t(int n, const RealScalar& t) {
  EtfReport rep;
  rep.n = n;
  rep.t = t;
  rep.is_etf = true;
  double tv = t.value;
  double disc = std::sqrt(tv * tv + 4.0 * (n - 1));
  rep.lambda1 = (tv + disc) / 2.0;
  rep.lambda2 = (tv - disc) / 2.0;
  rep.mu = rep.lambda1 / (n - 1);
  rep.d = n * (-rep.lambda2) / (rep.lambda1 - rep.lambda2);

  if (t.rational) {
    Rational q = t.exact * t.exact + Rational(4 * (n - 1));
    Rational sq;
    if (rational_sqrt(q, &sq)) {
      Rational l1 = (t.exact + sq) / Rational(2);
      Rational l2 = (t.exact - sq) / Rational(2);
      Rational d = Rational(n) * (-l2) / (l1 - l2);
      rep.d_is_integral = d.is_integer();
      if (rep.d_is_integral) rep.d_int = d.num();
      rep.d = d.to_double();
    }
  }
  if (!rep.d_is_integral) {
    double rounded = std::round(rep.d);
    if (std::abs(rep.d - rounded) < 1e-6 && rounded >= 1) {
      rep.d_is_integral = true;
      rep.d_int = static_cast<std::int64_t>(rounded);
    }
  }
  if (rep.d_is_integral) {
    rep.mult1 = rep.d_int;
    rep.mult2 = n - rep.d_int;
    rep.welch_equality = std::abs(rep.mu - welch_bound(n, rep.d_int)) <= 1e-12 * std::max(1.0, rep.mu);
  } else {
    double w = std::sqrt((n - rep.d) / (rep.d * (n - 1)));
    rep.welch_equality = std::abs(rep.mu - w) <= 1e-9;
  }
  return rep;
}

}  // namespace

EtfReport etf_check(const SignatureMatrix& s) {
  const int n = s.n();
  const int L = s.level();
  std::vector<std::int64_t> first;
  int fi = -1, fj = -1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      auto demand = cell_demand(s, i, j);
      if (first.empty()) {
        first = demand;
        fi = i;
        fj = j;
      } else if (demand != first) {
        // counts may differ while the cyclotomic values agree
        Cyclotomic a = Cyclotomic::from_exponents(
            L, std::vector<Rational>(first.begin(), first.end()));
        Cyclotomic b = Cyclotomic::from_exponents(
            L, std::vector<Rational>(demand.begin(), demand.end()));
        if (a != b) {
          EtfReport rep;
          rep.n = n;
          std::ostringstream os;
          os << "S^2 = (n-1)I + tS fails: cells (" << fi << "," << fj << ") and (" << i << ","
             << j << ") demand different scalars";
          rep.failure = os.str();
          return rep;
        }
      }
    }
  }
  Cyclotomic t = Cyclotomic::from_exponents(
      L, std::vector<Rational>(first.begin(), first.end()));
  if (!t.is_real()) {
    EtfReport rep;
    rep.n = n;
    rep.failure = "the scalar t in S^2 = (n-1)I + tS is not real";
    return rep;
  }
  RealScalar ts = t.is_rational() ? RealScalar::from_rational(t.rational_value())
                                  : RealScalar::from_double(t.to_real());
  return report_from_t(n, ts);
}

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd out(m.n, m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) out(i, j) = m.at(i, j);
  return out;
}

// Groups sorted eigenvalues into clusters of radius tol.
std::vector<std::pair<double, int>> cluster(const Eigen::VectorXd& ev, double tol) {
  std::vector<std::pair<double, int>> out;
  for (int i = 0; i < ev.size(); ++i) {
    if (!out.empty() && std::abs(ev(i) - out.back().first) <= tol) {
      out.back().first =
          (out.back().first * out.back().second + ev(i)) / (out.back().second + 1);
      ++out.back().second;
    } else {
      out.emplace_back(ev(i), 1);
    }
  }
  return out;
}

}  // namespace

EtfReport etf_check(const ComplexMatrix& s, double tol) {
  EtfReport rep;
  rep.n = s.n;
  Eigen::MatrixXcd m = to_eigen(s);
  for (int i = 0; i < s.n; ++i) {
    if (std::abs(m(i, i)) > tol) {
      rep.failure = "nonzero diagonal";
      return rep;
    }
    for (int j = 0; j < s.n; ++j) {
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) {
        rep.failure = "matrix is not self-adjoint";
        return rep;
      }
      if (i != j && std::abs(std::abs(m(i, j)) - 1.0) > 1e-6) {
        rep.failure = "off-diagonal entry is not unimodular";
        return rep;
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  auto clusters = cluster(es.eigenvalues(), 1e-7 * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff()));
  if (clusters.size() != 2) {
    rep.failure = "spectrum has " + std::to_string(clusters.size()) + " distinct eigenvalues";
    return rep;
  }
  rep.is_etf = true;
  rep.lambda2 = clusters[0].first;
  rep.lambda1 = clusters[1].first;
  rep.mult2 = clusters[0].second;
  rep.mult1 = clusters[1].second;
  rep.d = static_cast<double>(rep.mult1);
  rep.d_is_integral = true;
  rep.d_int = rep.mult1;
  rep.mu = -1.0 / rep.lambda2;
  rep.t = RealScalar::from_double(rep.lambda1 + rep.lambda2);
  rep.welch_equality = std::abs(rep.mu - welch_bound(rep.n, rep.d_int)) <= 1e-6;
  return rep;
}

double welch_bound(std::int64_t n, std::int64_t d) {
  if (d < 1 || n < d) throw std::invalid_argument("welch bound needs n >= d >= 1");
  if (n == 1) return 0.0;
  return std::sqrt(static_cast<double>(n - d) / static_cast<double>(d * (n - 1)));
}

LineFamily vectors_from_gram(const ComplexMatrix& gram, std::optional<int> expected_rank,
                             double tol) {
  Eigen::MatrixXcd g = to_eigen(gram);
  if ((g - g.adjoint()).cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument("Gram matrix is not self-adjoint");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g);
  const auto& ev = es.eigenvalues();
  double maxev = ev.cwiseAbs().maxCoeff();
  if (ev.minCoeff() < -tol * std::max(1.0, maxev))
    throw std::invalid_argument("Gram matrix is not positive semidefinite");
  int rank = 0;
  for (int i = 0; i < ev.size(); ++i)
    if (ev(i) > 1e-8 * maxev) ++rank;
  if (expected_rank && *expected_rank != rank)
    throw std::invalid_argument("Gram rank " + std::to_string(rank) +
                                " does not match the expected " + std::to_string(*expected_rank));
  LineFamily fam;
  fam.d = rank;
  fam.n = gram.n;
  fam.vectors.assign(gram.n, std::vector<std::complex<double>>(rank));
  for (int c = 0; c < gram.n; ++c) {
    for (int t = 0; t < rank; ++t) {
      int col = static_cast<int>(ev.size()) - 1 - t;  // largest eigenvalues first
      fam.vectors[c][t] = std::sqrt(ev(col)) * std::conj(es.eigenvectors()(c, col));
    }
  }
  return fam;
}

SignatureMatrix hadamard_power(const SignatureMatrix& s, int k) {
  if (k < 1) throw std::invalid_argument("Hadamard power needs k >= 1");
  SignatureMatrix out(s.n(), s.level());
  for (int i = 0; i < s.n(); ++i)
    for (int j = i + 1; j < s.n(); ++j)
      out.set_pair(i, j, static_cast<int>((static_cast<std::int64_t>(s.at(i, j)) * k) % s.level()));
  return out;
}

ComplexMatrix hadamard_power(const ComplexMatrix& s, int k) {
  if (k < 1) throw std::invalid_argument("Hadamard power needs k >= 1");
  ComplexMatrix out(s.n);
  for (std::size_t idx = 0; idx < s.a.size(); ++idx) out.a[idx] = std::pow(s.a[idx], k);
  for (int i = 0; i < s.n; ++i) out.at(i, i) = 0.0;
  return out;
}

SignatureMatrix normalize_signature(const SignatureMatrix& s) {
  SignatureMatrix out(s.n(), s.level());
  for (int i = 0; i < s.n(); ++i) {
    int di = i == 0 ? 0 : s.at(0, i);
    for (int j = i + 1; j < s.n(); ++j) {
      int dj = j == 0 ? 0 : s.at(0, j);
      out.set_pair(i, j, di + s.at(i, j) - dj);
    }
  }
  return out;
}

ComplexMatrix normalize_signature(const ComplexMatrix& s) {
  ComplexMatrix out(s.n);
  std::vector<std::complex<double>> d(s.n, 1.0);
  for (int i = 1; i < s.n; ++i) {
    std::complex<double> v = s.at(0, i);
    d[i] = std::abs(v) > 1e-12 ? v / std::abs(v) : 1.0;
  }
  for (int i = 0; i < s.n; ++i)
    for (int j = 0; j < s.n; ++j)
      out.at(i, j) = i == j ? 0.0 : d[i] * s.at(i, j) * std::conj(d[j]);
  return out;
}

RouxLinesVerdict detect_roux_lines(const SignatureMatrix& s) {
  SignatureMatrix norm = normalize_signature(s);
  const int L = norm.level();
  int g = L;
  for (int i = 0; i < norm.n(); ++i)
    for (int j = 0; j < norm.n(); ++j)
      if (i != j) g = std::gcd(g, norm.at(i, j) == 0 ? L : norm.at(i, j));
  int r = L / g;

  // re-express at level r
  SignatureMatrix reduced(norm.n(), r);
  for (int i = 0; i < norm.n(); ++i)
    for (int j = i + 1; j < norm.n(); ++j) reduced.set_pair(i, j, norm.at(i, j) / g);

  for (int k = 1; k <= r; ++k) {
    EtfReport rep = etf_check(hadamard_power(reduced, k));
    if (!rep.is_etf)
      return RouxLinesNo{k, "Hadamard power " + std::to_string(k) +
                                " is not an ETF signature: " + rep.failure};
  }

  Roux b(make_group({r}), reduced.n());
  for (int i = 0; i < reduced.n(); ++i)
    for (int j = 0; j < reduced.n(); ++j)
      if (i != j) b.set(i, j, reduced.at(i, j));
  require_roux(b);
  return RouxLinesYes{r, std::move(b)};
}

namespace {

std::optional<SignatureMatrix> snap_to_roots(const ComplexMatrix& s, double tol, int max_order) {
  for (int r = 1; r <= max_order; ++r) {
    bool ok = true;
    SignatureMatrix sig(s.n, r);
    for (int i = 0; i < s.n && ok; ++i) {
      for (int j = i + 1; j < s.n && ok; ++j) {
        std::complex<double> v = s.at(i, j);
        double ang = std::arg(v) / (2.0 * std::numbers::pi) * r;
        double rounded = std::round(ang);
        if (std::abs(ang - rounded) > tol * r * 10 + 1e-7) {
          ok = false;
          break;
        }
        int e = static_cast<int>(rounded) % r;
        if (e < 0) e += r;
        sig.set_pair(i, j, e);
      }
    }
    if (ok) return sig;
  }
  return std::nullopt;
}

}  // namespace

RouxLinesVerdict detect_roux_lines(const ComplexMatrix& s, double tol, int max_order) {
  ComplexMatrix norm = normalize_signature(s);
  EtfReport first = etf_check(norm, tol);
  if (!first.is_etf) return RouxLinesNo{1, "not an ETF signature: " + first.failure};
  auto snapped = snap_to_roots(norm, tol, max_order);
  if (!snapped)
    return RouxLinesNo{0, "entries are not roots of unity of order <= " +
                              std::to_string(max_order)};
  return detect_roux_lines(*snapped);
}

bool detect_real_lines(const SignatureMatrix& s) {
  SignatureMatrix t = hadamard_power(s, 2);
  const int n = t.n();
  const int L = t.level();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      auto counts = cell_demand(t, i, j);
      std::vector<Rational> coeffs(counts.begin(), counts.end());
      Cyclotomic lhs = Cyclotomic::from_exponents(L, coeffs);
      if (lhs != Cyclotomic(Rational(n - 2))) return false;
    }
  }
  return true;
}

bool detect_real_lines(const ComplexMatrix& s, double tol) {
  ComplexMatrix t = hadamard_power(s, 2);
  Eigen::MatrixXcd m = to_eigen(t);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  int n = s.n;
  int count_neg1 = 0, count_top = 0;
  for (int i = 0; i < ev.size(); ++i) {
    if (std::abs(ev(i) + 1.0) <= tol * n)
      ++count_neg1;
    else if (std::abs(ev(i) - (n - 1.0)) <= tol * n)
      ++count_top;
    else
      return false;
  }
  return count_top == 1 && count_neg1 == n - 1;
}

bool real_roux_criterion(const RouxParameters& params, const Character& alpha) {
  const AbelianGroup& G = params.group;
  int E = G.exponent();
  for (int g = 0; g < G.order(); ++g) {
    if (params.c[g] == 0) continue;
    int e = alpha.exponent_at(g);
    if (!(e == 0 || 2 * e == E)) return false;
  }
  return true;
}

namespace {

// t with (S^2) = (n-1) I + t S, exact, or nullopt when the identity fails.
std::optional<RealScalar> quadratic_scalar(const SignatureMatrix& s) {
  const int n = s.n();
  const int L = s.level();
  std::vector<std::int64_t> first;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      auto demand = cell_demand(s, i, j);
      if (first.empty()) {
        first = demand;
      } else if (demand != first) {
        Cyclotomic a = Cyclotomic::from_exponents(
            L, std::vector<Rational>(first.begin(), first.end()));
        Cyclotomic b = Cyclotomic::from_exponents(
            L, std::vector<Rational>(demand.begin(), demand.end()));
        if (a != b) return std::nullopt;
      }
    }
  }
  Cyclotomic t = Cyclotomic::from_exponents(
      L, std::vector<Rational>(first.begin(), first.end()));
  if (!t.is_real()) return std::nullopt;
  return t.is_rational() ? RealScalar::from_rational(t.rational_value())
                         : RealScalar::from_double(t.to_real());
}

}  // namespace

DracknLinesVerdict detect_drackn_lines(const SignatureMatrix& s) {
  SignatureMatrix norm = normalize_signature(s);
  const int L = norm.level();
  int g = L;
  for (int i = 0; i < norm.n(); ++i)
    for (int j = 0; j < norm.n(); ++j)
      if (i != j) g = std::gcd(g, norm.at(i, j) == 0 ? L : norm.at(i, j));
  int r = L / g;
  if (r == 1) return DracknLinesNo{0, "normalized signature is the all-ones pattern (r = 1)"};

  SignatureMatrix reduced(norm.n(), r);
  for (int i = 0; i < norm.n(); ++i)
    for (int j = i + 1; j < norm.n(); ++j) reduced.set_pair(i, j, norm.at(i, j) / g);

  std::optional<RealScalar> shared;
  for (int k = 1; k <= r - 1; ++k) {
    auto t = quadratic_scalar(hadamard_power(reduced, k));
    if (!t)
      return DracknLinesNo{k, "Hadamard power " + std::to_string(k) +
                                  " does not have a two-point spectrum"};
    if (!shared) {
      shared = t;
    } else if (std::abs(shared->value - t->value) > 1e-12 * std::max(1.0, std::abs(shared->value)) ||
               (shared->rational && t->rational && !(shared->exact == t->exact))) {
      return DracknLinesNo{k, "Hadamard power " + std::to_string(k) +
                                  " has a different spectrum than power 1"};
    }
  }
  double tv = shared->value;
  double disc = std::sqrt(tv * tv + 4.0 * (norm.n() - 1));
  return DracknLinesYes{r, (tv + disc) / 2.0, (tv - disc) / 2.0};
}

DracknLinesVerdict detect_drackn_lines(const ComplexMatrix& s, double tol, int max_order) {
  ComplexMatrix norm = normalize_signature(s);
  auto snapped = snap_to_roots(norm, tol, max_order);
  if (!snapped)
    return DracknLinesNo{0, "entries are not roots of unity of order <= " +
                                std::to_string(max_order)};
  return detect_drackn_lines(*snapped);
}

namespace {

std::int64_t squarefree_part(std::int64_t v) {
  std::int64_t s = 1;
  for (std::int64_t p = 2; p * p <= v; ++p) {
    int e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    if (e % 2) s *= p;
  }
  return s * v;
}

}  // namespace

QIntegrality integrality_q(std::int64_t n, std::int64_t d, std::int64_t r) {
  if (d < 1 || n <= d) throw std::invalid_argument("integrality screen needs n > d >= 1");
  QIntegrality out;
  out.q = Rational((n - 2 * d) * (n - 2 * d)) * Rational(n - 1) / (Rational(d) * Rational(n - d));
  out.q_integer = out.q.is_integer();
  if (!out.q_integer) {
    out.sqrt_integer = false;
    out.sqrt_in_z_omega = TriState::kNo;  // sqrt(q) would not be an algebraic integer
    return out;
  }
  std::int64_t q = out.q.num();
  out.sqrt_integer = is_perfect_square(q);
  if (q == 0 || out.sqrt_integer) {
    out.sqrt_in_z_omega = TriState::kYes;
    return out;
  }
  // Q(sqrt(s)) lies in the r-th cyclotomic field iff its discriminant divides r.
  std::int64_t s = squarefree_part(q);
  if (s % 4 == 1) {
    out.sqrt_in_z_omega = (r % s == 0) ? TriState::kYes : TriState::kNo;
  } else {
    out.sqrt_in_z_omega = (r % (4 * s) == 0) ? TriState::kYes : TriState::kNo;
  }
  return out;
}

}  // namespace rouxlab
