#include "rouxlab/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace rouxlab {

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y) {
  if (x.n != y.n) throw std::invalid_argument("matrix size mismatch");
  IntMatrix out(x.n);
  for (int i = 0; i < x.n; ++i) {
    for (int k = 0; k < x.n; ++k) {
      std::int64_t v = x.at(i, k);
      if (v == 0) continue;
      const std::int64_t* yrow = &y.a[static_cast<std::size_t>(k) * y.n];
      std::int64_t* orow = &out.a[static_cast<std::size_t>(i) * out.n];
      for (int j = 0; j < x.n; ++j) orow[j] += v * yrow[j];
    }
  }
  return out;
}

GroupRingMatrix::GroupRingMatrix(AbelianGroup group, int n)
    : group_(std::move(group)),
      n_(n),
      cells_(static_cast<std::size_t>(n) * n * group_.order(), 0) {}

GroupRingMatrix GroupRingMatrix::indicator(const Roux& b) {
  GroupRingMatrix m(b.group(), b.n());
  for (int i = 0; i < b.n(); ++i)
    for (int j = 0; j < b.n(); ++j)
      if (i != j) m.add_coeff(i, j, b.at(i, j), 1);
  return m;
}

GroupRingMatrix GroupRingMatrix::translate_b(const Roux& b, int g) {
  GroupRingMatrix m(b.group(), b.n());
  for (int i = 0; i < b.n(); ++i)
    for (int j = 0; j < b.n(); ++j)
      if (i != j) m.add_coeff(i, j, b.group().add(g, b.at(i, j)), 1);
  return m;
}

GroupRingMatrix GroupRingMatrix::translate_i(const AbelianGroup& group, int n, int g) {
  GroupRingMatrix m(group, n);
  for (int i = 0; i < n; ++i) m.add_coeff(i, i, g, 1);
  return m;
}

GroupRingMatrix GroupRingMatrix::operator*(const GroupRingMatrix& o) const {
  if (group_ != o.group_ || n_ != o.n_) throw std::invalid_argument("matrix shape mismatch");
  const int r = group_.order();
  GroupRingMatrix out(group_, n_);
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      for (int g = 0; g < r; ++g) {
        std::int64_t v = coeff(i, k, g);
        if (v == 0) continue;
        for (int j = 0; j < n_; ++j) {
          for (int h = 0; h < r; ++h) {
            std::int64_t w = o.coeff(k, j, h);
            if (w != 0) out.add_coeff(i, j, group_.add(g, h), v * w);
          }
        }
      }
    }
  }
  return out;
}

IntMatrix expand(const GroupRingMatrix& m) {
  const int r = m.group().order();
  const int N = m.n() * r;
  IntMatrix out(N);
  for (int i = 0; i < m.n(); ++i) {
    for (int j = 0; j < m.n(); ++j) {
      for (int x = 0; x < r; ++x) {
        std::int64_t v = m.coeff(i, j, x);
        if (v == 0) continue;
        // circulant block: entry ((i,g),(j,h)) with g = x + h
        for (int h = 0; h < r; ++h) {
          int g = m.group().add(x, h);
          out.at(i * r + g, j * r + h) += v;
        }
      }
    }
  }
  return out;
}

namespace {

ZeroOneMatrix to_zero_one(const IntMatrix& m, const std::string& label) {
  ZeroOneMatrix z(m.n, label);
  for (std::size_t idx = 0; idx < m.a.size(); ++idx) {
    if (m.a[idx] == 1)
      z.a[idx] = 1;
    else if (m.a[idx] != 0)
      throw std::logic_error("expansion produced a non-0/1 matrix");
  }
  return z;
}

}  // namespace

AdjacencySet roux_scheme(const Roux& b) {
  require_roux(b);
  const AbelianGroup& G = b.group();
  AdjacencySet s;
  s.n = b.n() * G.order();
  for (int g = 0; g < G.order(); ++g)
    s.matrices.push_back(
        to_zero_one(expand(GroupRingMatrix::translate_i(G, b.n(), g)), "I:" + G.element_str(g)));
  for (int g = 0; g < G.order(); ++g)
    s.matrices.push_back(
        to_zero_one(expand(GroupRingMatrix::translate_b(b, g)), "B:" + G.element_str(g)));
  return s;
}

SchemeCheck check_scheme(const AdjacencySet& s) {
  const int n = s.n;
  const int k = static_cast<int>(s.matrices.size());
  if (k == 0) return SchemeError{"empty adjacency set"};
  for (const auto& m : s.matrices)
    if (m.n != n) return SchemeError{"matrices of unequal size"};

  int identity_index = -1;
  for (int i = 0; i < k; ++i) {
    bool is_id = true;
    for (int a = 0; a < n && is_id; ++a)
      for (int b = 0; b < n; ++b)
        if (s.matrices[i].at(a, b) != (a == b ? 1 : 0)) {
          is_id = false;
          break;
        }
    if (is_id) {
      identity_index = i;
      break;
    }
  }
  if (identity_index < 0) return SchemeError{"A1 fails: identity matrix missing"};

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int total = 0;
      for (int i = 0; i < k; ++i) total += s.matrices[i].at(a, b);
      if (total != 1) {
        SchemeError e{"A2 fails: matrices do not sum to the all-ones matrix"};
        e.witness_i = a;
        e.witness_j = b;
        return e;
      }
    }
  }

  // transpose closure
  std::vector<int> transpose_of(k, -1);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      bool eq = true;
      for (int a = 0; a < n && eq; ++a)
        for (int b = 0; b < n; ++b)
          if (s.matrices[i].at(a, b) != s.matrices[j].at(b, a)) {
            eq = false;
            break;
          }
      if (eq) {
        transpose_of[i] = j;
        break;
      }
    }
    if (transpose_of[i] < 0)
      return SchemeError{"A3 fails: set not closed under transpose", i, -1};
  }

  // sparse row lists once, shared by all products
  std::vector<std::vector<std::vector<int>>> rows(k);
  for (int i = 0; i < k; ++i) {
    rows[i].resize(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (s.matrices[i].at(a, b)) rows[i][a].push_back(b);
  }

  SchemeInfo info;
  info.classes = k;
  info.constants.assign(k, std::vector<std::vector<std::int64_t>>(
                               k, std::vector<std::int64_t>(k, 0)));
  // one cell per class where that class is the unique 1 (valid by A2)
  std::vector<std::pair<int, int>> probe(k, {-1, -1});
  for (int i = 0; i < k; ++i) {
    for (int a = 0; a < n && probe[i].first < 0; ++a)
      if (!rows[i][a].empty()) probe[i] = {a, rows[i][a][0]};
    if (probe[i].first < 0) return SchemeError{"zero matrix in adjacency set", i, -1};
  }

  std::vector<std::int64_t> prod(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      std::fill(prod.begin(), prod.end(), 0);
      for (int a = 0; a < n; ++a) {
        std::int64_t* out = &prod[static_cast<std::size_t>(a) * n];
        for (int c : rows[i][a])
          for (int b : rows[j][c]) ++out[b];
      }
      // read off candidate constants, then confirm the whole product
      for (int t = 0; t < k; ++t)
        info.constants[i][j][t] = prod[static_cast<std::size_t>(probe[t].first) * n + probe[t].second];
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          std::int64_t expect = 0;
          for (int t = 0; t < k; ++t)
            if (s.matrices[t].at(a, b)) expect += info.constants[i][j][t];
          if (prod[static_cast<std::size_t>(a) * n + b] != expect) {
            SchemeError e{"A3 fails: product escapes the integer span"};
            e.witness_i = i;
            e.witness_j = j;
            return e;
          }
        }
      }
    }
  }

  info.commutative = true;
  for (int i = 0; i < k && info.commutative; ++i)
    for (int j = 0; j < k && info.commutative; ++j)
      if (info.constants[i][j] != info.constants[j][i]) info.commutative = false;
  return info;
}

SchemeInfo require_scheme(const AdjacencySet& s) {
  auto res = check_scheme(s);
  if (auto* info = std::get_if<SchemeInfo>(&res)) return std::move(*info);
  throw std::invalid_argument("not an association scheme: " + std::get<SchemeError>(res).message);
}

std::complex<double> IdempotentMatrix::entry(int i, int j) const {
  auto rot = [&](int e) {
    double ang = 2.0 * std::numbers::pi * e / thin.level;
    return std::complex<double>(std::cos(ang), std::sin(ang));
  };
  std::complex<double> v(0, 0);
  if (thin.at(i, j) >= 0) v += rot(thin.at(i, j));
  if (thick.at(i, j) >= 0) v += mu.value * rot(thick.at(i, j));
  return v;
}

IdempotentMatrix idempotent_matrix(const Roux& b, const RouxParameters& params,
                                   const Character& alpha, int eps) {
  if (alpha.group() != b.group()) throw std::invalid_argument("character group mismatch");
  const AbelianGroup& G = b.group();
  const int r = G.order();
  const int n = b.n();
  const int L = G.exponent();

  IdempotentMatrix m;
  m.alpha_index = alpha.index();
  m.eps = eps;
  m.thin = ExpMatrix(n * r, L);
  m.thick = ExpMatrix(n * r, L);

  Cyclotomic chat = hat_c(params.c, alpha);
  if (!chat.is_real()) throw std::logic_error("Fourier transform of roux parameters not real");

  if (chat.is_rational()) {
    Rational cr = chat.rational_value();
    m.c_hat = RealScalar::from_rational(cr);
    Rational disc = cr * cr + Rational(4 * (n - 1));
    Rational sqrt_disc;
    if (rational_sqrt(disc, &sqrt_disc)) {
      Rational mu = (cr + Rational(eps) * sqrt_disc) / Rational(2 * (n - 1));
      m.mu = RealScalar::from_rational(mu);
    } else {
      double v = (cr.to_double() + eps * std::sqrt(disc.to_double())) / (2.0 * (n - 1));
      m.mu = RealScalar::from_double(v);
    }
  } else {
    double cv = chat.to_real();
    m.c_hat = RealScalar::from_double(cv);
    m.mu = RealScalar::from_double((cv + eps * std::sqrt(cv * cv + 4.0 * (n - 1))) /
                                   (2.0 * (n - 1)));
  }

  if (m.mu.rational) {
    Rational denom = Rational(1) + Rational(n - 1) * m.mu.exact * m.mu.exact;
    Rational d = Rational(n) / denom;
    m.d = d.to_double();
    m.d_is_integral = d.is_integer();
    if (m.d_is_integral) m.d_int = d.num();
  } else {
    m.d = n / (1.0 + (n - 1) * m.mu.value * m.mu.value);
    double rounded = std::round(m.d);
    m.d_is_integral = std::abs(m.d - rounded) < 1e-6 && rounded > 0;
    if (m.d_is_integral) m.d_int = static_cast<std::int64_t>(rounded);
  }

  // thin part: block-diagonal with entries alpha(g h^-1);
  // thick part: alpha(g h^-1) * conj(alpha(B_ij)) off the block diagonal.
  for (int i = 0; i < n; ++i) {
    for (int g = 0; g < r; ++g) {
      for (int h = 0; h < r; ++h) {
        int e = alpha.exponent_at(G.add(g, G.neg(h)));
        m.thin.set(i * r + g, i * r + h, e);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      int be = alpha.exponent_at(b.at(i, j));
      for (int g = 0; g < r; ++g) {
        for (int h = 0; h < r; ++h) {
          int e = alpha.exponent_at(G.add(g, G.neg(h)));
          m.thick.set(i * r + g, j * r + h, ((e - be) % L + L) % L);
        }
      }
    }
  }
  return m;
}

std::vector<IdempotentMatrix> all_idempotents(const Roux& b, const RouxParameters& params) {
  std::vector<IdempotentMatrix> out;
  for (int a = 0; a < b.group().order(); ++a) {
    Character alpha(b.group(), a);
    out.push_back(idempotent_matrix(b, params, alpha, +1));
    out.push_back(idempotent_matrix(b, params, alpha, -1));
  }
  return out;
}

namespace {

SchemeCheck classes_to_scheme(int n, const std::vector<int>& class_of, int diag_class,
                              int num_classes) {
  AdjacencySet s;
  s.n = n;
  for (int t = 0; t < num_classes; ++t) {
    s.matrices.emplace_back(n, "level-set:" + std::to_string(t));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s.matrices[class_of[static_cast<std::size_t>(i) * n + j]].set(i, j);

  // diagonal value must be its own class, exactly the identity
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool in_diag = class_of[static_cast<std::size_t>(i) * n + j] == diag_class;
      if (in_diag != (i == j))
        return SchemeError{"A1 fails: diagonal value reappears off the diagonal", i, j};
    }
  return check_scheme(s);
}

}  // namespace

SchemeCheck carries_scheme(const ExpMatrix& m) {
  const int n = m.n;
  std::map<int, int> class_ids;  // exponent (or -2 for zero cells... -1 sentinel) -> class
  std::vector<int> class_of(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int key = m.at(i, j);
      auto it = class_ids.emplace(key, static_cast<int>(class_ids.size())).first;
      class_of[static_cast<std::size_t>(i) * n + j] = it->second;
    }
  }
  int diag_class = class_of[0];
  return classes_to_scheme(n, class_of, diag_class, static_cast<int>(class_ids.size()));
}

SchemeCheck carries_scheme(const IdempotentMatrix& m) {
  const int n = m.size();
  std::vector<int> class_of(static_cast<std::size_t>(n) * n, -1);
  int next = 0;
  std::map<std::pair<int, int>, int> by_part;  // (part, exponent) -> class

  if (!m.mu.rational) {
    // |mu| != 1, so thin and thick values can never collide
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::pair<int, int> key = m.thin.at(i, j) >= 0 ? std::make_pair(0, m.thin.at(i, j))
                                                       : std::make_pair(1, m.thick.at(i, j));
        auto [it, ins] = by_part.emplace(key, next);
        if (ins) ++next;
        class_of[static_cast<std::size_t>(i) * n + j] = it->second;
      }
  } else {
    // exact values: mu * zeta^e can merge with zeta^{e'}
    std::vector<std::pair<std::pair<int, int>, Cyclotomic>> values;
    auto value_of = [&](std::pair<int, int> key) {
      Cyclotomic v = Cyclotomic::root_of_unity(m.thin.level, key.second);
      if (key.first == 1) v = v * m.mu.exact;
      return v;
    };
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::pair<int, int> key = m.thin.at(i, j) >= 0 ? std::make_pair(0, m.thin.at(i, j))
                                                       : std::make_pair(1, m.thick.at(i, j));
        auto it = by_part.find(key);
        if (it == by_part.end()) {
          Cyclotomic v = value_of(key);
          int cls = -1;
          for (auto& [k2, v2] : values) {
            if (v2 == v) {
              cls = by_part.at(k2);
              break;
            }
          }
          if (cls < 0) cls = next++;
          values.emplace_back(key, std::move(v));
          it = by_part.emplace(key, cls).first;
        }
        class_of[static_cast<std::size_t>(i) * n + j] = it->second;
      }
  }
  return classes_to_scheme(n, class_of, class_of[0], next);
}

SchemeCheck carries_scheme(const std::vector<std::complex<double>>& cells, int n, double tol) {
  if (static_cast<int>(cells.size()) != n * n)
    throw std::invalid_argument("cell vector has the wrong shape");
  double maxmag = 0;
  for (auto& c : cells) maxmag = std::max(maxmag, std::abs(c));
  double eps = tol * std::max(maxmag, 1.0);

  std::vector<std::complex<double>> reps;
  std::vector<int> class_of(cells.size());
  for (std::size_t idx = 0; idx < cells.size(); ++idx) {
    int cls = -1;
    for (std::size_t t = 0; t < reps.size(); ++t) {
      if (std::abs(cells[idx] - reps[t]) <= eps) {
        cls = static_cast<int>(t);
        break;
      }
    }
    if (cls < 0) {
      cls = static_cast<int>(reps.size());
      reps.push_back(cells[idx]);
    }
    class_of[idx] = cls;
  }
  return classes_to_scheme(n, class_of, class_of[0], static_cast<int>(reps.size()));
}

}  // namespace rouxlab
