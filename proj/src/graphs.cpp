#include "rouxlab/graphs.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>

#include "rouxlab/scheme.hpp"

namespace rouxlab {

RouxGraph roux_graph(const Roux& b) {
  require_roux(b);
  return RouxGraph{b, expand(GroupRingMatrix::indicator(b)), b.n(), b.group().order()};
}

std::vector<SpectrumEntry> spectrum(const Roux& b) {
  RouxParameters params = require_roux(b);
  const AbelianGroup& G = b.group();
  const int n = b.n();
  std::vector<SpectrumEntry> out;
  for (int a = 0; a < G.order(); ++a) {
    Character alpha(G, a);
    Cyclotomic chat = hat_c(params.c, alpha);
    if (!chat.is_real()) throw std::logic_error("Fourier transform of roux parameters not real");
    RealScalar cs = chat.is_rational() ? RealScalar::from_rational(chat.rational_value())
                                       : RealScalar::from_double(chat.to_real());
    for (int eps : {+1, -1}) {
      SpectrumEntry e;
      e.alpha_index = a;
      e.eps = eps;
      e.c_hat = cs;
      double disc = std::sqrt(cs.value * cs.value + 4.0 * (n - 1));
      e.value = (cs.value + eps * disc) / 2.0;
      double mu = e.value / (n - 1);
      double d = n / (1.0 + (n - 1) * mu * mu);
      double rounded = std::round(d);
      if (std::abs(d - rounded) > 1e-6)
        throw std::logic_error("idempotent rank is not an integer");
      e.multiplicity = static_cast<std::int64_t>(rounded);
      out.push_back(e);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const SpectrumEntry& x, const SpectrumEntry& y) { return x.value < y.value; });
  return out;
}

std::vector<double> numeric_spectrum(const IntMatrix& adjacency) {
  Eigen::MatrixXd m(adjacency.n, adjacency.n);
  for (int i = 0; i < adjacency.n; ++i)
    for (int j = 0; j < adjacency.n; ++j) m(i, j) = static_cast<double>(adjacency.at(i, j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + adjacency.n);
  return out;
}

std::vector<std::vector<int>> bfs_distances(const IntMatrix& adjacency) {
  const int n = adjacency.n;
  std::vector<std::vector<int>> neighbors(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (adjacency.at(i, j)) neighbors[i].push_back(j);
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::deque<int> queue{s};
    dist[s][s] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : neighbors[u]) {
        if (dist[s][v] < 0) {
          dist[s][v] = dist[s][u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  return dist;
}

int graph_diameter(const IntMatrix& adjacency) {
  auto dist = bfs_distances(adjacency);
  int diam = 0;
  for (const auto& row : dist)
    for (int d : row) {
      if (d < 0) return -1;  // disconnected
      diam = std::max(diam, d);
    }
  return diam;
}

int components(const Roux& b) {
  MinimalGroupResult mg = minimal_group(b);
  int formula = b.group().order() / static_cast<int>(mg.members.size());

  IntMatrix adj = expand(GroupRingMatrix::indicator(b));
  std::vector<std::vector<int>> neighbors(adj.n);
  for (int i = 0; i < adj.n; ++i)
    for (int j = 0; j < adj.n; ++j)
      if (adj.at(i, j)) neighbors[i].push_back(j);
  std::vector<char> seen(adj.n, 0);
  int count = 0;
  for (int s = 0; s < adj.n; ++s) {
    if (seen[s]) continue;
    ++count;
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : neighbors[u])
        if (!seen[v]) {
          seen[v] = 1;
          queue.push_back(v);
        }
    }
  }
  if (count != formula)
    throw std::logic_error("component count disagrees with [Gamma : Lambda]");
  return count;
}

std::optional<DracknParameters> drackn_check(const Roux& b) {
  RouxParameters params = require_roux(b);
  const AbelianGroup& G = b.group();
  const int r = G.order();
  const int n = b.n();
  if (r < 2) return std::nullopt;  // a cover needs fibres of size >= 2

  std::int64_t c = params.c[1 % r];
  if (c <= 0) return std::nullopt;
  for (int g = 1; g < r; ++g)
    if (params.c[g] != c) return std::nullopt;
  if (params.c[0] != n - c * (r - 1) - 2) return std::nullopt;

  // Combinatorial confirmation of (D1)-(D3).
  IntMatrix adj = expand(GroupRingMatrix::indicator(b));
  auto dist = bfs_distances(adj);
  int diam = 0;
  for (const auto& row : dist)
    for (int d : row) {
      if (d < 0) return std::nullopt;  // disconnected
      diam = std::max(diam, d);
    }
  if (diam != 3) return std::nullopt;

  const int N = adj.n;
  for (int u = 0; u < N; ++u) {
    for (int v = 0; v < N; ++v) {
      // (D2): antipodality along fibres
      bool same_fibre = u != v && u / r == v / r;
      if (u != v && (dist[u][v] == diam) != same_fibre) return std::nullopt;
      // (D1): common neighbors at distance 2
      if (dist[u][v] == 2) {
        std::int64_t common = 0;
        for (int w = 0; w < N; ++w)
          if (adj.at(u, w) && adj.at(v, w)) ++common;
        if (common != c) return std::nullopt;
      }
    }
  }
  // (D3): perfect matchings between distinct fibres
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int g = 0; g < r; ++g) {
        int degree = 0;
        for (int h = 0; h < r; ++h) degree += static_cast<int>(adj.at(i * r + g, j * r + h));
        if (degree != 1) return std::nullopt;
      }
    }
  }

  DracknParameters out;
  out.n = n;
  out.r = r;
  out.c = c;
  out.delta = n - out.r * c - 2;
  return out;
}

namespace {

// Permutation of [r] encoded as images; composition (a then b) = b after a.
using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

}  // namespace

std::variant<Roux, DracknToRouxError> drackn_to_roux(const IntMatrix& adjacency,
                                                     int fibre_size) {
  const int N = adjacency.n;
  const int r = fibre_size;
  if (r < 1 || N % r != 0) return DracknToRouxError{"fibre size does not divide the order"};
  const int n = N / r;
  if (n < 2) return DracknToRouxError{"need at least two fibres"};

  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (adjacency.at(i, j) != adjacency.at(j, i))
        return DracknToRouxError{"adjacency is not symmetric"};
      if (adjacency.at(i, j) != 0 && adjacency.at(i, j) != 1)
        return DracknToRouxError{"adjacency is not a 0/1 matrix"};
    }

  // Fibre blocks: zero on the diagonal, permutation matrices elsewhere.
  std::map<Perm, int> perm_ids;
  std::vector<Perm> perms;
  std::vector<std::vector<int>> block(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        for (int g = 0; g < r; ++g)
          for (int h = 0; h < r; ++h)
            if (adjacency.at(i * r + g, j * r + h))
              return DracknToRouxError{"fibres are not independent sets"};
        continue;
      }
      Perm p(r, -1);
      for (int h = 0; h < r; ++h) {
        int image = -1;
        for (int g = 0; g < r; ++g) {
          if (adjacency.at(i * r + g, j * r + h)) {
            if (image >= 0) return DracknToRouxError{"block is not a perfect matching"};
            image = g;
          }
        }
        if (image < 0) return DracknToRouxError{"block is not a perfect matching"};
        p[h] = image;  // column h connects to row p[h]: the permutation with
                       // matrix equal to this block
      }
      std::set<int> images(p.begin(), p.end());
      if (static_cast<int>(images.size()) != r)
        return DracknToRouxError{"block is not a permutation matrix"};
      auto it = perm_ids.find(p);
      if (it == perm_ids.end()) {
        it = perm_ids.emplace(p, static_cast<int>(perms.size())).first;
        perms.push_back(p);
      }
      block[i][j] = it->second;
    }
  }

  // Close the blocks into a permutation group and check commutativity.
  Perm identity(r);
  for (int g = 0; g < r; ++g) identity[g] = g;
  if (!perm_ids.count(identity)) {
    perm_ids.emplace(identity, static_cast<int>(perms.size()));
    perms.push_back(identity);
  }
  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (std::size_t j = 0; j < perms.size(); ++j) {
      Perm p = compose(perms[i], perms[j]);
      if (!perm_ids.count(p)) {
        perm_ids.emplace(p, static_cast<int>(perms.size()));
        perms.push_back(p);
      }
      if (compose(perms[j], perms[i]) != p)
        return DracknToRouxError{"matching permutations generate a non-abelian group"};
    }
  }
  // semiregularity: a non-identity element must not fix a point
  for (const auto& p : perms) {
    bool is_id = p == identity;
    for (int g = 0; g < r && !is_id; ++g)
      if (p[g] == g) return DracknToRouxError{"matching group is not semiregular"};
  }

  std::vector<Perm> full = perms;
  if (static_cast<int>(full.size()) < r) {
    // Extend the semiregular abelian group to a regular one by cycling orbits
    // with an equivariant permutation.
    int m = static_cast<int>(full.size());
    if (r % m != 0) return DracknToRouxError{"matching group orbits do not tile the fibre"};
    std::vector<int> orbit_of(r, -1), rep_of(r, -1);
    std::vector<int> reps;
    for (int g = 0; g < r; ++g) {
      if (orbit_of[g] >= 0) continue;
      int o = static_cast<int>(reps.size());
      reps.push_back(g);
      for (const auto& p : full) {
        orbit_of[p[g]] = o;
        rep_of[p[g]] = g;
      }
    }
    int k = static_cast<int>(reps.size());
    Perm lambda(r);
    for (int g = 0; g < r; ++g) {
      // g = p(rep): map to p(next orbit's rep)
      int o = orbit_of[g];
      int next_rep = reps[(o + 1) % k];
      for (const auto& p : full) {
        if (p[rep_of[g]] == g) {
          lambda[g] = p[next_rep];
          break;
        }
      }
    }
    std::map<Perm, int> seen;
    for (const auto& p : full) seen.emplace(p, 1);
    std::vector<Perm> frontier{lambda};
    while (!frontier.empty()) {
      std::vector<Perm> next;
      for (const auto& q : frontier) {
        if (seen.emplace(q, 1).second) {
          for (const auto& p : std::vector<Perm>(full)) next.push_back(compose(p, q));
          full.push_back(q);
        }
      }
      frontier = std::move(next);
    }
    std::vector<Perm> closed;
    std::map<Perm, int> dedup;
    for (const auto& p : full)
      if (dedup.emplace(p, 1).second) closed.push_back(p);
    full = std::move(closed);
    for (std::size_t i = 0; i < full.size(); ++i)
      for (std::size_t j = 0; j < full.size(); ++j)
        if (compose(full[i], full[j]) != compose(full[j], full[i]))
          return DracknToRouxError{"orbit extension failed to stay abelian"};
    if (static_cast<int>(full.size()) != r)
      return DracknToRouxError{"could not extend the matching group to a regular one"};
  }

  // Identify the abstract abelian group of the full permutation set.
  std::map<Perm, int> full_ids;
  for (std::size_t i = 0; i < full.size(); ++i) full_ids.emplace(full[i], static_cast<int>(i));
  std::vector<int> ids(full.size());
  for (std::size_t i = 0; i < full.size(); ++i) ids[i] = static_cast<int>(i);
  auto op = [&](int a, int b) { return full_ids.at(compose(full[a], full[b])); };
  AbelianStructure structure = decompose_generic(ids, op, full_ids.at(identity));

  Roux b(structure.group, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) b.set(i, j, structure.to_abstract.at(full_ids.at(perms[block[i][j]])));
  auto verification = verify_roux(b);
  if (auto* err = std::get_if<RouxError>(&verification))
    return DracknToRouxError{"cover blocks do not satisfy the roux identity: " + err->message};
  return b;
}

bool distance_regular_check(const Roux& b) {
  RouxParameters params = require_roux(b);
  for (int g = 0; g < b.group().order(); ++g)
    if (params.c[g] <= 0)
      throw std::invalid_argument("distance-regularity check requires all c_g > 0");

  MinimalGroupResult mg = minimal_group(b);
  if (static_cast<int>(mg.members.size()) != b.group().order()) return false;

  // distinct eigenvalues = 2 * (distinct c_hat values), exactly
  std::vector<Cyclotomic> values;
  for (int a = 0; a < b.group().order(); ++a) {
    Cyclotomic chat = hat_c(params.c, Character(b.group(), a));
    bool found = false;
    for (const auto& v : values)
      if (v == chat) {
        found = true;
        break;
      }
    if (!found) values.push_back(chat);
  }
  return values.size() == 2;
}

bool distance_regular_bruteforce(const IntMatrix& adjacency) {
  auto dist = bfs_distances(adjacency);
  const int N = adjacency.n;
  int diam = 0;
  for (const auto& row : dist)
    for (int d : row) {
      if (d < 0) return false;
      diam = std::max(diam, d);
    }
  // intersection numbers p^h_{ij} must depend only on (h, i, j)
  std::map<std::tuple<int, int, int>, std::int64_t> table;
  for (int u = 0; u < N; ++u) {
    for (int v = 0; v < N; ++v) {
      int h = dist[u][v];
      for (int i = 0; i <= diam; ++i) {
        for (int j = 0; j <= diam; ++j) {
          std::int64_t count = 0;
          for (int w = 0; w < N; ++w)
            if (dist[u][w] == i && dist[w][v] == j) ++count;
          auto key = std::make_tuple(h, i, j);
          auto it = table.find(key);
          if (it == table.end())
            table.emplace(key, count);
          else if (it->second != count)
            return false;
        }
      }
    }
  }
  return true;
}

Roux odd_prime_quotient(const Roux& b, int p) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("p must be an odd prime");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("p must be an odd prime");
  const AbelianGroup& G = b.group();
  if (G.order() % p != 0) throw std::invalid_argument("p does not divide the group order");
  if (components(b) != 1) throw std::invalid_argument("roux graph must be connected");

  // surjection through the first factor with p | m_j: residue mod p
  int target = -1;
  for (std::size_t j = 0; j < G.orders().size(); ++j)
    if (G.orders()[j] % p == 0) {
      target = static_cast<int>(j);
      break;
    }
  if (target < 0)
    throw std::invalid_argument("no cyclic factor order is divisible by p");

  AbelianGroup cp = make_group({p});
  std::vector<int> images(G.orders().size(), 0);
  images[static_cast<std::size_t>(target)] = 1 % p;
  Homomorphism phi(G, cp, images);
  Roux out = pushforward(b, phi);

  if (!drackn_check(out))
    throw std::logic_error("odd-prime quotient failed to produce an abelian drackn");
  return out;
}

}  // namespace rouxlab
