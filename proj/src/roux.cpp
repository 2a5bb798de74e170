#include "rouxlab/roux.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rouxlab {

Roux::Roux(AbelianGroup group, int n)
    : group_(std::move(group)), n_(n), cells_(static_cast<std::size_t>(n) * n, kZero) {
  if (n < 2) throw std::invalid_argument("roux size must be >= 2");
}

void Roux::set_pair(int i, int j, int value) {
  set(i, j, value);
  set(j, i, group_.neg(value));
}

std::int64_t RouxParameters::sum() const {
  std::int64_t s = 0;
  for (auto v : c) s += v;
  return s;
}

bool RouxParameters::inverse_symmetric() const {
  for (int g = 0; g < group.order(); ++g)
    if (c[g] != c[group.neg(g)]) return false;
  return true;
}

VerifyResult verify_roux(const Roux& b) {
  const AbelianGroup& G = b.group();
  const int n = b.n();
  const int r = G.order();

  for (int i = 0; i < n; ++i) {
    if (b.at(i, i) != Roux::kZero) {
      return RouxError{RouxError::Kind::R1, i, i, "diagonal cell is not zero"};
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      int v = b.at(i, j);
      if (v < 0 || v >= r) {
        return RouxError{RouxError::Kind::R2, i, j, "off-diagonal cell is not a group element"};
      }
      if (b.at(j, i) != G.neg(v)) {
        return RouxError{RouxError::Kind::R3, i, j,
                         "entry(j,i) is not the inverse of entry(i,j)"};
      }
    }
  }

  // (B^2)_ii = (n-1) * identity is forced by (R1)-(R3); the off-diagonal cells
  // must demand one global parameter map c with (B^2)_ij = sum_g c_g (gB)_ij.
  std::vector<std::int64_t> candidate;
  int ref_i = -1, ref_j = -1;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(r));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      std::fill(counts.begin(), counts.end(), 0);
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        ++counts[static_cast<std::size_t>(G.add(b.at(i, k), b.at(k, j)))];
      }
      // coefficient of h in (B^2)_ij demands c_g = counts[g + B_ij]
      std::vector<std::int64_t> demand(static_cast<std::size_t>(r));
      for (int g = 0; g < r; ++g)
        demand[static_cast<std::size_t>(g)] = counts[static_cast<std::size_t>(G.add(g, b.at(i, j)))];
      if (candidate.empty()) {
        candidate = demand;
        ref_i = i;
        ref_j = j;
      } else if (demand != candidate) {
        RouxError e{RouxError::Kind::R4, i, j,
                    "off-diagonal cells of B^2 demand conflicting parameter maps"};
        e.demanded_ref = candidate;
        e.demanded_here = demand;
        e.ref_i = ref_i;
        e.ref_j = ref_j;
        return e;
      }
    }
  }
  if (candidate.empty()) candidate.assign(static_cast<std::size_t>(r), 0);

  RouxParameters params{G, std::move(candidate)};
  if (params.sum() != n - 2 || !params.inverse_symmetric()) {
    // cannot happen for a grid passing the checks above; guards the extractor
    return RouxError{RouxError::Kind::R4, -1, -1,
                     "extracted parameters violate the sum or symmetry constraints"};
  }
  return params;
}

RouxParameters require_roux(const Roux& b) {
  auto res = verify_roux(b);
  if (auto* p = std::get_if<RouxParameters>(&res)) return std::move(*p);
  const auto& e = std::get<RouxError>(res);
  std::ostringstream os;
  os << "not a roux: " << e.message;
  if (e.i >= 0) os << " at cell (" << e.i << "," << e.j << ")";
  throw std::invalid_argument(os.str());
}

bool is_roux(const Roux& b) { return std::holds_alternative<RouxParameters>(verify_roux(b)); }

Roux switch_roux(const Roux& b, const std::vector<int>& d) {
  if (static_cast<int>(d.size()) != b.n())
    throw std::invalid_argument("switching vector length must equal n");
  const AbelianGroup& G = b.group();
  Roux out(G, b.n());
  for (int i = 0; i < b.n(); ++i) {
    for (int j = 0; j < b.n(); ++j) {
      if (i == j) continue;
      out.set(i, j, G.add(G.add(d[i], b.at(i, j)), G.neg(d[j])));
    }
  }
  return out;
}

Roux normalize(const Roux& b) {
  std::vector<int> d(static_cast<std::size_t>(b.n()), b.group().identity());
  for (int j = 1; j < b.n(); ++j) d[j] = b.at(0, j);
  return switch_roux(b, d);
}

Roux scale(const Roux& b, int h) {
  const AbelianGroup& G = b.group();
  if (G.add(h, h) != G.identity())
    throw std::invalid_argument("scaling element must satisfy h^2 = identity");
  Roux out(G, b.n());
  for (int i = 0; i < b.n(); ++i)
    for (int j = 0; j < b.n(); ++j)
      if (i != j) out.set(i, j, G.add(h, b.at(i, j)));
  return out;
}

Roux pushforward(const Roux& b, const Homomorphism& phi) {
  if (phi.from() != b.group()) throw std::invalid_argument("homomorphism domain mismatch");
  Roux out(phi.to(), b.n());
  for (int i = 0; i < b.n(); ++i)
    for (int j = 0; j < b.n(); ++j)
      if (i != j) out.set(i, j, phi(b.at(i, j)));
  return out;
}

Roux embed(const Roux& b, const Homomorphism& injection) {
  if (!injection.is_injective())
    throw std::invalid_argument("embedding requires an injective homomorphism");
  return pushforward(b, injection);
}

MinimalGroupResult minimal_group(const Roux& b) {
  RouxParameters params = require_roux(b);
  const AbelianGroup& G = b.group();
  std::vector<int> support;
  for (int g = 0; g < G.order(); ++g)
    if (params.c[g] != 0) support.push_back(g);
  std::vector<int> members = subgroup_generated(G, support);
  std::set<int> member_set(members.begin(), members.end());

  Roux norm = normalize(b);
  for (int i = 0; i < norm.n(); ++i) {
    for (int j = 0; j < norm.n(); ++j) {
      if (i != j && !member_set.count(norm.at(i, j)))
        throw std::logic_error(
            "normalized roux escaped the subgroup generated by the parameter support");
    }
  }

  AbelianStructure structure = decompose_subgroup(G, members);
  Roux reduced(structure.group, norm.n());
  for (int i = 0; i < norm.n(); ++i)
    for (int j = 0; j < norm.n(); ++j)
      if (i != j) reduced.set(i, j, structure.to_abstract.at(norm.at(i, j)));

  return MinimalGroupResult{std::move(members), std::move(structure), std::move(reduced)};
}

}  // namespace rouxlab
