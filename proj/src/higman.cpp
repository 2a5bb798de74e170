#include "rouxlab/higman.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rouxlab/galois.hpp"

namespace rouxlab {

namespace {
constexpr int kMaxGroupSize = 200000;
}

FiniteGroup::FiniteGroup(std::vector<std::uint32_t> mul_table, int size,
                         std::vector<std::string> labels)
    : size_(size), mul_(std::move(mul_table)), labels_(std::move(labels)) {
  if (size <= 0 || size > kMaxGroupSize)
    throw std::invalid_argument("group size out of supported range");
  if (mul_.size() != static_cast<std::size_t>(size) * size)
    throw std::invalid_argument("Cayley table has the wrong shape");
  for (auto v : mul_)
    if (v >= static_cast<std::uint32_t>(size))
      throw std::invalid_argument("Cayley table entry out of range");

  // locate the two-sided identity
  bool found = false;
  for (std::uint32_t e = 0; e < static_cast<std::uint32_t>(size_); ++e) {
    bool ok = true;
    for (std::uint32_t a = 0; a < static_cast<std::uint32_t>(size_) && ok; ++a)
      ok = times(e, a) == a && times(a, e) == a;
    if (ok) {
      id_ = e;
      found = true;
      break;
    }
  }
  if (!found) throw std::invalid_argument("Cayley table has no identity");

  inv_.assign(size_, 0);
  for (std::uint32_t a = 0; a < static_cast<std::uint32_t>(size_); ++a) {
    bool ok = false;
    for (std::uint32_t b = 0; b < static_cast<std::uint32_t>(size_); ++b) {
      if (times(a, b) == id_) {
        if (times(b, a) != id_) throw std::invalid_argument("one-sided inverse in table");
        inv_[a] = b;
        ok = true;
        break;
      }
    }
    if (!ok) throw std::invalid_argument("element without inverse in table");
  }

  // associativity spot-check
  std::mt19937 rng(12345);
  std::uniform_int_distribution<std::uint32_t> dist(0, size_ - 1);
  int trials = std::min(2000, size_ * size_);
  for (int t = 0; t < trials; ++t) {
    std::uint32_t a = dist(rng), b = dist(rng), c = dist(rng);
    if (times(times(a, b), c) != times(a, times(b, c)))
      throw std::invalid_argument("Cayley table is not associative");
  }
}

SubgroupHandle::SubgroupHandle(const FiniteGroup& parent, std::vector<std::uint32_t> members)
    : parent_(&parent), members_(std::move(members)), bitmap_(parent.size(), 0) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (auto m : members_) {
    if (m >= static_cast<std::uint32_t>(parent.size()))
      throw std::invalid_argument("subgroup member out of range");
    bitmap_[m] = 1;
  }
  if (!bitmap_[parent.id()]) throw std::invalid_argument("subgroup must contain identity");
  for (auto a : members_) {
    if (!bitmap_[parent.inv(a)]) throw std::invalid_argument("subgroup not closed under inverse");
    for (auto b : members_)
      if (!bitmap_[parent.times(a, b)])
        throw std::invalid_argument("subgroup not closed under multiplication");
  }
}

SubgroupHandle subgroup_closure(const FiniteGroup& g, const std::vector<std::uint32_t>& gens) {
  if (gens.empty()) throw std::invalid_argument("closure needs at least one generator");
  std::vector<char> in(g.size(), 0);
  std::vector<std::uint32_t> members{g.id()};
  in[g.id()] = 1;
  std::vector<std::uint32_t> frontier = members;
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (auto x : frontier) {
      for (auto s : gens) {
        std::uint32_t y = g.times(x, s);
        if (!in[y]) {
          in[y] = 1;
          members.push_back(y);
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  return SubgroupHandle(g, std::move(members));
}

SubgroupHandle normalizer(const FiniteGroup& g, const SubgroupHandle& h) {
  std::vector<std::uint32_t> members;
  for (std::uint32_t a = 0; a < static_cast<std::uint32_t>(g.size()); ++a) {
    std::uint32_t ai = g.inv(a);
    bool ok = true;
    for (auto x : h.members()) {
      if (!h.contains(g.times(g.times(a, x), ai))) {
        ok = false;
        break;
      }
    }
    if (ok) members.push_back(a);
  }
  return SubgroupHandle(g, std::move(members));
}

namespace {

std::vector<std::uint32_t> double_coset_of(const FiniteGroup& g, const SubgroupHandle& h,
                                           std::uint32_t x) {
  std::vector<char> in(g.size(), 0);
  std::vector<std::uint32_t> out;
  for (auto a : h.members()) {
    std::uint32_t ax = g.times(a, x);
    for (auto b : h.members()) {
      std::uint32_t y = g.times(ax, b);
      if (!in[y]) {
        in[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> double_cosets(const FiniteGroup& g,
                                                      const SubgroupHandle& h) {
  std::vector<char> covered(g.size(), 0);
  std::vector<std::vector<std::uint32_t>> cosets;
  for (std::uint32_t x = 0; x < static_cast<std::uint32_t>(g.size()); ++x) {
    if (covered[x]) continue;
    auto coset = double_coset_of(g, h, x);
    for (auto y : coset) covered[y] = 1;
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

bool key_admissible(const FiniteGroup& g, const SubgroupHandle& h, const SubgroupHandle& k,
                    std::uint32_t b) {
  if (k.contains(b)) return false;
  auto hbh = double_coset_of(g, h, b);
  std::vector<char> in_hbh(g.size(), 0);
  for (auto y : hbh) in_hbh[y] = 1;
  // (H3)
  if (!in_hbh[g.inv(b)]) return false;
  // (H4) and (H5)
  for (auto a : k.members()) {
    if (!in_hbh[g.times(g.times(a, b), g.inv(a))]) return false;
    if (in_hbh[g.times(a, b)] && !h.contains(a)) return false;
  }
  return true;
}

HigmanCertificate verify_higman_pair(const FiniteGroup& g, const SubgroupHandle& h) {
  if (h.size() >= g.size()) throw std::invalid_argument("H must be a proper subgroup");
  HigmanCertificate cert;
  cert.h_size = h.size();

  SubgroupHandle k = normalizer(g, h);
  cert.k_size = k.size();
  cert.n = g.size() / k.size();
  cert.r = k.size() / h.size();

  // (H1): K has exactly two double cosets in G.
  cert.h1 = double_cosets(g, k).size() == 2;

  // (H2): K/H abelian, i.e. commutators of K land in H.
  cert.h2 = true;
  for (auto a : k.members()) {
    for (auto b : k.members()) {
      std::uint32_t comm = g.times(g.times(a, b), g.times(g.inv(a), g.inv(b)));
      if (!h.contains(comm)) {
        cert.h2 = false;
        break;
      }
    }
    if (!cert.h2) break;
  }

  if (cert.h1 && cert.h2) {
    for (std::uint32_t b = 0; b < static_cast<std::uint32_t>(g.size()); ++b) {
      if (k.contains(b)) continue;
      if (key_admissible(g, h, k, b)) {
        cert.key = b;
        cert.h3 = cert.h4 = cert.h5 = true;
        break;
      }
    }
  }
  return cert;
}

namespace {

// Minimal-index transversal of the left cosets xK in G.
std::vector<std::uint32_t> left_coset_reps(const FiniteGroup& g, const SubgroupHandle& k) {
  std::vector<char> covered(g.size(), 0);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t x = 0; x < static_cast<std::uint32_t>(g.size()); ++x) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (auto a : k.members()) covered[g.times(x, a)] = 1;
  }
  return reps;
}

}  // namespace

HigmanRoux roux_from_higman(const FiniteGroup& g, const SubgroupHandle& h,
                            const HigmanCertificate& cert,
                            const std::vector<std::uint32_t>& coset_reps,
                            const std::vector<std::uint32_t>& quotient_reps) {
  if (!cert.pass()) throw std::invalid_argument("certificate does not certify a Higman pair");
  SubgroupHandle k = normalizer(g, h);
  std::uint32_t b = *cert.key;

  std::vector<std::uint32_t> xs = coset_reps.empty() ? left_coset_reps(g, k) : coset_reps;
  if (static_cast<int>(xs.size()) != cert.n)
    throw std::invalid_argument("coset representatives are not a transversal of K");
  {
    std::vector<char> covered(g.size(), 0);
    for (auto x : xs)
      for (auto a : k.members()) {
        std::uint32_t y = g.times(x, a);
        if (covered[y]) throw std::invalid_argument("coset representatives overlap");
        covered[y] = 1;
      }
  }

  // Quotient K/H: canonical (minimal-index) representatives unless supplied.
  std::map<std::uint32_t, std::uint32_t> coset_of;  // element of K -> rep
  std::vector<std::uint32_t> reps;
  for (auto a : k.members()) {
    if (coset_of.count(a)) continue;
    std::uint32_t rep = a;
    std::vector<std::uint32_t> members;
    for (auto x : h.members()) {
      std::uint32_t y = g.times(a, x);
      members.push_back(y);
      rep = std::min(rep, y);
    }
    for (auto y : members) coset_of[y] = rep;
  }
  std::set<std::uint32_t> repset;
  for (auto& [elem, rep] : coset_of) repset.insert(rep);
  reps.assign(repset.begin(), repset.end());
  if (!quotient_reps.empty()) {
    if (static_cast<int>(quotient_reps.size()) != cert.r)
      throw std::invalid_argument("quotient representatives are not a transversal of H in K");
    std::set<std::uint32_t> seen;
    for (auto a : quotient_reps) {
      if (!k.contains(a)) throw std::invalid_argument("quotient representative outside K");
      if (!seen.insert(coset_of.at(a)).second)
        throw std::invalid_argument("quotient representatives overlap");
    }
    reps.assign(quotient_reps.begin(), quotient_reps.end());
  }

  // Abstract structure of K/H, computed on canonical representatives.
  std::vector<int> rep_ids;
  std::map<std::uint32_t, int> rep_index;
  for (auto rep : reps) {
    rep_index[coset_of.at(rep)] = static_cast<int>(rep_ids.size());
    rep_ids.push_back(static_cast<int>(rep_ids.size()));
  }
  std::vector<std::uint32_t> canon_by_id(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) canon_by_id[i] = coset_of.at(reps[i]);
  auto quotient_op = [&](int a, int bq) {
    std::uint32_t prod = g.times(canon_by_id[a], canon_by_id[bq]);
    return rep_index.at(coset_of.at(prod));
  };
  int quotient_id = rep_index.at(coset_of.at(g.id()));
  AbelianStructure structure = decompose_generic(rep_ids, quotient_op, quotient_id);

  // Partition G \ K by the double cosets H a_g b H.
  std::vector<int> class_of(g.size(), -1);
  for (std::size_t gi = 0; gi < reps.size(); ++gi) {
    std::uint32_t agb = g.times(reps[gi], b);
    for (auto x : double_coset_of(g, h, agb)) {
      if (class_of[x] != -1 && class_of[x] != static_cast<int>(gi))
        throw std::logic_error("double cosets H a_g b H are not disjoint");
      class_of[x] = static_cast<int>(gi);
    }
  }

  Roux roux(structure.group, cert.n);
  for (int i = 0; i < cert.n; ++i) {
    for (int j = 0; j < cert.n; ++j) {
      if (i == j) continue;
      std::uint32_t w = g.times(g.inv(xs[i]), xs[j]);
      int cls = class_of[w];
      if (cls < 0) throw std::logic_error("x_i^-1 x_j escaped every double coset H a_g b H");
      roux.set(i, j, structure.to_abstract.at(cls));
    }
  }

  // Parameter formula c_g = (n-1)/|H| * |b H b^-1 cap H a_g b H|.
  std::vector<std::uint32_t> bhb;
  for (auto x : h.members()) bhb.push_back(g.times(g.times(b, x), g.inv(b)));
  std::vector<std::int64_t> c(structure.group.order(), 0);
  for (std::size_t gi = 0; gi < reps.size(); ++gi) {
    std::int64_t inter = 0;
    for (auto y : bhb)
      if (class_of[y] == static_cast<int>(gi)) ++inter;
    std::int64_t num = static_cast<std::int64_t>(cert.n - 1) * inter;
    if (num % h.size() != 0)
      throw std::logic_error("intersection formula did not yield an integer");
    c[structure.to_abstract.at(static_cast<int>(gi))] = num / h.size();
  }
  RouxParameters formula_params{structure.group, c};

  RouxParameters extracted = require_roux(roux);
  if (extracted.c != formula_params.c)
    throw std::logic_error("intersection formula disagrees with the B^2 extraction");

  return HigmanRoux{std::move(roux), std::move(formula_params), std::move(structure),
                    std::move(xs)};
}

FiniteGroup build_sl2(int q) {
  if (q < 2 || q > 13 || !GaloisField::is_prime_power(q))
    throw std::invalid_argument("SL(2,q) supported for prime powers 2 <= q <= 13");
  GaloisField f(q);
  struct Mat {
    int a, b, c, d;
  };
  std::vector<Mat> mats;
  std::map<std::array<int, 4>, std::uint32_t> index;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        for (int d = 0; d < q; ++d) {
          if (f.sub(f.mul(a, d), f.mul(b, c)) == 1) {
            index[{a, b, c, d}] = static_cast<std::uint32_t>(mats.size());
            mats.push_back({a, b, c, d});
          }
        }
  int n = static_cast<int>(mats.size());
  std::vector<std::uint32_t> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Mat& x = mats[i];
      const Mat& y = mats[j];
      std::array<int, 4> prod = {
          f.add(f.mul(x.a, y.a), f.mul(x.b, y.c)), f.add(f.mul(x.a, y.b), f.mul(x.b, y.d)),
          f.add(f.mul(x.c, y.a), f.mul(x.d, y.c)), f.add(f.mul(x.c, y.b), f.mul(x.d, y.d))};
      table[static_cast<std::size_t>(i) * n + j] = index.at(prod);
    }
  }
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    std::ostringstream os;
    os << "[" << mats[i].a << "," << mats[i].b << ";" << mats[i].c << "," << mats[i].d << "]";
    labels[i] = os.str();
  }
  return FiniteGroup(std::move(table), n, std::move(labels));
}

FiniteGroup direct_with_cyclic(const FiniteGroup& g, int r) {
  if (r < 1) throw std::invalid_argument("cyclic factor must have order >= 1");
  std::int64_t n = static_cast<std::int64_t>(g.size()) * r;
  if (n > kMaxGroupSize) throw std::invalid_argument("product group too large");
  int nn = static_cast<int>(n);
  std::vector<std::uint32_t> table(static_cast<std::size_t>(nn) * nn);
  for (int i = 0; i < nn; ++i) {
    int gi = i / r, zi = i % r;
    for (int j = 0; j < nn; ++j) {
      int gj = j / r, zj = j % r;
      table[static_cast<std::size_t>(i) * nn + j] =
          static_cast<std::uint32_t>(g.times(gi, gj) * r + (zi + zj) % r);
    }
  }
  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    labels.resize(nn);
    for (int i = 0; i < nn; ++i)
      labels[i] = g.labels()[i / r] + "*z^" + std::to_string(i % r);
  }
  return FiniteGroup(std::move(table), nn, std::move(labels));
}

PslPair psl_pair(int q) {
  if (q % 2 == 0) throw std::invalid_argument("the PSL construction assumes odd q");
  FiniteGroup sl2 = build_sl2(q);
  FiniteGroup g = direct_with_cyclic(sl2, 4);
  GaloisField f(q);

  // H = {([a b; 0 a^-1], beta(a))} with beta the quadratic-residue character
  // into {1, -1} = {z^0, z^2} in C4.
  std::map<std::array<int, 4>, std::uint32_t> index;
  {
    // rebuild the SL2 indexing used by build_sl2
    std::uint32_t idx = 0;
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c)
          for (int d = 0; d < q; ++d)
            if (f.sub(f.mul(a, d), f.mul(b, c)) == 1) index[{a, b, c, d}] = idx++;
  }
  std::vector<std::uint32_t> members;
  for (int a = 1; a < q; ++a) {
    int beta = f.is_square(a) ? 0 : 2;
    for (int b = 0; b < q; ++b) {
      std::uint32_t m = index.at({a, b, 0, f.inv(a)});
      members.push_back(m * 4 + beta);
    }
  }
  return PslPair{std::move(g), std::move(members)};
}

}  // namespace rouxlab
