#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rouxlab/roux.hpp"

namespace rouxlab {

/// Finite group by Cayley table. Index 0..size-1; identity and inverses are
/// derived at construction, associativity is spot-checked on random triples.
class FiniteGroup {
 public:
  explicit FiniteGroup(std::vector<std::uint32_t> mul_table, int size,
                       std::vector<std::string> labels = {});

  int size() const { return size_; }
  std::uint32_t id() const { return id_; }
  std::uint32_t times(std::uint32_t a, std::uint32_t b) const {
    return mul_[static_cast<std::size_t>(a) * size_ + b];
  }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  int size_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> inv_;
  std::uint32_t id_;
  std::vector<std::string> labels_;
};

/// Subgroup as a sorted member list plus a membership bitmap.
class SubgroupHandle {
 public:
  SubgroupHandle(const FiniteGroup& parent, std::vector<std::uint32_t> members);

  const FiniteGroup& parent() const { return *parent_; }
  const std::vector<std::uint32_t>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool contains(std::uint32_t x) const { return bitmap_[x]; }

 private:
  const FiniteGroup* parent_;
  std::vector<std::uint32_t> members_;
  std::vector<char> bitmap_;
};

/// Smallest subgroup containing the generators.
SubgroupHandle subgroup_closure(const FiniteGroup& g, const std::vector<std::uint32_t>& gens);

/// N_G(H) = {a : a H a^-1 = H}.
SubgroupHandle normalizer(const FiniteGroup& g, const SubgroupHandle& h);

/// Double cosets HaH covering G, ordered by minimal element index.
std::vector<std::vector<std::uint32_t>> double_cosets(const FiniteGroup& g,
                                                      const SubgroupHandle& h);

/// Record of the five Higman-pair conditions for (G, H) with K = N_G(H):
/// (H1) K has exactly two double cosets in G (double transitivity on G/K),
/// (H2) K/H abelian, and a key b outside K with (H3) HbH = Hb^-1H,
/// (H4) aba^-1 in HbH for a in K, (H5) ab in HbH only for a in H.
struct HigmanCertificate {
  bool h1 = false, h2 = false, h3 = false, h4 = false, h5 = false;
  std::optional<std::uint32_t> key;
  int n = 0;        // [G : K]
  int r = 0;        // [K : H]
  int h_size = 0;   // |H|
  int k_size = 0;   // |K|

  bool pass() const { return h1 && h2 && h3 && h4 && h5 && key.has_value(); }
};

/// Tests whether (b) satisfies (H3)-(H5) for the given pair.
bool key_admissible(const FiniteGroup& g, const SubgroupHandle& h,
                    const SubgroupHandle& k, std::uint32_t b);

/// Computes K, checks (H1)-(H2), and searches G \ K in index order for the
/// first admissible key.
HigmanCertificate verify_higman_pair(const FiniteGroup& g, const SubgroupHandle& h);

struct HigmanRoux {
  Roux roux;                       // over the abstract form of K/H
  RouxParameters parameters;       // from the intersection formula, cross-checked
  AbelianStructure quotient;       // K/H: coset reps <-> abstract elements
  std::vector<std::uint32_t> coset_reps;  // the x_j actually used
};

/// Builds the roux of a verified Higman pair: B_ij is the unique g with
/// x_i^-1 x_j in H a_g b H. Representatives default to minimal-index choices.
HigmanRoux roux_from_higman(const FiniteGroup& g, const SubgroupHandle& h,
                            const HigmanCertificate& cert,
                            const std::vector<std::uint32_t>& coset_reps = {},
                            const std::vector<std::uint32_t>& quotient_reps = {});

/// SL(2, q) for a prime power q <= 13 (prime powers via the built-in field
/// registry). Elements are labeled by their matrix entries.
FiniteGroup build_sl2(int q);

/// Direct product G x C_r.
FiniteGroup direct_with_cyclic(const FiniteGroup& g, int r);

/// The pair (SL(2,q) x C4, H) with H the upper-triangular subgroup twisted by
/// the quadratic-residue character. Requires odd q.
struct PslPair {
  FiniteGroup group;
  std::vector<std::uint32_t> subgroup_members;
};
PslPair psl_pair(int q);

}  // namespace rouxlab
