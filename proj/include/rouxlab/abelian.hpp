#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rouxlab/cyclotomic.hpp"

namespace rouxlab {

/// Finite abelian group presented as a product of cyclic factors
/// Z_{m_1} x ... x Z_{m_k}. Elements are residue tuples enumerated
/// lexicographically (first factor most significant); the element index is the
/// mixed-radix encoding of the tuple. Values are immutable after construction.
class AbelianGroup {
 public:
  AbelianGroup() : orders_{}, order_(1), exponent_(1) {}
  explicit AbelianGroup(std::vector<int> orders);

  const std::vector<int>& orders() const { return orders_; }
  int order() const { return order_; }
  int exponent() const { return exponent_; }
  int identity() const { return 0; }

  int add(int a, int b) const;
  int neg(int a) const;
  int mul_int(int a, std::int64_t t) const;  // t-fold sum of a
  int element_order(int a) const;

  std::vector<int> tuple(int index) const;
  int index(const std::vector<int>& residues) const;

  /// Index of the j-th canonical generator (residue 1 in slot j).
  int generator(int j) const;

  std::string element_str(int index) const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.orders_ == b.orders_;
  }
  friend bool operator!=(const AbelianGroup& a, const AbelianGroup& b) {
    return !(a == b);
  }

 private:
  std::vector<int> orders_;
  int order_;
  int exponent_;
};

AbelianGroup make_group(const std::vector<int>& orders);

/// Character of an AbelianGroup, recorded by its exponent tuple in the same
/// index space as group elements. Evaluation at g is the root of unity
/// zeta_E^{k} with E the group exponent.
class Character {
 public:
  Character(AbelianGroup group, int index);

  const AbelianGroup& group() const { return group_; }
  int index() const { return index_; }
  bool is_trivial() const { return index_ == 0; }

  /// Exponent k with alpha(g) = zeta_E^k, E = group exponent.
  int exponent_at(int g) const;
  Cyclotomic operator()(int g) const;

  Character pow(std::int64_t k) const;
  Character inverse() const { return pow(-1); }

 private:
  AbelianGroup group_;
  int index_;
  std::vector<std::int64_t> weights_;  // E / m_j per factor
};

/// Finitely supported integer combination of group elements; the group-ring
/// coefficient vector is dense over the (small) group.
class GroupRingElement {
 public:
  explicit GroupRingElement(AbelianGroup group);
  static GroupRingElement delta(const AbelianGroup& group, int g);

  const AbelianGroup& group() const { return group_; }
  std::int64_t coeff(int g) const { return coeffs_[g]; }
  void set_coeff(int g, std::int64_t v) { coeffs_[g] = v; }
  void add_coeff(int g, std::int64_t v) { coeffs_[g] += v; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  GroupRingElement operator+(const GroupRingElement& o) const;
  GroupRingElement operator*(const GroupRingElement& o) const;  // convolution
  GroupRingElement star() const;                                // involution
  bool operator==(const GroupRingElement& o) const {
    return group_ == o.group_ && coeffs_ == o.coeffs_;
  }

 private:
  AbelianGroup group_;
  std::vector<std::int64_t> coeffs_;
};

/// Linear extension of the character to the group ring.
Cyclotomic eval_character(const Character& alpha, const GroupRingElement& x);

/// Fourier transform of a parameter map: sum_h c_h * conj(alpha(h)).
Cyclotomic hat_c(const std::vector<std::int64_t>& params, const Character& alpha);

/// Homomorphism between abelian groups, given by the images of the canonical
/// generators of the domain. Construction validates the order relations.
class Homomorphism {
 public:
  Homomorphism(AbelianGroup from, AbelianGroup to, std::vector<int> generator_images);

  static Homomorphism identity(const AbelianGroup& g);

  const AbelianGroup& from() const { return from_; }
  const AbelianGroup& to() const { return to_; }
  int operator()(int g) const;
  bool is_injective() const;

 private:
  AbelianGroup from_;
  AbelianGroup to_;
  std::vector<int> images_;
};

/// Closure of the given elements (plus identity) under the group operation.
std::vector<int> subgroup_generated(const AbelianGroup& group, const std::vector<int>& gens);

/// Structure of a subgroup (or any finite abelian group presented as a set
/// with an operation): cyclic-factor orders, distinguished generators inside
/// the parent, and the two-way translation between parent elements and the
/// standalone AbelianGroup.
struct AbelianStructure {
  AbelianGroup group;                 // abstract Z_{m_1} x ... x Z_{m_s}
  std::vector<int> generators;        // parent indices realizing the factors
  std::map<int, int> to_abstract;     // parent element -> abstract index
  std::vector<int> from_abstract;     // abstract index -> parent element
};

/// Decomposes a subgroup of `parent` (given as a member set closed under the
/// operation) into cyclic factors, invariant-factor style (each order divides
/// the previous one).
AbelianStructure decompose_subgroup(const AbelianGroup& parent,
                                    const std::vector<int>& members);

/// Same decomposition for a group presented abstractly by ids and a
/// multiplication callback (must be abelian).
AbelianStructure decompose_generic(const std::vector<int>& elements,
                                   const std::function<int(int, int)>& op,
                                   int identity);

}  // namespace rouxlab
