#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rouxlab/abelian.hpp"

namespace rouxlab {

/// n x n matrix over the group ring of a finite abelian group with zero
/// diagonal and single group elements off the diagonal. Cells store the
/// element index, with kZero marking the zero cell.
class Roux {
 public:
  static constexpr int kZero = -1;

  Roux(AbelianGroup group, int n);

  const AbelianGroup& group() const { return group_; }
  int n() const { return n_; }
  int at(int i, int j) const { return cells_[static_cast<std::size_t>(i) * n_ + j]; }
  void set(int i, int j, int value) { cells_[static_cast<std::size_t>(i) * n_ + j] = value; }
  /// Sets (i,j) and its inverse-symmetric partner (j,i).
  void set_pair(int i, int j, int value);

  bool operator==(const Roux& o) const {
    return group_ == o.group_ && n_ == o.n_ && cells_ == o.cells_;
  }

 private:
  AbelianGroup group_;
  int n_;
  std::vector<int> cells_;
};

/// The integers {c_g} with B^2 = (n-1) I + sum_g c_g gB. Nonnegative,
/// inverse-symmetric, summing to n-2.
struct RouxParameters {
  AbelianGroup group;
  std::vector<std::int64_t> c;  // indexed by element

  std::int64_t sum() const;
  bool inverse_symmetric() const;
  Cyclotomic fourier(const Character& alpha) const { return hat_c(c, alpha); }
};

struct RouxError {
  enum class Kind { BadSize, R1, R2, R3, R4 };
  Kind kind = Kind::BadSize;
  int i = -1, j = -1;
  std::string message;
  // For R4 conflicts: the parameter map demanded by the reference cell and by
  // the failing cell.
  std::vector<std::int64_t> demanded_ref, demanded_here;
  int ref_i = -1, ref_j = -1;

  RouxError() = default;
  RouxError(Kind k, int ii, int jj, std::string msg)
      : kind(k), i(ii), j(jj), message(std::move(msg)) {}
};

using VerifyResult = std::variant<RouxParameters, RouxError>;

/// Checks (R1)-(R3) structurally, then certifies (R4) by computing B^2 in the
/// group ring and extracting a single global parameter map.
VerifyResult verify_roux(const Roux& b);

/// verify_roux that throws std::invalid_argument on failure.
RouxParameters require_roux(const Roux& b);

bool is_roux(const Roux& b);

/// Switching: entry(i,j) -> D_i entry(i,j) D_j^{-1}; parameters unchanged.
Roux switch_roux(const Roux& b, const std::vector<int>& d);

/// Unique switching-equivalent roux whose first row and column are identity.
Roux normalize(const Roux& b);

/// h*B for h with h^2 = 1; parameters reindex to c_{gh}. Throws otherwise.
Roux scale(const Roux& b, int h);

/// Entrywise image under a group homomorphism; parameters push forward.
Roux pushforward(const Roux& b, const Homomorphism& phi);

/// Reinterprets the roux over a supergroup through an injective homomorphism.
Roux embed(const Roux& b, const Homomorphism& injection);

/// Smallest group carrying the switching class: the subgroup generated by the
/// support of the parameters. Returns the members inside the original group
/// and the normalization rewritten over the standalone subgroup.
struct MinimalGroupResult {
  std::vector<int> members;   // subgroup of b.group()
  AbelianStructure structure; // abstract form of that subgroup
  Roux reduced;               // normalize(b) over structure.group
};
MinimalGroupResult minimal_group(const Roux& b);

}  // namespace rouxlab
