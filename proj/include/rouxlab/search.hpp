#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

namespace rouxlab {

/// Candidate abelian-drackn parameter row (d, n, r, c, delta) with the screens
/// it passed. Emitted rows satisfy every implemented screen; the external
/// constraint battery is not implemented, so rows carry
/// external_unchecked = true and the search output is a superset of the
/// fully-screened table.
struct FeasibilityRow {
  std::int64_t d = 0, n = 0, r = 0, c = 0, delta = 0;
  bool gerzon = true;
  bool q_int = true;
  bool sqrt_q_int = true;
  bool c_positive = true;
  bool c_id_nonneg = true;
  bool external_unchecked = true;
  bool degenerate_q = false;  // the n = 2d boundary (q = 0)

  auto key() const { return std::make_tuple(n, d, r); }
  bool same_tuple(const FeasibilityRow& o) const {
    return d == o.d && n == o.n && r == o.r && c == o.c && delta == o.delta;
  }
};

enum class RPolicy {
  kOddPrimes,    // r ranges over odd primes dividing n (the standard screen)
  kAllDivisors,  // exploratory: every divisor r >= 2 of n
};

/// Feasible (d, n, r, c, delta) with n <= max_n: q = (n-2d)^2 (n-1)/(d(n-d))
/// an integer perfect square, Gerzon n <= min{d^2, (n-d)^2}, d outside
/// {1, n-1}, c = (n-2-sign(n-2d) sqrt(q))/r a positive integer, and
/// c_id = delta + c >= 0. Sorted by (n, d, r).
std::vector<FeasibilityRow> drackn_feasible(std::int64_t max_n,
                                            RPolicy policy = RPolicy::kOddPrimes);

/// The published feasibility table at n <= 500 with r an odd prime (78 rows).
const std::vector<FeasibilityRow>& reference_table();

struct CrossCheckReport {
  bool all_reference_found = false;
  std::vector<FeasibilityRow> missing;  // reference rows absent from the search
  std::vector<FeasibilityRow> extras;   // search rows outside the reference
};

/// Superset containment check: every reference row must appear in rows.
CrossCheckReport cross_check_table(const std::vector<FeasibilityRow>& rows,
                                   const std::vector<FeasibilityRow>& reference);

}  // namespace rouxlab
