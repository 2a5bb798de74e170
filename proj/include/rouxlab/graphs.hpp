#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rouxlab/roux.hpp"
#include "rouxlab/scheme.hpp"

namespace rouxlab {

/// The (n-1)-regular graph on rn vertices with adjacency expand(indicator(B));
/// vertices group into n fibres of size r.
struct RouxGraph {
  Roux b;
  IntMatrix adjacency;
  int fibres;      // n
  int fibre_size;  // r
};

RouxGraph roux_graph(const Roux& b);

/// One eigenvalue of the roux graph, with its closed-form provenance.
struct SpectrumEntry {
  double value = 0.0;
  std::int64_t multiplicity = 0;
  int alpha_index = 0;
  int eps = +1;
  RealScalar c_hat;
};

/// Spectrum by the closed formula lambda = (c_hat + eps*sqrt(c_hat^2+4(n-1)))/2
/// with multiplicities d_alpha^eps; sorted by value.
std::vector<SpectrumEntry> spectrum(const Roux& b);

/// Eigenvalues of a symmetric 0/1 matrix, ascending (numeric cross-check).
std::vector<double> numeric_spectrum(const IntMatrix& adjacency);

/// Number of connected components, [Gamma : Lambda] by the closed form,
/// cross-checked against breadth-first search.
int components(const Roux& b);

struct DracknParameters {
  std::int64_t n = 0, r = 0, c = 0;
  std::int64_t delta = 0;  // n - rc - 2
};

/// Parameters when the roux graph is an abelian drackn: c_g = c > 0 off the
/// identity (and r >= 2), confirmed combinatorially (common-neighbor counts,
/// fibre antipodality at diameter 3, perfect matchings between fibres).
std::optional<DracknParameters> drackn_check(const Roux& b);

struct DracknToRouxError {
  std::string message;
};

/// Reads a cover of K_n (0/1 adjacency + fibre size) back into a roux over
/// the abelian group generated by the matching permutations.
std::variant<Roux, DracknToRouxError> drackn_to_roux(const IntMatrix& adjacency, int fibre_size);

/// Antipodal roux graphs (all c_g > 0): distance-regular iff connected with
/// exactly four distinct eigenvalues.
bool distance_regular_check(const Roux& b);

/// Brute-force distance-regularity test on the adjacency matrix.
bool distance_regular_bruteforce(const IntMatrix& adjacency);

/// Pushforward onto C_p along the coordinate surjection for an odd prime p
/// dividing |Gamma|; requires a connected roux graph. The drackn conclusion is
/// asserted on the result.
Roux odd_prime_quotient(const Roux& b, int p);

/// All-pairs graph distances by BFS (-1 for unreachable).
std::vector<std::vector<int>> bfs_distances(const IntMatrix& adjacency);

int graph_diameter(const IntMatrix& adjacency);

}  // namespace rouxlab
