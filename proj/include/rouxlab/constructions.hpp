#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "rouxlab/graphs.hpp"
#include "rouxlab/higman.hpp"
#include "rouxlab/lines.hpp"
#include "rouxlab/roux.hpp"

namespace rouxlab {

/// n x n matrix with zero diagonal, off-diagonal entries +-1, M M^T = (n-1)I.
struct ConferenceMatrix {
  int n = 0;
  std::vector<int> a;  // entries in {-1, 0, 1}

  int at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  bool is_conference() const;
  bool is_antisymmetric() const;
};

/// M_1 = [[0,1],[-1,0]]; M_{k+1} = [[M_k, M_k+I],[M_k-I, -M_k]]. Size 2^k.
ConferenceMatrix conference_iterate(int k);

/// Roux over C4 from an antisymmetric conference matrix: +1 -> i, -1 -> -i.
/// Parameters c_{+-1} = 0, c_{+-i} = n/2 - 1.
Roux conference_roux(const ConferenceMatrix& m);

/// Thas-Somma: vertices F_q^{2m}, entries delta_{[u,v]} under the standard
/// symplectic form; an abelian (q^{2m}, q, q^{2m-1})-drackn.
Roux thas_somma(int q, int m);

/// Gray codeword of j: 0->(0,0), 1->(0,1), 2->(1,1), 3->(1,0).
std::pair<int, int> gray(int j);
int gray_inverse(int bit1, int bit2);

/// The C4 roux on (Z_2^k)^2 built from Gray-coded dot products; a roux for
/// k in {1, 3} (k = 2 admitted only with allow_invalid, for the negative
/// test).
Roux hoggar_family(int k, bool allow_invalid = false);

/// Roux of the (SL(2,q) x C4, H) Higman pair, q odd. Parameters land on
/// {+-1} when q = 1 mod 4 and on {+-i} when q = 3 mod 4, with value (q-1)/2.
struct PslRoux {
  Roux roux;
  RouxParameters parameters;
  HigmanCertificate certificate;
};
PslRoux psl_roux(int q);

/// Predicted parameters of the SU(3,q) family: roux over C_r (r | q+1) plus
/// the induced drackn parameters (q^3+1, r, (q-1)(q+1)^2/r).
struct Su3Parameters {
  std::int64_t n = 0;
  RouxParameters roux_params;
  DracknParameters drackn;
};
Su3Parameters su3_parameters(std::int64_t q, std::int64_t r);

/// The C4 parameter family c_1 = 4j^4+12j^3+10j^2-2, c_{+-i} = 4j^4+8j^3+4j^2,
/// c_{-1} = 4j^4+4j^3-2j^2 with n = 16 j^2 (j+1)^2 and d = 4j(j+1) = sqrt(n).
struct MaximalFamilyParameters {
  std::int64_t j = 0;
  std::int64_t n = 0;
  std::int64_t d = 0;  // rank at the degree-one character, + branch
  RouxParameters roux_params;
  std::int64_t d_second_power = 0;  // rank at the squared character, d(d+1)/2
};
MaximalFamilyParameters maximal_family_parameters(std::int64_t j);

/// Lifts a C4-entry signature matrix to a candidate roux (entry -> delta).
/// Verification failure is returned, not thrown (the lift is only guaranteed
/// for maximal ETF signatures).
std::variant<Roux, RouxError> lift_c4_signature(const SignatureMatrix& s);

/// The 4 x 4 conference roux over C4 written out explicitly (first row all i).
Roux example_conference_roux();

}  // namespace rouxlab
