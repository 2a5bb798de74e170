#pragma once

#include <string>

#include "rouxlab/constructions.hpp"
#include "rouxlab/higman.hpp"
#include "rouxlab/lines.hpp"
#include "rouxlab/scheme.hpp"
#include "rouxlab/search.hpp"

namespace rouxlab {

/// Thrown on malformed input files (CLI exit code 2).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Wire formats (stable):
//   group element     JSON array of residues
//   cyclotomic        {"L": int, "coeffs": [rational strings]}
//   roux              {"group": [m1..mk], "n": int, "rows": [[null|[res..]..]..]}
//   signature         {"n": int, "L": int, "entries": [[null|k ..]..]}
//   float signature   entries {"re":, "im":} (detector inputs only)
//   adjacency set     [{"label":, "rows": [[0/1..]..]}..]
//   idempotent        {"alpha": [res..], "eps": "+"|"-", "mu":, "d":, "matrix":}
//   finite group      {"cayley": [[..]..]} or {"sl2q": q, "cyclic": r}
//   certificate       {"flags":{..}, "K":, "H":, "n":, "r":, "key":}
//   feasibility       TSV "d n r c delta flags" and a JSON rows variant

std::string cyclotomic_to_json(const Cyclotomic& x);
Cyclotomic cyclotomic_from_json(const std::string& text);

std::string roux_to_json(const Roux& b);
Roux roux_from_json(const std::string& text);

std::string signature_to_json(const SignatureMatrix& s);
/// Either an exact signature or a float matrix, depending on the file.
std::variant<SignatureMatrix, ComplexMatrix> signature_from_json(const std::string& text);

std::string adjacency_set_to_json(const AdjacencySet& s);

std::string idempotent_to_json(const IdempotentMatrix& m, const AbelianGroup& group,
                               bool include_matrix);

FiniteGroup group_from_json(const std::string& text);
std::vector<std::uint32_t> subgroup_generators_from_json(const std::string& text);

std::string certificate_to_json(const HigmanCertificate& cert);

std::string feasibility_to_tsv(const std::vector<FeasibilityRow>& rows);
std::string feasibility_to_json(const std::vector<FeasibilityRow>& rows);
std::vector<FeasibilityRow> feasibility_from_json(const std::string& text);

std::string drackn_to_json(const DracknParameters& p);

/// Edge list "u v" with a label comment per vertex (i, g).
std::string graph_to_edge_list(const RouxGraph& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace rouxlab
