#include "rouxlab/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rouxlab {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON");
  return j;
}

std::vector<int> residues_from(const json& j) {
  if (!j.is_array()) throw ParseError("group element must be an array of residues");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError("residue must be an integer");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

std::string cyclotomic_to_json(const Cyclotomic& x) {
  json j;
  j["L"] = x.level();
  json coeffs = json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(c.str());
  j["coeffs"] = coeffs;
  return j.dump();
}

Cyclotomic cyclotomic_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("L") || !j.contains("coeffs")) throw ParseError("cyclotomic needs L and coeffs");
  int level = j["L"].get<int>();
  std::vector<Rational> coeffs;
  for (const auto& c : j["coeffs"]) coeffs.push_back(Rational::parse(c.get<std::string>()));
  // coefficients are exponents 0..len-1; canonicalize through from_exponents
  try {
    return Cyclotomic::from_exponents(level, coeffs);
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
}

std::string roux_to_json(const Roux& b) {
  json j;
  j["group"] = b.group().orders();
  j["n"] = b.n();
  json rows = json::array();
  for (int i = 0; i < b.n(); ++i) {
    json row = json::array();
    for (int jj = 0; jj < b.n(); ++jj) {
      if (b.at(i, jj) == Roux::kZero)
        row.push_back(nullptr);
      else
        row.push_back(b.group().tuple(b.at(i, jj)));
    }
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j.dump();
}

Roux roux_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("group") || !j.contains("n") || !j.contains("rows"))
    throw ParseError("roux file needs group, n, rows");
  try {
    AbelianGroup g(j["group"].get<std::vector<int>>());
    int n = j["n"].get<int>();
    Roux b(g, n);
    const json& rows = j["rows"];
    if (static_cast<int>(rows.size()) != n) throw ParseError("row count mismatch");
    for (int i = 0; i < n; ++i) {
      const json& row = rows[i];
      if (static_cast<int>(row.size()) != n) throw ParseError("column count mismatch");
      for (int jj = 0; jj < n; ++jj) {
        if (row[jj].is_null()) continue;
        b.set(i, jj, g.index(residues_from(row[jj])));
      }
    }
    return b;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
}

std::string signature_to_json(const SignatureMatrix& s) {
  json j;
  j["n"] = s.n();
  j["L"] = s.level();
  json rows = json::array();
  for (int i = 0; i < s.n(); ++i) {
    json row = json::array();
    for (int jj = 0; jj < s.n(); ++jj) {
      if (s.at(i, jj) < 0)
        row.push_back(nullptr);
      else
        row.push_back(s.at(i, jj));
    }
    rows.push_back(row);
  }
  j["entries"] = rows;
  return j.dump();
}

std::variant<SignatureMatrix, ComplexMatrix> signature_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("n") || !j.contains("entries"))
    throw ParseError("signature file needs n and entries");
  int n = j["n"].get<int>();
  const json& rows = j["entries"];
  if (static_cast<int>(rows.size()) != n) throw ParseError("row count mismatch");

  bool is_float = false;
  for (const auto& row : rows)
    for (const auto& cell : row)
      if (cell.is_object()) is_float = true;

  if (is_float) {
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) {
      const json& row = rows[i];
      if (static_cast<int>(row.size()) != n) throw ParseError("column count mismatch");
      for (int jj = 0; jj < n; ++jj) {
        if (row[jj].is_null()) {
          m.at(i, jj) = 0.0;
        } else if (row[jj].is_object()) {
          m.at(i, jj) = {row[jj].value("re", 0.0), row[jj].value("im", 0.0)};
        } else {
          throw ParseError("float signature cells must be {re, im} or null");
        }
      }
    }
    return m;
  }

  if (!j.contains("L")) throw ParseError("exact signature file needs L");
  int level = j["L"].get<int>();
  try {
    SignatureMatrix s(n, level);
    for (int i = 0; i < n; ++i) {
      const json& row = rows[i];
      if (static_cast<int>(row.size()) != n) throw ParseError("column count mismatch");
      for (int jj = i + 1; jj < n; ++jj) {
        if (row[jj].is_null()) throw ParseError("off-diagonal cell missing");
        s.set_pair(i, jj, row[jj].get<int>());
      }
      if (!row[i].is_null()) throw ParseError("diagonal must be null");
    }
    // verify self-adjointness of the declared lower triangle
    for (int i = 0; i < n; ++i)
      for (int jj = 0; jj < i; ++jj) {
        if (rows[i][jj].is_null()) throw ParseError("off-diagonal cell missing");
        int got = rows[i][jj].get<int>();
        got = ((got % level) + level) % level;
        if (got != s.at(i, jj)) throw ParseError("signature is not self-adjoint");
      }
    return s;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
}

std::string adjacency_set_to_json(const AdjacencySet& s) {
  json out = json::array();
  for (const auto& m : s.matrices) {
    json jm;
    jm["label"] = m.label;
    json rows = json::array();
    for (int i = 0; i < m.n; ++i) {
      json row = json::array();
      for (int jj = 0; jj < m.n; ++jj) row.push_back(static_cast<int>(m.at(i, jj)));
      rows.push_back(row);
    }
    jm["rows"] = rows;
    out.push_back(jm);
  }
  return out.dump();
}

std::string idempotent_to_json(const IdempotentMatrix& m, const AbelianGroup& group,
                               bool include_matrix) {
  json j;
  j["alpha"] = group.tuple(m.alpha_index);
  j["eps"] = m.eps > 0 ? "+" : "-";
  if (m.mu.rational)
    j["mu"] = m.mu.exact.str();
  else
    j["mu"] = m.mu.value;
  j["d"] = m.d_is_integral ? json(m.d_int) : json(m.d);
  j["d_integral"] = m.d_is_integral;
  if (m.c_hat.rational)
    j["c_hat"] = m.c_hat.exact.str();
  else
    j["c_hat"] = m.c_hat.value;
  if (include_matrix) {
    json rows = json::array();
    for (int i = 0; i < m.size(); ++i) {
      json row = json::array();
      for (int jj = 0; jj < m.size(); ++jj) {
        auto v = m.entry(i, jj);
        row.push_back(json::array({v.real(), v.imag()}));
      }
      rows.push_back(row);
    }
    j["matrix"] = rows;
  }
  return j.dump();
}

FiniteGroup group_from_json(const std::string& text) {
  json j = parse(text);
  try {
    if (j.contains("cayley")) {
      auto table = j["cayley"].get<std::vector<std::vector<std::uint32_t>>>();
      int n = static_cast<int>(table.size());
      std::vector<std::uint32_t> flat;
      for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw ParseError("Cayley table is not square");
        flat.insert(flat.end(), row.begin(), row.end());
      }
      return FiniteGroup(std::move(flat), n);
    }
    if (j.contains("sl2q")) {
      FiniteGroup sl2 = build_sl2(j["sl2q"].get<int>());
      int r = j.value("cyclic", 1);
      return r > 1 ? direct_with_cyclic(sl2, r) : sl2;
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
  throw ParseError("group file needs either cayley or sl2q");
}

std::vector<std::uint32_t> subgroup_generators_from_json(const std::string& text) {
  json j = parse(text);
  json gens = j.is_object() && j.contains("generators") ? j["generators"] : j;
  if (!gens.is_array()) throw ParseError("subgroup generators must be an index list");
  std::vector<std::uint32_t> out;
  for (const auto& v : gens) out.push_back(v.get<std::uint32_t>());
  return out;
}

std::string certificate_to_json(const HigmanCertificate& cert) {
  json j;
  j["flags"] = {{"H1", cert.h1}, {"H2", cert.h2}, {"H3", cert.h3},
                {"H4", cert.h4}, {"H5", cert.h5}};
  j["pass"] = cert.pass();
  j["K"] = cert.k_size;
  j["H"] = cert.h_size;
  j["n"] = cert.n;
  j["r"] = cert.r;
  if (cert.key)
    j["key"] = *cert.key;
  else
    j["key"] = nullptr;
  return j.dump();
}

namespace {
std::string flags_str(const FeasibilityRow& row) {
  std::string flags;
  if (row.external_unchecked) flags += "external_unchecked";
  if (row.degenerate_q) flags += flags.empty() ? "degenerate_q" : ",degenerate_q";
  return flags.empty() ? "-" : flags;
}
}  // namespace

std::string feasibility_to_tsv(const std::vector<FeasibilityRow>& rows) {
  std::ostringstream os;
  os << "d\tn\tr\tc\tdelta\tflags\n";
  for (const auto& row : rows) {
    os << row.d << "\t" << row.n << "\t" << row.r << "\t" << row.c << "\t" << row.delta << "\t"
       << flags_str(row) << "\n";
  }
  return os.str();
}

std::string feasibility_to_json(const std::vector<FeasibilityRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    out.push_back({{"d", row.d},
                   {"n", row.n},
                   {"r", row.r},
                   {"c", row.c},
                   {"delta", row.delta},
                   {"external_unchecked", row.external_unchecked},
                   {"degenerate_q", row.degenerate_q}});
  }
  return out.dump();
}

std::vector<FeasibilityRow> feasibility_from_json(const std::string& text) {
  json j = parse(text);
  json rows = j.is_object() && j.contains("rows") ? j["rows"] : j;
  if (!rows.is_array()) throw ParseError("feasibility file must be a row array");
  std::vector<FeasibilityRow> out;
  for (const auto& r : rows) {
    FeasibilityRow row;
    row.d = r.at("d").get<std::int64_t>();
    row.n = r.at("n").get<std::int64_t>();
    row.r = r.at("r").get<std::int64_t>();
    row.c = r.at("c").get<std::int64_t>();
    row.delta = r.at("delta").get<std::int64_t>();
    out.push_back(row);
  }
  return out;
}

std::string drackn_to_json(const DracknParameters& p) {
  json j{{"n", p.n}, {"r", p.r}, {"c", p.c}, {"delta", p.delta}};
  return j.dump();
}

std::string graph_to_edge_list(const RouxGraph& g) {
  std::ostringstream os;
  const int r = g.fibre_size;
  for (int v = 0; v < g.adjacency.n; ++v)
    os << "# vertex " << v << " = (" << v / r << ", " << g.b.group().element_str(v % r) << ")\n";
  for (int u = 0; u < g.adjacency.n; ++u)
    for (int v = u + 1; v < g.adjacency.n; ++v)
      if (g.adjacency.at(u, v)) os << u << " " << v << "\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace rouxlab
