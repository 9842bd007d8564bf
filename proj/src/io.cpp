#include "fiedler/io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "fiedler/errors.hpp"

namespace fiedler {

namespace {

const Json& member(const Json& obj, const char* key, std::string_view what) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(std::string(what) + ": missing key \"" + key + "\"");
  return *it;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw InputError(msg);
}

std::size_t index_from_json(const Json& j, std::string_view what) {
  require(j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0),
          std::string(what) + ": expected a nonnegative integer, got " + j.dump());
  return j.get<std::size_t>();
}

void reject_unknown(const Json& obj, std::initializer_list<const char*> keys, std::string_view what) {
  for (const auto& [k, v] : obj.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    require(known, std::string(what) + ": unknown key \"" + k + "\"");
  }
}

RationalVector vector_from_json(const Json& j) {
  require(j.is_array(), "expected an array of rationals, got " + j.dump());
  RationalVector out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

Json vector_to_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t parse_index(std::string_view s) {
  s = trim(s);
  require(!s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos,
          "graph text: not a vertex index: \"" + std::string(s) + "\"");
  return std::stoul(std::string(s));
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump(), 10));
  throw InputError("expected a rational string \"p/q\" or an integer, got " + j.dump());
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Polynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

Polynomial polynomial_from_json(const Json& j) { return Polynomial(vector_from_json(j)); }

Json to_json(const RationalFunction& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

RationalFunction rational_function_from_json(const Json& j) {
  require(j.is_object(), "rational function: expected an object");
  return ratfun_reduce(polynomial_from_json(member(j, "num", "rational function")),
                       polynomial_from_json(member(j, "den", "rational function")));
}

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(i, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix rational_matrix_from_json(const Json& j) {
  require(j.is_array(), "matrix: expected an array of rows");
  const std::size_t r = j.size();
  const std::size_t c = r == 0 ? 0 : j[0].size();
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    require(j[i].is_array() && j[i].size() == c, "matrix: ragged row " + std::to_string(i));
    for (std::size_t k = 0; k < c; ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

Json factored_hint(const Polynomial& p) {
  Json a = Json::array();
  if (p.is_zero()) return a;
  if (p.leading() != 1) a.push_back({{"factor", to_json(Polynomial::constant(p.leading()))}, {"multiplicity", 1}});
  for (const auto& [q, m] : square_free_decomposition(p))
    a.push_back({{"factor", to_json(q)}, {"multiplicity", m}});
  return a;
}

Graph parse_graph_text(std::string_view text) {
  const auto semi = text.find(';');
  require(semi != std::string_view::npos, "graph text: expected \"n; u-v,u-v,...\"");
  const std::size_t n = parse_index(text.substr(0, semi));
  std::vector<Edge> edges;
  std::string_view rest = trim(text.substr(semi + 1));
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = trim(rest.substr(0, comma));
    const auto dash = item.find('-');
    require(dash != std::string_view::npos, "graph text: expected u-v, got \"" + std::string(item) + "\"");
    edges.emplace_back(parse_index(item.substr(0, dash)), parse_index(item.substr(dash + 1)));
    rest = comma == std::string_view::npos ? std::string_view{} : trim(rest.substr(comma + 1));
  }
  return Graph(n, std::move(edges));
}

Graph graph_from_json(const Json& j) {
  if (j.is_string()) return parse_graph_text(j.get<std::string>());
  require(j.is_object(), "graph: expected {\"n\": ..., \"edges\": [...]} or \"n; u-v,...\"");
  reject_unknown(j, {"n", "edges"}, "graph");
  const std::size_t n = index_from_json(member(j, "n", "graph"), "graph n");
  std::vector<Edge> edges;
  if (auto it = j.find("edges"); it != j.end()) {
    require(it->is_array(), "graph: edges must be an array");
    for (const auto& e : *it) {
      require(e.is_array() && e.size() == 2, "graph: each edge must be a pair [u, v], got " + e.dump());
      edges.emplace_back(index_from_json(e[0], "edge endpoint"), index_from_json(e[1], "edge endpoint"));
    }
  }
  return Graph(n, std::move(edges));
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"n", g.n()}, {"edges", std::move(edges)}};
}

UniversalParams universal_from_json(const Json& j) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name == "adjacency") return UniversalParams::adjacency();
    if (name == "laplacian") return UniversalParams::laplacian();
    if (name == "signless_laplacian") return UniversalParams::signless_laplacian();
    if (name == "seidel") return UniversalParams::seidel();
    throw InputError("universal: unknown preset \"" + name + "\"");
  }
  require(j.is_object(), "universal: expected an object or a preset name");
  reject_unknown(j, {"alpha", "beta", "gamma", "delta"}, "universal");
  UniversalParams p;
  if (j.contains("alpha")) p.alpha = rational_from_json(j["alpha"]);
  if (j.contains("beta")) p.beta = rational_from_json(j["beta"]);
  if (j.contains("gamma")) p.gamma = rational_from_json(j["gamma"]);
  if (j.contains("delta")) p.delta = rational_from_json(j["delta"]);
  return p;
}

Json to_json(const UniversalParams& p) {
  return Json{{"alpha", to_json(p.alpha)}, {"beta", to_json(p.beta)}, {"gamma", to_json(p.gamma)},
              {"delta", to_json(p.delta)}};
}

JoinSpec join_spec_from_json(const Json& j) {
  require(j.is_object(), "join spec: expected an object");
  reject_unknown(j, {"host", "components", "subsets", "universal", "rho", "allow_zero_alpha"}, "join spec");
  JoinSpec spec;
  spec.host = graph_from_json(member(j, "host", "join spec"));
  const Json& comps = member(j, "components", "join spec");
  require(comps.is_array(), "join spec: components must be an array");
  for (const auto& c : comps) spec.components.push_back(graph_from_json(c));

  if (auto it = j.find("subsets"); it != j.end()) {
    require(it->is_array(), "join spec: subsets must be an array of index arrays");
    require(it->size() == spec.components.size(), "join spec: one subset per component is required");
    std::vector<VertexSubset> subsets;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const Json& s = (*it)[i];
      require(s.is_array(), "join spec: subset " + std::to_string(i) + " must be an array");
      std::vector<std::size_t> members;
      for (const auto& v : s) members.push_back(index_from_json(v, "subset member"));
      subsets.emplace_back(spec.components[i].n(), std::move(members));
    }
    spec.subsets = std::move(subsets);
  }
  if (auto it = j.find("universal"); it != j.end()) spec.universal = universal_from_json(*it);
  if (auto it = j.find("rho"); it != j.end()) spec.rho_override = rational_matrix_from_json(*it);
  if (auto it = j.find("allow_zero_alpha"); it != j.end()) {
    require(it->is_boolean(), "join spec: allow_zero_alpha must be a boolean");
    spec.allow_zero_alpha = it->get<bool>();
  }
  spec.validate();
  return spec;
}

Json to_json(const JoinSpec& spec) {
  Json j;
  j["host"] = to_json(spec.host);
  Json comps = Json::array();
  for (const auto& g : spec.components) comps.push_back(to_json(g));
  j["components"] = std::move(comps);
  if (spec.subsets) {
    Json subsets = Json::array();
    for (const auto& s : *spec.subsets) subsets.push_back(s.members());
    j["subsets"] = std::move(subsets);
  }
  if (spec.universal) j["universal"] = to_json(*spec.universal);
  if (spec.rho_override) j["rho"] = to_json(*spec.rho_override);
  if (spec.allow_zero_alpha) j["allow_zero_alpha"] = true;
  return j;
}

FiedlerInput fiedler_input_from_json(const Json& j) {
  require(j.is_object(), "fiedler input: expected an object");
  reject_unknown(j, {"blocks", "rho"}, "fiedler input");
  FiedlerInput in;
  const Json& blocks = member(j, "blocks", "fiedler input");
  require(blocks.is_array(), "fiedler input: blocks must be an array");
  for (const auto& b : blocks) {
    require(b.is_object(), "fiedler input: each block must be an object");
    reject_unknown(b, {"m", "u", "v"}, "block");
    FiedlerBlock blk{rational_matrix_from_json(member(b, "m", "block")), vector_from_json(member(b, "u", "block")), {}};
    blk.v = b.contains("v") ? vector_from_json(b["v"]) : blk.u;
    in.blocks.push_back(std::move(blk));
  }
  in.rho = rational_matrix_from_json(member(j, "rho", "fiedler input"));
  if (in.rho.rows() == 0 && in.k() > 0) in.rho = RationalMatrix(in.k(), in.k());
  in.validate();
  return in;
}

Json to_json(const FiedlerInput& in) {
  Json blocks = Json::array();
  for (const auto& b : in.blocks) blocks.push_back({{"m", to_json(b.m)}, {"u", vector_to_json(b.u)}, {"v", vector_to_json(b.v)}});
  return Json{{"blocks", std::move(blocks)}, {"rho", to_json(in.rho)}};
}

Json to_json(const MainFunction& mf) {
  return Json{{"gamma", to_json(mf.gamma)},
              {"f", to_json(mf.numerator_f)},
              {"g", to_json(mf.denominator_g)},
              {"source_dim", mf.source_dim},
              {"source_charpoly", to_json(mf.source_charpoly)}};
}

Json to_json(const Verdict& v) {
  Json j{{"pass", v.pass}, {"detail", v.detail}};
  if (v.first_difference) j["first_difference"] = *v.first_difference;
  return j;
}

Json to_json(const SpectrumReport& rep) {
  auto entries = [](const std::vector<SpectrumEntry>& es) {
    Json a = Json::array();
    for (const auto& e : es)
      a.push_back({{"value", e.value}, {"multiplicity", e.multiplicity}, {"component", e.component}});
    return a;
  };
  Json j;
  j["route"] = rep.route;
  j["charpoly"] = to_json(rep.charpoly);
  j["inherited"] = entries(rep.inherited);
  j["reduced"] = entries(rep.reduced);
  j["phi"] = to_json(rep.phi);
  j["phi_roots"] = rep.phi_roots;
  j["eigenvalues"] = rep.eigenvalues();
  if (rep.oracle_verdict) j["oracle"] = to_json(*rep.oracle_verdict);
  return j;
}

Json to_json(const SpecialEigenvalues& s) {
  Json a = Json::array();
  for (const auto& e : s.entries)
    a.push_back({{"value", e.value}, {"multiplicity", e.multiplicity}, {"label", to_string(e.label)}});
  return Json{{"k", s.k}, {"tau", s.tau}, {"eigenvalues", std::move(a)}};
}

Json parse_json(std::string_view text, std::string_view origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string(origin) + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path.string());
}

JoinSpec load_join_spec(const std::filesystem::path& path) {
  const Json j = read_json_file(path);
  try {
    return join_spec_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

}  // namespace fiedler
