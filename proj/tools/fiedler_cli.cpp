#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "fiedler/errors.hpp"
#include "fiedler/io.hpp"
#include "fiedler/join_spectra.hpp"
#include "fiedler/oracle.hpp"
#include "fiedler/random_inputs.hpp"

using namespace fiedler;

namespace {

enum ExitCode { kOk = 0, kInternal = 1, kInput = 2, kPrecondition = 3 };

using Input = std::variant<JoinSpec, FiedlerInput>;

Input load_input(const std::string& path) {
  const Json j = read_json_file(path);
  try {
    if (j.is_object() && j.contains("blocks")) return fiedler_input_from_json(j);
    return join_spec_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

void emit(const Json& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump() << "\n";
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw InputError("cannot write " + out);
  f << j.dump() << "\n";
}

Polynomial poly_of(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  for (long x : ascending) c.emplace_back(x);
  return Polynomial(std::move(c));
}

// ---------------------------------------------------------------- routes

struct RoutedPolynomial {
  Polynomial charpoly;
  std::string route;
  std::vector<MainFunction> gammas;
};

std::vector<MainFunction> gammas_of(const FiedlerInput& in) { return fiedler_decompose(in).gammas; }

bool lex_shaped(const JoinSpec& s) {
  if (s.subsets || s.rho_override || s.components.empty()) return false;
  for (const auto& g : s.components)
    if (!(g == s.components.front())) return false;
  return true;
}

RoutedPolynomial charpoly_route(const Input& input, const std::string& route) {
  if (const auto* in = std::get_if<FiedlerInput>(&input)) {
    if (route == "oracle") return {oracle_charpoly(assemble(*in), oracle_cap_from_env()), "oracle", {}};
    if (route != "auto" && route != "fiedler") throw InputError("route " + route + " needs a join spec, not blocks");
    const auto dec = fiedler_decompose(*in);
    return {dec.charpoly, "fiedler", dec.gammas};
  }
  const JoinSpec& s = std::get<JoinSpec>(input);
  std::string r = route;
  if (r == "auto") r = s.subsets ? "generalized-join" : s.universal ? "universal-hjoin" : "hjoin";

  if (r == "generalized-join") {
    const FiedlerInput in = hgen_join_input(s);
    return {hgen_join_charpoly(s), r, gammas_of(in)};
  }
  if (r == "hjoin" || r == "universal-hjoin") {
    if (r == "hjoin" && s.universal && !(*s.universal == UniversalParams::adjacency()))
      throw PreconditionError("route hjoin is the adjacency route; this spec carries universal parameters");
    return {hjoin_universal_charpoly(s), r, gammas_of(hjoin_universal_input(s))};
  }
  if (r == "fiedler") {
    const FiedlerInput in = s.subsets ? hgen_join_input(s) : hjoin_universal_input(s);
    const auto dec = fiedler_decompose(in);
    return {dec.charpoly, r, dec.gammas};
  }
  if (r == "lex") {
    if (!lex_shaped(s)) throw PreconditionError("the lexicographic route needs identical components and no subsets or rho");
    return {lex_universal_charpoly(s.host, s.components.front(), s.universal.value_or(UniversalParams::adjacency())),
            r,
            {}};
  }
  if (r == "oracle") {
    const AssembledMatrix a = s.subsets ? assemble_generalized_join(s) : assemble_universal_join(s);
    return {oracle_charpoly(a, oracle_cap_from_env()), r, {}};
  }
  throw InputError("unknown charpoly route \"" + route + "\"");
}

Json polynomial_output(const RoutedPolynomial& rp, bool with_gammas) {
  Json j;
  j["charpoly"] = to_json(rp.charpoly);
  j["factored_hint"] = factored_hint(rp.charpoly);
  j["route"] = rp.route;
  if (with_gammas) {
    Json g = Json::array();
    for (const auto& mf : rp.gammas) g.push_back(to_json(mf));
    j["main_functions"] = std::move(g);
  }
  return j;
}

// The graph the spec describes, independent of any rho override.
AssembledMatrix graph_oracle_matrix(const JoinSpec& s) {
  AssembledMatrix a;
  a.block_offsets = s.offsets();
  if (s.subsets) {
    a.provenance = Provenance::GeneralizedJoin;
    a.matrix = h_generalized_join(s).adjacency_matrix();
  } else {
    a.provenance = s.universal ? Provenance::UniversalJoin : Provenance::AdjacencyJoin;
    a.matrix = universal_matrix(h_join(s), s.universal.value_or(UniversalParams::adjacency()), s.allow_zero_alpha);
  }
  return a;
}

// ---------------------------------------------------------------- verbs

int run_charpoly(const std::string& path, const std::string& route, bool with_gammas, const std::string& out) {
  emit(polynomial_output(charpoly_route(load_input(path), route), with_gammas), out);
  return kOk;
}

int run_spectrum(const std::string& path, const std::string& route, double tol, bool oracle, const std::string& out) {
  const Input input = load_input(path);
  SpectrumReport rep;
  AssembledMatrix a;
  if (const auto* in = std::get_if<FiedlerInput>(&input)) {
    if (route != "auto" && route != "fiedler") throw InputError("route " + route + " needs a join spec, not blocks");
    rep = fiedler_spectrum(*in, tol);
    a = assemble(*in);
  } else {
    const JoinSpec& s = std::get<JoinSpec>(input);
    if (route == "auto" || route == "fiedler")
      rep = s.subsets ? hgen_join_spectrum(s, tol) : hjoin_universal_spectrum(s, tol);
    else if (route == "regular-corollary")
      rep = hjoin_universal_spectrum_regular(s, std::nullopt, tol);
    else if (route == "alpha-delta-zero-corollary")
      rep = hjoin_universal_spectrum_alpha_delta_zero(s, tol);
    else
      throw InputError("unknown spectrum route \"" + route + "\"");
    a = s.subsets ? assemble_generalized_join(s) : assemble_universal_join(s);
  }
  if (oracle && a.matrix.rows() <= oracle_cap_from_env()) rep.oracle_verdict = compare_spectra(rep.eigenvalues(), oracle_spectrum(a), tol);
  emit(to_json(rep), out);
  return rep.oracle_verdict && !rep.oracle_verdict->pass ? kInternal : kOk;
}

int run_gcp(const std::string& path, const std::string& t_text, bool oracle, const std::string& out) {
  const Rational t = parse_rational(t_text);
  const Input input = load_input(path);
  const auto* s = std::get_if<JoinSpec>(&input);
  if (!s) throw InputError("gcp needs a join spec");
  RoutedPolynomial rp{generalized_charpoly(*s, t), "generalized-charpoly", {}};
  Json j = polynomial_output(rp, false);
  j["t"] = to_json(t);
  int code = kOk;
  if (oracle) {
    const Graph g = h_join(*s);
    const RationalMatrix m = g.adjacency_matrix() + Rational(-t) * g.degree_matrix();
    AssembledMatrix a{m, s->offsets(), Provenance::AdjacencyJoin};
    const Verdict v = compare(rp.charpoly, oracle_charpoly(a, oracle_cap_from_env()));
    j["oracle"] = to_json(v);
    if (!v.pass) code = kInternal;
  }
  emit(j, out);
  return code;
}

struct CoronaInput {
  Graph host;
  std::vector<Graph> family;
};

CoronaInput load_corona(const std::string& path) {
  const Json j = read_json_file(path);
  if (!j.is_object() || !j.contains("host") || !j.contains("family") || !j["family"].is_array())
    throw InputError(path + ": corona input needs \"host\" and a \"family\" array");
  CoronaInput c{graph_from_json(j["host"]), {}};
  for (const auto& g : j["family"]) c.family.push_back(graph_from_json(g));
  return c;
}

int run_corona(const std::string& path, const std::string& route, bool oracle, const std::string& out) {
  const CoronaInput c = load_corona(path);
  RoutedPolynomial rp;
  if (route == "auto" || route == "direct")
    rp = {corona_charpoly(c.host, c.family), "corona", {}};
  else if (route == "hjoin")
    rp = {corona_charpoly_via_hjoin(c.host, c.family), "corona-via-hjoin", {}};
  else
    throw InputError("unknown corona route \"" + route + "\"");
  Json j = polynomial_output(rp, false);
  int code = kOk;
  if (oracle) {
    const Verdict v = compare(rp.charpoly, oracle_charpoly(assemble_corona(c.host, c.family), oracle_cap_from_env()));
    j["oracle"] = to_json(v);
    if (!v.pass) code = kInternal;
  }
  emit(j, out);
  return code;
}

int run_lex(const std::string& path, const std::string& host_text, const std::string& factor_text,
            const std::string& params_text, bool oracle, const std::string& out) {
  Graph host, factor;
  UniversalParams p = UniversalParams::adjacency();
  if (!path.empty()) {
    const Json j = read_json_file(path);
    if (!j.is_object() || !j.contains("host") || !j.contains("factor"))
      throw InputError(path + ": lexicographic input needs \"host\" and \"factor\"");
    host = graph_from_json(j["host"]);
    factor = graph_from_json(j["factor"]);
    if (j.contains("universal")) p = universal_from_json(j["universal"]);
  } else {
    if (host_text.empty() || factor_text.empty()) throw InputError("lex needs a file or both --host and --factor");
    host = parse_graph_text(host_text);
    factor = parse_graph_text(factor_text);
  }
  if (!params_text.empty()) p = universal_from_json(parse_json(params_text, "--universal"));

  RoutedPolynomial rp{lex_universal_charpoly(host, factor, p), "lex", {}};
  Json j = polynomial_output(rp, false);
  int code = kOk;
  if (oracle) {
    const RationalMatrix m = universal_matrix(lexicographic(host, factor), p);
    const Verdict v = compare(rp.charpoly, oracle_charpoly(AssembledMatrix{m, {}, Provenance::UniversalJoin},
                                                           oracle_cap_from_env()));
    j["oracle"] = to_json(v);
    if (!v.pass) code = kInternal;
  }
  emit(j, out);
  return code;
}

struct CaseResult {
  std::string name;
  Verdict verdict;
};

CaseResult verify_one(const std::string& name, const Input& input) {
  if (const auto* in = std::get_if<FiedlerInput>(&input))
    return {name, compare(fiedler_charpoly(*in), oracle_charpoly(assemble(*in), oracle_cap_from_env()))};
  const JoinSpec& s = std::get<JoinSpec>(input);
  const Polynomial formula = charpoly_route(input, "auto").charpoly;
  return {name, compare(formula, oracle_charpoly(graph_oracle_matrix(s), oracle_cap_from_env()))};
}

UniversalParams random_params(random::Rng& rng) {
  switch (random::uniform(rng, 0, 4)) {
    case 0: return UniversalParams::adjacency();
    case 1: return UniversalParams::laplacian();
    case 2: return UniversalParams::signless_laplacian();
    case 3: return UniversalParams::seidel();
    default: {
      UniversalParams p{random::random_rational(rng), random::random_rational(rng), random::random_rational(rng),
                        random::random_rational(rng)};
      if (sgn(p.alpha) == 0) p.alpha = 1;
      return p;
    }
  }
}

// One random case per kind in rotation: blocks, universal join,
// generalized join, corona, lexicographic product.
CaseResult random_case(random::Rng& rng, std::size_t i, std::size_t kmax, std::size_t nmax) {
  const std::string id = "case " + std::to_string(i);
  switch (i % 5) {
    case 0: {
      const FiedlerInput in = random::random_fiedler_input(rng, kmax, nmax);
      return verify_one(id + " blocks", in);
    }
    case 1: {
      JoinSpec s = random::random_join_spec(rng, kmax, nmax);
      s.universal = random_params(rng);
      return verify_one(id + " universal-hjoin", s);
    }
    case 2: return verify_one(id + " generalized-join", random::random_join_spec(rng, kmax, nmax, true));
    case 3: {
      const std::size_t k = random::uniform(rng, 1, kmax);
      const Graph hp = random::random_graph(rng, k);
      std::vector<Graph> fam;
      for (std::size_t c = 0; c < k; ++c) fam.push_back(random::random_graph(rng, random::uniform(rng, 1, nmax)));
      return {id + " corona",
              compare(corona_charpoly(hp, fam), oracle_charpoly(assemble_corona(hp, fam), oracle_cap_from_env()))};
    }
    default: {
      const Graph host = random::random_graph(rng, random::uniform(rng, 1, kmax));
      const Graph factor = random::random_graph(rng, random::uniform(rng, 1, nmax));
      UniversalParams p = random_params(rng);
      p.delta = 0;
      const RationalMatrix m = universal_matrix(lexicographic(host, factor), p);
      return {id + " lex", compare(lex_universal_charpoly(host, factor, p),
                                   oracle_charpoly(AssembledMatrix{m, {}, Provenance::UniversalJoin},
                                                   oracle_cap_from_env()))};
    }
  }
}

int report(const std::vector<CaseResult>& results, bool json, const std::string& out) {
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.verdict.pass;
  if (json) {
    Json cases = Json::array();
    for (const auto& r : results) {
      Json c = to_json(r.verdict);
      c["name"] = r.name;
      cases.push_back(std::move(c));
    }
    emit(Json{{"passed", passed}, {"total", results.size()}, {"cases", std::move(cases)}}, out);
  } else {
    std::ostringstream ss;
    for (const auto& r : results)
      ss << (r.verdict.pass ? "PASS " : "FAIL ") << r.name << ": " << r.verdict.detail << "\n";
    ss << passed << "/" << results.size() << " passed\n";
    if (out.empty() || out == "-") {
      std::cout << ss.str();
    } else {
      std::ofstream f(out, std::ios::binary);
      f << ss.str();
    }
  }
  return passed == results.size() ? kOk : kInternal;
}

int run_verify(const std::string& path, std::optional<std::uint64_t> seed, std::size_t cases, std::size_t kmax,
               std::size_t nmax, bool json, const std::string& out) {
  std::vector<CaseResult> results;
  if (!path.empty()) {
    results.push_back(verify_one(path, load_input(path)));
  } else {
    if (!seed) throw InputError("verify needs a spec file or --seed");
    random::Rng rng(*seed);
    for (std::size_t i = 0; i < cases; ++i) results.push_back(random_case(rng, i, kmax, nmax));
  }
  return report(results, json, out);
}

// ---------------------------------------------------------------- fixtures

JoinSpec path_host_spec() {
  JoinSpec s;
  s.host = Graph::path(3);
  s.components = {Graph::path(3), Graph(4, {{0, 2}, {1, 2}, {2, 3}}), Graph(3, {{0, 1}})};
  return s;
}

struct FixtureRow {
  std::string name;
  std::optional<bool> pass;  // nullopt: skipped without the oracle
  std::string detail;
};

std::string join_pretty(const std::vector<MainFunction>& gs) {
  std::string out;
  for (const auto& g : gs) out += (out.empty() ? "" : ", ") + g.gamma.pretty();
  return out;
}

std::vector<FixtureRow> run_fixture_rows(bool oracle, double tol) {
  std::vector<FixtureRow> rows;
  const std::size_t cap = oracle_cap_from_env();
  auto add = [&](std::string name, const std::function<FixtureRow()>& body) {
    try {
      FixtureRow r = body();
      r.name = std::move(name);
      rows.push_back(std::move(r));
    } catch (const std::exception& e) {
      rows.push_back({std::move(name), false, std::string("threw: ") + e.what()});
    }
  };
  auto with_oracle = [&](bool formula_ok, const Polynomial& formula, const std::function<Polynomial()>& dense) {
    FixtureRow r{"", formula_ok, formula.pretty()};
    if (oracle) {
      const Verdict v = compare(formula, dense());
      r.pass = formula_ok && v.pass;
      r.detail += "  [oracle: " + v.detail + "]";
    }
    return r;
  };

  const JoinSpec join = path_host_spec();
  JoinSpec gen = join;
  gen.subsets = std::vector<VertexSubset>{VertexSubset(3, {0, 1}), VertexSubset(4, {0, 1, 3}), VertexSubset(3, {1, 2})};
  const Polynomial join_golden = poly_of({0, 0, 0, -12, 34, 92, 15, -60, -30, 0, 1});
  const Polynomial gen_golden = poly_of({0, 0, 0, 0, -15, 6, 35, -6, -18, 0, 1});

  add("H-join adjacency charpoly, P3 host", [&] {
    const Polynomial p = hjoin_universal_charpoly(join);
    return with_oracle(p == join_golden, p, [&] { return oracle_charpoly(assemble_universal_join(join), cap); });
  });
  add("H-join main functions", [&] {
    const auto gs = gammas_of(hjoin_universal_input(join));
    const std::vector<RationalFunction> want = {ratfun_reduce(poly_of({4, 3}), poly_of({-2, 0, 1})),
                                                ratfun_reduce(poly_of({6, 4}), poly_of({-3, 0, 1})),
                                                ratfun_reduce(poly_of({-1, 3}), poly_of({0, -1, 1}))};
    bool ok = gs.size() == 3;
    for (std::size_t i = 0; ok && i < 3; ++i) ok = gs[i].gamma == want[i];
    return FixtureRow{"", ok, join_pretty(gs)};
  });
  add("generalized join charpoly, P3 host", [&] {
    const Polynomial p = hgen_join_charpoly(gen);
    return with_oracle(p == gen_golden, p, [&] { return oracle_charpoly(assemble_generalized_join(gen), cap); });
  });
  add("generalized join main functions", [&] {
    const auto gs = gammas_of(hgen_join_input(gen));
    const std::vector<RationalFunction> want = {ratfun_reduce(poly_of({-1, 2, 2}), poly_of({0, -2, 0, 1})),
                                                ratfun_reduce(poly_of({0, 3}), poly_of({-3, 0, 1})),
                                                ratfun_reduce(poly_of({-1, 0, 2}), poly_of({0, -1, 0, 1}))};
    bool ok = gs.size() == 3;
    for (std::size_t i = 0; ok && i < 3; ++i) ok = gs[i].gamma == want[i];
    return FixtureRow{"", ok, join_pretty(gs)};
  });
  add("regular corollary vs general route, C4 and K3 under K2, Laplacian", [&] {
    JoinSpec s;
    s.host = Graph::complete(2);
    s.components = {Graph::cycle(4), Graph::complete(3)};
    s.universal = UniversalParams::laplacian();
    const Verdict v = compare_spectra(hjoin_universal_spectrum_regular(s, std::nullopt, tol).eigenvalues(),
                                      hjoin_universal_spectrum(s, tol).eigenvalues(), tol);
    return FixtureRow{"", v.pass, v.detail};
  });
  add("alpha + delta = 0 corollary vs general route, Laplacian, P3 host", [&] {
    JoinSpec s = join;
    s.universal = UniversalParams::laplacian();
    const Verdict v = compare_spectra(hjoin_universal_spectrum_alpha_delta_zero(s, tol).eigenvalues(),
                                      hjoin_universal_spectrum(s, tol).eigenvalues(), tol);
    return FixtureRow{"", v.pass, v.detail};
  });
  add("corona, direct vs H-join route, C4 with K1 family", [&] {
    const std::vector<Graph> fam(4, Graph::empty(1));
    const Polynomial p = corona_charpoly(Graph::cycle(4), fam);
    return with_oracle(p == corona_charpoly_via_hjoin(Graph::cycle(4), fam), p,
                       [&] { return oracle_charpoly(assemble_corona(Graph::cycle(4), fam), cap); });
  });
  add("corona K1 with K1", [&] {
    const Polynomial p = corona_charpoly(Graph::empty(1), {Graph::empty(1)});
    return FixtureRow{"", p == poly_of({-1, 0, 1}), p.pretty()};
  });
  add("lexicographic product vs H-join route, P3[K2]", [&] {
    const Polynomial p = lex_universal_charpoly(Graph::path(3), Graph::complete(2));
    JoinSpec s;
    s.host = Graph::path(3);
    s.components.assign(3, Graph::complete(2));
    return with_oracle(p == hjoin_universal_charpoly(s), p, [&] {
      return oracle_charpoly(AssembledMatrix{lexicographic(Graph::path(3), Graph::complete(2)).adjacency_matrix(), {},
                                             Provenance::AdjacencyJoin},
                             cap);
    });
  });
  add("lexicographic product K2[K1]", [&] {
    const Polynomial p = lex_universal_charpoly(Graph::complete(2), Graph::empty(1));
    return FixtureRow{"", p == poly_of({-1, 0, 1}), p.pretty()};
  });
  add("generalized charpoly at t = 0, P3 host", [&] {
    const Polynomial p = generalized_charpoly(join, 0);
    return FixtureRow{"", p == join_golden, p.pretty()};
  });
  add("generalized charpoly at t = 1/2, P3 host", [&] {
    const Rational t = Rational(1) / 2;
    const Polynomial p = generalized_charpoly(join, t);
    const Graph g = h_join(join);
    FixtureRow r = with_oracle(true, p, [&] {
      return oracle_charpoly(AssembledMatrix{g.adjacency_matrix() + Rational(-t) * g.degree_matrix(), {},
                                             Provenance::AdjacencyJoin},
                             cap);
    });
    if (!oracle) r.pass = std::nullopt;
    return r;
  });
  return rows;
}

int run_fixtures(bool oracle, bool json, double tol, const std::string& out) {
  const auto rows = run_fixture_rows(oracle, tol);
  bool all = true;
  for (const auto& r : rows) all = all && r.pass.value_or(true);
  if (json) {
    Json a = Json::array();
    for (const auto& r : rows) {
      Json row{{"name", r.name}, {"detail", r.detail}};
      row["status"] = r.pass ? (*r.pass ? "pass" : "fail") : "skipped";
      a.push_back(std::move(row));
    }
    emit(Json{{"all_passed", all}, {"fixtures", std::move(a)}}, out);
  } else {
    std::ostringstream ss;
    for (const auto& r : rows)
      ss << (r.pass ? (*r.pass ? "pass" : "FAIL") : "skip") << "  " << r.name << "\n      " << r.detail << "\n";
    ss << (all ? "all fixtures passed" : "some fixtures FAILED") << "\n";
    if (out.empty() || out == "-") {
      std::cout << ss.str();
    } else {
      std::ofstream f(out, std::ios::binary);
      f << ss.str();
    }
  }
  return all ? kOk : kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact characteristic polynomials and spectra of graph joins"};
  app.require_subcommand(1);

  std::string spec, route = "auto", out, t_text, host_text, factor_text, params_text;
  double tol = kDefaultSpectrumTol;
  bool no_oracle = false, json = false, with_gammas = false;
  std::optional<std::uint64_t> seed;
  std::size_t cases = 50, kmax = 5, nmax = 5;

  auto* charpoly_cmd = app.add_subcommand("charpoly", "Exact characteristic polynomial of a join spec or block input");
  charpoly_cmd->add_option("spec", spec, "JSON spec file")->required();
  charpoly_cmd->add_option("--route", route, "auto, hjoin, universal-hjoin, generalized-join, fiedler, lex, oracle");
  charpoly_cmd->add_flag("--gammas", with_gammas, "Include the main functions");
  charpoly_cmd->add_option("--out", out, "Output file (default stdout)");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Classified spectrum with a numeric oracle check");
  spectrum_cmd->add_option("spec", spec, "JSON spec file")->required();
  spectrum_cmd->add_option("--route", route, "auto, fiedler, regular-corollary, alpha-delta-zero-corollary");
  spectrum_cmd->add_option("--tol", tol, "Absolute eigenvalue tolerance");
  spectrum_cmd->add_flag("--no-oracle", no_oracle, "Skip the dense numeric oracle");
  spectrum_cmd->add_option("--out", out, "Output file (default stdout)");

  auto* gcp_cmd = app.add_subcommand("gcp", "det(lI - (A - tD)) of an H-join at a rational t");
  gcp_cmd->add_option("spec", spec, "JSON spec file")->required();
  gcp_cmd->add_option("--t", t_text, "Rational t, e.g. 1/2")->required();
  gcp_cmd->add_flag("--no-oracle", no_oracle, "Skip the dense oracle");
  gcp_cmd->add_option("--out", out, "Output file (default stdout)");

  auto* corona_cmd = app.add_subcommand("corona", "Characteristic polynomial of a generalized corona");
  corona_cmd->add_option("spec", spec, "JSON file with \"host\" and \"family\"")->required();
  corona_cmd->add_option("--route", route, "auto, direct, hjoin");
  corona_cmd->add_flag("--no-oracle", no_oracle, "Skip the dense oracle");
  corona_cmd->add_option("--out", out, "Output file (default stdout)");

  auto* lex_cmd = app.add_subcommand("lex", "Characteristic polynomial of a lexicographic product H[G]");
  lex_cmd->add_option("spec", spec, "JSON file with \"host\", \"factor\" and optional \"universal\"");
  lex_cmd->add_option("--host", host_text, "Host graph as \"n; u-v,...\"");
  lex_cmd->add_option("--factor", factor_text, "Factor graph as \"n; u-v,...\"");
  lex_cmd->add_option("--universal", params_text, "Universal parameters as JSON or a preset name in quotes");
  lex_cmd->add_flag("--no-oracle", no_oracle, "Skip the dense oracle");
  lex_cmd->add_option("--out", out, "Output file (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Formula against the graph-built dense oracle");
  verify_cmd->add_option("spec", spec, "JSON spec file");
  verify_cmd->add_option("--seed", seed, "Seed for a random suite");
  verify_cmd->add_option("--cases", cases, "Number of random cases");
  verify_cmd->add_option("--kmax", kmax, "Largest number of components");
  verify_cmd->add_option("--nmax", nmax, "Largest component order");
  verify_cmd->add_flag("--json", json, "Machine-readable report");
  verify_cmd->add_option("--out", out, "Output file (default stdout)");

  auto* fixtures_cmd = app.add_subcommand("fixtures", "Run the built-in golden fixtures");
  fixtures_cmd->add_flag("--no-oracle", no_oracle, "Formula-only run");
  fixtures_cmd->add_flag("--json", json, "Machine-readable results");
  fixtures_cmd->add_option("--tol", tol, "Absolute eigenvalue tolerance");
  fixtures_cmd->add_option("--out", out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*charpoly_cmd) return run_charpoly(spec, route, with_gammas, out);
    if (*spectrum_cmd) return run_spectrum(spec, route, tol, !no_oracle, out);
    if (*gcp_cmd) return run_gcp(spec, t_text, !no_oracle, out);
    if (*corona_cmd) return run_corona(spec, route, !no_oracle, out);
    if (*lex_cmd) return run_lex(spec, host_text, factor_text, params_text, !no_oracle, out);
    if (*verify_cmd) return run_verify(spec, seed, cases, kmax, nmax, json, out);
    if (*fixtures_cmd) return run_fixtures(!no_oracle, json, tol, out);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const ShapeError& e) {
    std::cerr << "shape error: " << e.what() << "\n";
    return kInput;
  } catch (const SpecError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return kInput;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
