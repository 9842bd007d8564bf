#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "fiedler/fiedler_input.hpp"
#include "fiedler/graph.hpp"
#include "fiedler/join_spectra.hpp"
#include "fiedler/oracle.hpp"
#include "fiedler/polynomial.hpp"
#include "fiedler/rational_function.hpp"
#include "fiedler/special_eigenvalues.hpp"

namespace fiedler {

using Json = nlohmann::ordered_json;

/// Accepts "p/q" strings and JSON integers. Throws InputError otherwise.
Rational rational_from_json(const Json& j);
Json to_json(const Rational& q);

/// Ascending coefficient strings; [] is the zero polynomial.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

/// {"num": [...], "den": [...]}
Json to_json(const RationalFunction& f);
RationalFunction rational_function_from_json(const Json& j);

Json to_json(const RationalMatrix& m);
RationalMatrix rational_matrix_from_json(const Json& j);

/// [{"factor": [...], "multiplicity": m}, ...] from the square-free decomposition.
Json factored_hint(const Polynomial& p);

/// "n; u-v,u-v,..." (the edge list may be empty).
Graph parse_graph_text(std::string_view text);
/// {"n": n, "edges": [[u, v], ...]} or a string in the text format.
Graph graph_from_json(const Json& j);
Json to_json(const Graph& g);

/// {"alpha": "p/q", ...}; missing keys keep the adjacency defaults. A
/// string names a preset: adjacency, laplacian, signless_laplacian, seidel.
UniversalParams universal_from_json(const Json& j);
Json to_json(const UniversalParams& p);

/// Keys host, components, optional subsets, universal, rho, allow_zero_alpha.
/// Unknown keys are rejected. Throws InputError on schema violations and
/// SpecError on structural ones.
JoinSpec join_spec_from_json(const Json& j);
Json to_json(const JoinSpec& spec);

/// {"blocks": [{"m": [[...]], "u": [...], "v": [...]}], "rho": [[...]]}
FiedlerInput fiedler_input_from_json(const Json& j);
Json to_json(const FiedlerInput& in);

Json to_json(const MainFunction& mf);
Json to_json(const Verdict& v);
Json to_json(const SpectrumReport& rep);
Json to_json(const SpecialEigenvalues& s);

/// Parses JSON text; malformed input raises InputError carrying the byte offset.
Json parse_json(std::string_view text, std::string_view origin = "<input>");
Json read_json_file(const std::filesystem::path& path);
JoinSpec load_join_spec(const std::filesystem::path& path);

}  // namespace fiedler
