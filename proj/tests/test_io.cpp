#include <doctest.h>

#include "fiedler/errors.hpp"
#include "fiedler/io.hpp"
#include "support.hpp"

using namespace fiedler;
using testing::poly;

TEST_SUITE("io") {
  TEST_CASE("rationals") {
    CHECK(rational_from_json(Json("-10/4")) == parse_rational("-5/2"));
    CHECK(rational_from_json(Json(7)) == 7);
    CHECK(to_json(parse_rational("6/4")) == Json("3/2"));
    CHECK(to_json(Rational(-3)) == Json("-3"));
    CHECK_THROWS_AS(rational_from_json(Json("x/2")), InputError);
    CHECK_THROWS_AS(rational_from_json(Json(0.5)), InputError);
    CHECK_THROWS_AS(rational_from_json(Json("1/0")), InputError);
  }

  TEST_CASE("polynomial round trip is byte identical") {
    testing::Rng rng(81);
    for (int trial = 0; trial < 50; ++trial) {
      const Polynomial p = testing::random_polynomial(rng, testing::uniform(rng, 0, 8));
      const std::string text = to_json(p).dump();
      const Polynomial back = polynomial_from_json(parse_json(text));
      CHECK(back == p);
      CHECK(to_json(back).dump() == text);
    }
    CHECK(to_json(Polynomial()).dump() == "[]");
    CHECK(polynomial_from_json(Json::array()).is_zero());
  }

  TEST_CASE("charpoly output round trip is byte identical") {
    const JoinSpec s = load_join_spec(FIXTURE_DIR "/p3_join.json");
    Json out;
    out["charpoly"] = to_json(hjoin_universal_charpoly(s));
    out["factored_hint"] = factored_hint(hjoin_universal_charpoly(s));
    out["route"] = "hjoin";
    const std::string text = out.dump();
    const Json back = parse_json(text);
    Json again;
    again["charpoly"] = to_json(polynomial_from_json(back["charpoly"]));
    again["factored_hint"] = factored_hint(polynomial_from_json(back["charpoly"]));
    again["route"] = back["route"];
    CHECK(again.dump() == text);
  }

  TEST_CASE("factored hint multiplies back") {
    const Polynomial p = poly({0, 0, 0, -12, 34, 92, 15, -60, -30, 0, 1});
    const Json hint = factored_hint(p);
    Polynomial prod = poly({1});
    for (const auto& e : hint) {
      const Polynomial f = polynomial_from_json(e["factor"]);
      for (int m = 0; m < e["multiplicity"].get<int>(); ++m) prod *= f;
    }
    CHECK(prod == p);

    const Polynomial q = poly({6, 4});
    Polynomial qprod = poly({1});
    for (const auto& e : factored_hint(q)) {
      const Polynomial f = polynomial_from_json(e["factor"]);
      for (int m = 0; m < e["multiplicity"].get<int>(); ++m) qprod *= f;
    }
    CHECK(qprod == q);
  }

  TEST_CASE("rational functions and matrices") {
    const RationalFunction f = ratfun_reduce(poly({4, 3}), poly({-2, 0, 1}));
    CHECK(rational_function_from_json(to_json(f)) == f);
    testing::Rng rng(82);
    const RationalMatrix m = testing::random_matrix(rng, 3, 4);
    CHECK(rational_matrix_from_json(to_json(m)) == m);
    CHECK_THROWS_AS(rational_matrix_from_json(parse_json("[[1, 2], [3]]")), InputError);
  }

  TEST_CASE("graph text format") {
    const Graph g = parse_graph_text("4; 0-2, 1-2,2-3");
    CHECK(g == Graph(4, {{0, 2}, {1, 2}, {2, 3}}));
    CHECK(parse_graph_text("3;") == Graph::empty(3));
    CHECK(graph_from_json(Json("2; 0-1")) == Graph::complete(2));
    CHECK(graph_from_json(to_json(g)) == g);
    CHECK_THROWS(parse_graph_text("3; 0-3"));
    CHECK_THROWS(parse_graph_text("3; 1-1"));
    CHECK_THROWS(parse_graph_text("three; 0-1"));
    CHECK_THROWS(parse_graph_text("3 0-1"));
  }

  TEST_CASE("universal parameters") {
    CHECK(universal_from_json(Json("laplacian")) == UniversalParams::laplacian());
    CHECK(universal_from_json(Json("seidel")) == UniversalParams::seidel());
    CHECK(universal_from_json(parse_json(R"({"delta": 1})")) == UniversalParams::signless_laplacian());
    const UniversalParams p{parse_rational("2/3"), -1, 5, parse_rational("-1/7")};
    CHECK(universal_from_json(to_json(p)) == p);
    CHECK_THROWS_AS(universal_from_json(Json("spectral")), InputError);
  }

  TEST_CASE("join spec round trip") {
    for (const char* name : {"/p3_join.json", "/p3_generalized_join.json", "/p3_join_laplacian.json",
                             "/k2_weighted_coupling.json"}) {
      const JoinSpec s = load_join_spec(std::string(FIXTURE_DIR) + name);
      const std::string text = to_json(s).dump();
      const JoinSpec back = join_spec_from_json(parse_json(text));
      CHECK(to_json(back).dump() == text);
      if (s.subsets)
        CHECK(hgen_join_charpoly(back) == hgen_join_charpoly(s));
      else
        CHECK(hjoin_universal_charpoly(back) == hjoin_universal_charpoly(s));
    }
    testing::Rng rng(83);
    for (int trial = 0; trial < 20; ++trial) {
      const JoinSpec s = testing::random_join_spec(rng, 4, 4, trial % 2 == 0);
      CHECK(to_json(join_spec_from_json(to_json(s))).dump() == to_json(s).dump());
    }
  }

  TEST_CASE("fiedler input round trip") {
    testing::Rng rng(84);
    for (int trial = 0; trial < 20; ++trial) {
      const FiedlerInput in = testing::random_fiedler_input(rng, 3, 3);
      const FiedlerInput back = fiedler_input_from_json(parse_json(to_json(in).dump()));
      CHECK(fiedler_charpoly(back) == fiedler_charpoly(in));
      CHECK(to_json(back).dump() == to_json(in).dump());
    }
  }

  TEST_CASE("schema errors") {
    CHECK_THROWS_AS(join_spec_from_json(parse_json(R"({"host": "2; 0-1"})")), InputError);
    CHECK_THROWS_AS(join_spec_from_json(parse_json(R"({"host": "2; 0-1", "components": ["1;", "1;"], "extra": 1})")),
                    InputError);
    CHECK_THROWS_AS(join_spec_from_json(parse_json(R"({"host": "2; 0-1", "components": ["1;"]})")), SpecError);
    CHECK_THROWS_AS(
        join_spec_from_json(parse_json(R"({"host": "2; 0-1", "components": ["1;", "2;"], "subsets": [[0], [2]]})")),
        SpecError);
    CHECK_THROWS_AS(fiedler_input_from_json(parse_json(R"({"blocks": [{"m": [[0]]}], "rho": [[0]]})")), InputError);
  }

  TEST_CASE("malformed json reports a position") {
    try {
      parse_json("{\"host\": ", "spec.json");
      FAIL("no throw");
    } catch (const InputError& e) {
      const std::string what = e.what();
      CHECK(what.find("spec.json") != std::string::npos);
      CHECK(what.find("byte") != std::string::npos);
    }
    CHECK_THROWS_AS(read_json_file("/nonexistent/spec.json"), InputError);
  }
}
