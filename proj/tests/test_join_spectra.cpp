#include <doctest.h>

#include <cmath>

#include "fiedler/errors.hpp"
#include "fiedler/join_spectra.hpp"
#include "fiedler/oracle.hpp"
#include "fiedler/special_eigenvalues.hpp"
#include "support.hpp"

using namespace fiedler;
using testing::poly;

namespace {

const Polynomial kPathJoinPoly = poly({0, 0, 0, -12, 34, 92, 15, -60, -30, 0, 1});
const Polynomial kPathGeneralizedJoinPoly = poly({0, 0, 0, 0, -15, 6, 35, -6, -18, 0, 1});

JoinSpec path_host_spec() {
  JoinSpec s;
  s.host = Graph::path(3);
  s.components = {Graph::path(3), Graph(4, {{0, 2}, {1, 2}, {2, 3}}), Graph(3, {{0, 1}})};
  return s;
}

JoinSpec path_host_subset_spec() {
  JoinSpec s = path_host_spec();
  s.subsets = std::vector<VertexSubset>{VertexSubset(3, {0, 1}), VertexSubset(4, {0, 1, 3}), VertexSubset(3, {1, 2})};
  return s;
}

JoinSpec k2_join(const Graph& a, const Graph& b) {
  JoinSpec s;
  s.host = Graph::complete(2);
  s.components = {a, b};
  return s;
}

FiedlerInput single_vertex_pair(const Rational& r12, const Rational& r21) {
  FiedlerInput in;
  in.blocks = {{RationalMatrix(1, 1), {1}, {1}}, {RationalMatrix(1, 1), {1}, {1}}};
  in.rho = RationalMatrix(2, 2);
  in.rho(0, 1) = r12;
  in.rho(1, 0) = r21;
  return in;
}

void check_same_spectrum(std::vector<double> a, std::vector<double> b, double tol) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= tol);
}

std::vector<double> values_of(const SpecialEigenvalues& s, EigenLabel l) {
  std::vector<double> out;
  for (const auto& e : s.entries)
    if (e.label == l) out.insert(out.end(), e.multiplicity, e.value);
  return out;
}

}  // namespace

TEST_SUITE("join_spectra") {
  TEST_CASE("fiedler charpoly examples") {
    FiedlerInput in;
    for (const auto& g : path_host_spec().components) {
      const RationalVector one(g.n(), Rational(1));
      in.blocks.push_back({g.adjacency_matrix(), one, one});
    }
    in.rho = Graph::path(3).adjacency_matrix();
    CHECK(fiedler_charpoly(in) == kPathJoinPoly);
    CHECK(fiedler_charpoly(single_vertex_pair(1, 1)) == poly({-1, 0, 1}));
    CHECK(fiedler_charpoly(single_vertex_pair(2, 3)) == poly({-6, 0, 1}));
  }

  TEST_CASE("eigenvector coupling gives phi = prod phi_i/(l - r_i) * prod n_i * det(diag((l - r_i)/n_i) - rho)") {
    testing::Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
      const JoinSpec s = testing::random_regular_join_spec(rng, 4);
      FiedlerInput in;
      RationalFunctionMatrix tilde(s.k(), s.k());
      RationalFunction scale(1);
      for (std::size_t i = 0; i < s.k(); ++i) {
        const Graph& g = s.components[i];
        const RationalVector one(g.n(), Rational(1));
        in.blocks.push_back({g.adjacency_matrix(), one, one});
        const Rational r(static_cast<long>(*g.regularity()));
        const Rational n(static_cast<long>(g.n()));
        const MainFunction mf = gamma_eigenvector(r, n);
        tilde(i, i) = RationalFunction(1) / mf.gamma;
        scale *= RationalFunction(exact_div(charpoly(g.adjacency_matrix()), Polynomial::linear_root(r))) *
                 RationalFunction(n);
        for (std::size_t j = 0; j < s.k(); ++j)
          if (j != i) tilde(i, j) = RationalFunction(-s.rho()(i, j));
      }
      in.rho = s.rho();
      CHECK(RationalFunction(fiedler_charpoly(in)) == scale * polymat_det(tilde));
    }
  }

  TEST_CASE("degree, trace, Phi degree and rational spot checks on random inputs") {
    testing::Rng rng(42);
    for (int trial = 0; trial < 40; ++trial) {
      const FiedlerInput in = testing::random_fiedler_input(rng, 4, 4);
      const auto dec = fiedler_decompose(in);
      const auto a = assemble(in).matrix;
      const std::size_t n = in.total_size();
      REQUIRE(dec.charpoly.deg() == n);
      CHECK(dec.charpoly.is_monic());
      CHECK(-dec.charpoly.coeff(n - 1) == trace(a));
      std::size_t gdeg = 0;
      for (const auto& mf : dec.gammas) gdeg += mf.denominator_g.deg();
      CHECK(dec.phi.deg() == gdeg);
      for (int p = 0; p < 10; ++p) {
        const Rational r = testing::random_rational(rng, 5);
        CHECK(dec.charpoly.eval(r) == testing::det_shifted(a, r));
      }
    }
  }

  TEST_CASE("zero coupling vectors factor the polynomial block-diagonally") {
    testing::Rng rng(43);
    for (int trial = 0; trial < 30; ++trial) {
      FiedlerInput in = testing::random_fiedler_input(rng, 4, 4);
      const std::size_t z = testing::uniform(rng, 0, in.k() - 1);
      in.blocks[z].u.assign(in.blocks[z].u.size(), Rational(0));
      in.blocks[z].v = in.blocks[z].u;
      FiedlerInput rest;
      for (std::size_t i = 0; i < in.k(); ++i)
        if (i != z) rest.blocks.push_back(in.blocks[i]);
      rest.rho = RationalMatrix(rest.k(), rest.k());
      for (std::size_t i = 0, ri = 0; i < in.k(); ++i) {
        if (i == z) continue;
        for (std::size_t j = 0, rj = 0; j < in.k(); ++j) {
          if (j == z) continue;
          rest.rho(ri, rj++) = in.rho(i, j);
        }
        ++ri;
      }
      const Polynomial rest_poly = rest.k() ? fiedler_charpoly(rest) : poly({1});
      CHECK(fiedler_charpoly(in) == charpoly(in.blocks[z].m) * rest_poly);
    }
  }

  TEST_CASE("spectrum classification examples") {
    FiedlerInput k4;
    for (int i = 0; i < 2; ++i) k4.blocks.push_back({Graph::complete(2).adjacency_matrix(), {1, 1}, {1, 1}});
    k4.rho = RationalMatrix(2, 2, {0, 1, 1, 0});
    const SpectrumReport rep = fiedler_spectrum(k4);
    REQUIRE(rep.inherited.size() == 2);
    for (const auto& e : rep.inherited) {
      CHECK(e.value == doctest::Approx(-1.0));
      CHECK(e.multiplicity == 1);
    }
    CHECK(rep.reduced.empty());
    check_same_spectrum(rep.phi_roots, {-1, 3}, 1e-10);
    check_same_spectrum(rep.eigenvalues(), {-1, -1, -1, 3}, 1e-10);

    FiedlerInput single;
    single.blocks.push_back({Graph::cycle(5).adjacency_matrix(), RationalVector(5, Rational(1)), RationalVector(5, Rational(1))});
    single.rho = RationalMatrix(1, 1);
    check_same_spectrum(fiedler_spectrum(single).eigenvalues(), oracle_spectrum(Graph::cycle(5).adjacency_matrix()), 1e-9);
  }

  TEST_CASE("spectrum of the path-host join matches the numeric oracle") {
    const SpectrumReport rep = hjoin_universal_spectrum(path_host_spec());
    CHECK(rep.charpoly == kPathJoinPoly);
    CHECK(rep.total_multiplicity() == 10);
    // P3 keeps its non-main eigenvalue 0.
    bool found = false;
    for (const auto& e : rep.inherited)
      if (e.component == 0) {
        CHECK(std::abs(e.value) < 1e-10);
        CHECK(e.multiplicity == 1);
        found = true;
      }
    CHECK(found);
    check_same_spectrum(rep.eigenvalues(), oracle_spectrum(assemble_universal_join(path_host_spec())), 1e-8);
  }

  TEST_CASE("main eigenvalues of multiplicity m contribute m - 1") {
    // In C4 u K1 the eigenvalue 0 has multiplicity 3 and is main through the isolated vertex.
    JoinSpec s;
    s.host = Graph::complete(2);
    s.components = {Graph::disjoint_union(Graph::cycle(4), Graph::empty(1)), Graph::complete(3)};
    const SpectrumReport rep = hjoin_universal_spectrum(s);
    std::size_t reduced_zero = 0;
    for (const auto& e : rep.reduced)
      if (e.component == 0 && std::abs(e.value) < 1e-10) reduced_zero += e.multiplicity;
    CHECK(reduced_zero == 2);
    CHECK(rep.total_multiplicity() == 8);
    check_same_spectrum(rep.eigenvalues(), oracle_spectrum(assemble_universal_join(s)), 1e-8);
  }

  TEST_CASE("spectrum classification matches the oracle on random symmetric inputs") {
    testing::Rng rng(44);
    for (int trial = 0; trial < 40; ++trial) {
      const FiedlerInput in = testing::random_symmetric_fiedler_input(rng);
      const SpectrumReport rep = fiedler_spectrum(in);
      CHECK(rep.total_multiplicity() == in.total_size());
      check_same_spectrum(rep.eigenvalues(), oracle_spectrum(assemble(in)), 1e-7);
    }
  }

  TEST_CASE("spectrum preconditions") {
    FiedlerInput in = single_vertex_pair(2, 3);
    CHECK_THROWS_AS(fiedler_spectrum(in), PreconditionError);
    in = single_vertex_pair(1, 1);
    in.blocks[0].v = {2};
    CHECK_THROWS_AS(fiedler_spectrum(in), PreconditionError);
    in = single_vertex_pair(1, 1);
    in.blocks[0].m = RationalMatrix(2, 2, {0, 1, 0, 0});
    in.blocks[0].u = in.blocks[0].v = {1, 1};
    CHECK_THROWS_AS(fiedler_spectrum(in), PreconditionError);
  }

  TEST_CASE("universal H-join charpoly") {
    CHECK(hjoin_universal_charpoly(path_host_spec()) == kPathJoinPoly);
    JoinSpec adj = path_host_spec();
    adj.universal = UniversalParams::adjacency();
    CHECK(hjoin_universal_charpoly(adj) == kPathJoinPoly);

    JoinSpec lap = k2_join(Graph::complete(2), Graph::complete(2));
    lap.universal = UniversalParams::laplacian();
    CHECK(hjoin_universal_charpoly(lap) == poly({0, 1}) * pow(poly({-4, 1}), 3));

    testing::Rng rng(45);
    for (int trial = 0; trial < 10; ++trial) {
      JoinSpec s = k2_join(testing::random_graph(rng, testing::uniform(rng, 1, 5)),
                           testing::random_graph(rng, testing::uniform(rng, 1, 5)));
      s.universal = UniversalParams::seidel();
      CHECK(hjoin_universal_charpoly(s) == charpoly(universal_matrix(h_join(s), UniversalParams::seidel())));
    }

    CHECK_THROWS_AS(hjoin_universal_charpoly(path_host_subset_spec()), SpecError);
    JoinSpec zero = path_host_spec();
    zero.universal = UniversalParams{0, 1, 1, 0};
    CHECK_THROWS_AS(hjoin_universal_charpoly(zero), PreconditionError);
    zero.allow_zero_alpha = true;
    CHECK(hjoin_universal_charpoly(zero) == charpoly(universal_matrix(h_join(zero), *zero.universal, true)));
  }

  TEST_CASE("rho override reaches the formula and the block assembly") {
    JoinSpec s = k2_join(Graph::empty(1), Graph::empty(1));
    s.rho_override = RationalMatrix(2, 2, {0, 2, 3, 0});
    CHECK(hjoin_universal_charpoly(s) == poly({-6, 0, 1}));
    CHECK(oracle_charpoly(assemble_universal_join(s)) == poly({-6, 0, 1}));
  }

  TEST_CASE("regular corollary route") {
    JoinSpec k4 = k2_join(Graph::complete(2), Graph::complete(2));
    const SpectrumReport rep = hjoin_universal_spectrum_regular(k4);
    check_same_spectrum(rep.phi_roots, {-1, 3}, 1e-10);
    REQUIRE(rep.inherited.size() == 2);
    for (const auto& e : rep.inherited) CHECK(e.value == doctest::Approx(-1.0));
    CHECK(rep.charpoly == hjoin_universal_charpoly(k4));

    JoinSpec c4 = k2_join(Graph::cycle(4), Graph::cycle(4));
    c4.universal = UniversalParams::laplacian();
    const SpectrumReport a = hjoin_universal_spectrum_regular(c4, std::vector<std::size_t>{2, 2});
    check_same_spectrum(a.eigenvalues(), hjoin_universal_spectrum(c4).eigenvalues(), 1e-8);
    CHECK(a.charpoly == hjoin_universal_charpoly(c4));

    JoinSpec one;
    one.host = Graph::empty(1);
    one.components = {Graph::cycle(6)};
    check_same_spectrum(hjoin_universal_spectrum_regular(one).eigenvalues(),
                        oracle_spectrum(Graph::cycle(6).adjacency_matrix()), 1e-9);

    CHECK_THROWS_AS(hjoin_universal_spectrum_regular(path_host_spec()), PreconditionError);
    CHECK_THROWS_AS(hjoin_universal_spectrum_regular(c4, std::vector<std::size_t>{2, 3}), PreconditionError);
  }

  TEST_CASE("alpha + delta = 0 corollary route") {
    JoinSpec lap = path_host_spec();
    lap.universal = UniversalParams::laplacian();
    const SpectrumReport rep = hjoin_universal_spectrum_alpha_delta_zero(lap);
    check_same_spectrum(rep.eigenvalues(), oracle_spectrum(assemble_universal_join(lap)), 1e-8);
    CHECK(rep.charpoly == hjoin_universal_charpoly(lap));
    // p_i = w_i for the Laplacian: the symmetrized matrix has diagonal (4, 6, 4).
    CHECK(rep.phi.deg() == 3);

    JoinSpec shifted = lap;
    shifted.universal = UniversalParams{-1, 5, 0, 1};
    const auto base = rep.eigenvalues();
    const auto moved = hjoin_universal_spectrum_alpha_delta_zero(shifted).eigenvalues();
    REQUIRE(base.size() == moved.size());
    for (std::size_t i = 0; i < base.size(); ++i) CHECK(std::abs(moved[i] - base[i] - 5) < 1e-9);

    JoinSpec one;
    one.host = Graph::empty(1);
    one.components = {Graph::path(4)};
    one.universal = UniversalParams{-2, 1, 1, 2};
    check_same_spectrum(hjoin_universal_spectrum_alpha_delta_zero(one).eigenvalues(),
                        oracle_spectrum(universal_matrix(Graph::path(4), *one.universal)), 1e-9);

    CHECK_THROWS_AS(hjoin_universal_spectrum_alpha_delta_zero(path_host_spec()), PreconditionError);
  }

  TEST_CASE("lexicographic product") {
    CHECK(lex_universal_charpoly(Graph::complete(2), Graph::empty(1)) == poly({-1, 0, 1}));
    JoinSpec s;
    s.host = Graph::path(3);
    s.components.assign(3, Graph::complete(2));
    CHECK(lex_universal_charpoly(Graph::path(3), Graph::complete(2)) == hjoin_universal_charpoly(s));
    CHECK(lex_universal_charpoly(Graph::path(3), Graph::complete(2)) ==
          charpoly(lexicographic(Graph::path(3), Graph::complete(2)).adjacency_matrix()));
    CHECK(lex_universal_charpoly(Graph::empty(1), Graph::cycle(5), UniversalParams::seidel()) ==
          charpoly(universal_matrix(Graph::cycle(5), UniversalParams::seidel())));

    s.universal = UniversalParams::seidel();
    CHECK(lex_universal_charpoly(Graph::path(3), Graph::complete(2), UniversalParams::seidel()) ==
          hjoin_universal_charpoly(s));
    CHECK_THROWS_AS(lex_universal_charpoly(Graph::path(3), Graph::complete(2), UniversalParams::laplacian()),
                    PreconditionError);
  }

  TEST_CASE("generalized characteristic polynomial at fixed t") {
    CHECK(generalized_charpoly(path_host_spec(), 0) == kPathJoinPoly);
    const Polynomial t1 = generalized_charpoly(k2_join(Graph::complete(2), Graph::complete(2)), 1);
    CHECK(t1 == poly({0, 1}) * pow(poly({4, 1}), 3));
    const Rational half = Rational(1) / 2;
    const Graph g = h_join(path_host_spec());
    CHECK(generalized_charpoly(path_host_spec(), half) ==
          charpoly(g.adjacency_matrix() + Rational(-1) * half * g.degree_matrix()));
    JoinSpec with_params = path_host_spec();
    with_params.universal = UniversalParams::adjacency();
    CHECK_THROWS_AS(generalized_charpoly(with_params, 1), PreconditionError);
  }

  TEST_CASE("generalized join charpoly") {
    CHECK(hgen_join_charpoly(path_host_subset_spec()) == kPathGeneralizedJoinPoly);

    JoinSpec full = path_host_spec();
    full.subsets = std::vector<VertexSubset>{VertexSubset::full(3), VertexSubset::full(4), VertexSubset::full(3)};
    CHECK(hgen_join_charpoly(full) == kPathJoinPoly);

    testing::Rng rng(46);
    for (int trial = 0; trial < 20; ++trial) {
      JoinSpec s = testing::random_join_spec(rng, 4, 4, true);
      const std::size_t z = testing::uniform(rng, 0, s.k() - 1);
      (*s.subsets)[z] = VertexSubset(s.components[z].n(), {});
      const Polynomial p = hgen_join_charpoly(s);
      CHECK(p == charpoly(h_generalized_join(s).adjacency_matrix()));
      const Polynomial phi_z = charpoly(s.components[z].adjacency_matrix());
      const auto [q, r] = divmod(p, phi_z);
      CHECK(r.is_zero());
      // The rest is the generalized join with component z dropped.
      const RationalMatrix a = h_generalized_join(s).adjacency_matrix();
      std::vector<std::size_t> keep;
      const auto off = s.offsets();
      for (std::size_t v = 0; v < a.rows(); ++v)
        if (v < off[z] || v >= off[z] + s.components[z].n()) keep.push_back(v);
      RationalMatrix sub(keep.size(), keep.size());
      for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j) sub(i, j) = a(keep[i], keep[j]);
      CHECK(q == charpoly(sub));
    }

    CHECK_THROWS_AS(hgen_join_charpoly(path_host_spec()), SpecError);
    JoinSpec lap = path_host_subset_spec();
    lap.universal = UniversalParams::laplacian();
    CHECK_THROWS_AS(hgen_join_charpoly(lap), PreconditionError);
  }

  TEST_CASE("generalized join spectrum") {
    const SpectrumReport rep = hgen_join_spectrum(path_host_subset_spec());
    CHECK(rep.charpoly == kPathGeneralizedJoinPoly);
    std::size_t zeros = 0;
    for (double x : rep.eigenvalues()) zeros += std::abs(x) < 1e-7;
    CHECK(zeros == 4);
    check_same_spectrum(rep.eigenvalues(), oracle_spectrum(assemble_generalized_join(path_host_subset_spec())), 1e-7);

    JoinSpec reg = k2_join(Graph::cycle(4), Graph::complete(3));
    JoinSpec full = reg;
    full.subsets = std::vector<VertexSubset>{VertexSubset::full(4), VertexSubset::full(3)};
    check_same_spectrum(hgen_join_spectrum(full).eigenvalues(), hjoin_universal_spectrum_regular(reg).eigenvalues(),
                        1e-8);

    JoinSpec one;
    one.host = Graph::empty(1);
    one.components = {Graph::path(5)};
    one.subsets = std::vector<VertexSubset>{VertexSubset(5, {1, 3})};
    check_same_spectrum(hgen_join_spectrum(one).eigenvalues(), oracle_spectrum(Graph::path(5).adjacency_matrix()),
                        1e-9);
  }

  TEST_CASE("generalized corona") {
    CHECK(corona_charpoly(Graph::empty(1), {Graph::empty(1)}) == poly({-1, 0, 1}));
    CHECK(corona_charpoly(Graph::path(2), {Graph::empty(1), Graph::empty(1)}) == poly({1, 0, -3, 0, 1}));
    const std::vector<Graph> k1s(4, Graph::empty(1));
    CHECK(corona_charpoly(Graph::cycle(4), k1s) == oracle_charpoly(assemble_corona(Graph::cycle(4), k1s)));
    CHECK(corona_charpoly_via_hjoin(Graph::cycle(4), k1s) == corona_charpoly(Graph::cycle(4), k1s));
    CHECK_THROWS_AS(corona_charpoly(Graph::path(2), {Graph::empty(1)}), SpecError);
  }

  TEST_CASE("special eigenvalues of (k,tau)-regular sets") {
    const SpecialEigenvalues star = classify_special_eigenvalues(Graph::star(3), VertexSubset(4, {1, 2, 3}));
    CHECK(star.k == 0);
    CHECK(star.tau == 3);
    check_same_spectrum(values_of(star, EigenLabel::Main), {-std::sqrt(3.0), std::sqrt(3.0)}, 1e-10);
    check_same_spectrum(values_of(star, EigenLabel::Special), {0, 0}, 1e-10);
    CHECK(values_of(star, EigenLabel::EqualsKMinusTau).empty());
    std::vector<double> all;
    for (const auto& e : star.entries) all.insert(all.end(), e.multiplicity, e.value);
    check_same_spectrum(all, oracle_spectrum(Graph::star(3).adjacency_matrix()), 1e-10);

    const SpecialEigenvalues p3 = classify_special_eigenvalues(Graph::path(3), VertexSubset(3, {0, 2}));
    CHECK(p3.tau == 2);
    check_same_spectrum(values_of(p3, EigenLabel::Main), {-std::sqrt(2.0), std::sqrt(2.0)}, 1e-10);
    check_same_spectrum(values_of(p3, EigenLabel::Special), {0}, 1e-10);

    const SpecialEigenvalues c4 = classify_special_eigenvalues(Graph::cycle(4), VertexSubset(4, {0, 2}));
    check_same_spectrum(values_of(c4, EigenLabel::EqualsKMinusTau), {-2}, 1e-12);
    check_same_spectrum(values_of(c4, EigenLabel::Main), {2}, 1e-10);
    check_same_spectrum(values_of(c4, EigenLabel::Special), {0, 0}, 1e-10);

    CHECK_THROWS_AS(classify_special_eigenvalues(Graph::cycle(4), VertexSubset::full(4)), PreconditionError);
    CHECK_THROWS_AS(classify_special_eigenvalues(Graph::path(4), VertexSubset(4, {0})), PreconditionError);
  }

  TEST_CASE("special eigenvalue labels agree with numeric eigenvectors on random (k,tau)-regular sets") {
    testing::Rng rng(47);
    int found = 0;
    for (int trial = 0; trial < 400 && found < 25; ++trial) {
      const Graph g = testing::random_graph(rng, testing::uniform(rng, 3, 7), 0.5);
      std::vector<std::size_t> m;
      for (std::size_t v = 0; v < g.n(); ++v)
        if (testing::coin(rng)) m.push_back(v);
      if (m.empty() || m.size() == g.n()) continue;
      const VertexSubset s(g.n(), m);
      const auto kt = is_k_tau_regular(g, s);
      if (!kt || kt->second == 0) continue;
      ++found;
      const SpecialEigenvalues out = classify_special_eigenvalues(g, s);
      std::size_t total = 0;
      for (const auto& e : out.entries) total += e.multiplicity;
      CHECK(total == g.n());
      std::vector<double> all;
      for (const auto& e : out.entries) all.insert(all.end(), e.multiplicity, e.value);
      check_same_spectrum(all, oracle_spectrum(g.adjacency_matrix()), 1e-8);
    }
    CHECK(found >= 10);
  }
}
