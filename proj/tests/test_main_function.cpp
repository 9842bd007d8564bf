#include <doctest.h>

#include <cmath>

#include "fiedler/errors.hpp"
#include "fiedler/graph.hpp"
#include "fiedler/main_function.hpp"
#include "support.hpp"

using namespace fiedler;
using testing::poly;

namespace {

RationalVector ones(std::size_t n) { return RationalVector(n, Rational(1)); }

RationalFunction rf(const Polynomial& num, const Polynomial& den) { return ratfun_reduce(num, den); }

// Distinct values of a list, merged within tol.
std::vector<double> distinct(std::vector<double> xs, double tol) {
  std::sort(xs.begin(), xs.end());
  std::vector<double> out;
  for (double x : xs)
    if (out.empty() || std::abs(x - out.back()) > tol) out.push_back(x);
  return out;
}

}  // namespace

TEST_SUITE("main_function") {
  TEST_CASE("main functions of small graphs") {
    const MainFunction p3 = gamma(Graph::path(3).adjacency_matrix(), ones(3), ones(3));
    CHECK(p3.gamma == rf(poly({4, 3}), poly({-2, 0, 1})));
    CHECK(p3.numerator_f == poly({4, 3}));
    CHECK(p3.denominator_g == poly({-2, 0, 1}));
    CHECK(p3.source_dim == 3);
    CHECK(p3.normal_case);

    const Graph k13(4, {{0, 2}, {1, 2}, {2, 3}});
    const RationalVector chi = VertexSubset(4, {0, 1, 3}).characteristic_vector();
    CHECK(gamma(k13.adjacency_matrix(), chi, chi).gamma == rf(poly({0, 3}), poly({-3, 0, 1})));

    CHECK(gamma(RationalMatrix(1, 1), ones(1), ones(1)).gamma == rf(poly({1}), poly({0, 1})));
    CHECK_THROWS_AS(gamma(RationalMatrix(2, 2), ones(3), ones(2)), ShapeError);
    CHECK_THROWS_AS(gamma(RationalMatrix(2, 3), ones(2), ones(2)), ShapeError);
  }

  TEST_CASE("zero coupling vector gives the zero function") {
    const MainFunction z = gamma(Graph::cycle(4).adjacency_matrix(), RationalVector(4), ones(4));
    CHECK(z.gamma.is_zero());
    CHECK(z.numerator_f.is_zero());
    CHECK(z.denominator_g == poly({1}));
  }

  TEST_CASE("eigenvector shortcut") {
    const MainFunction c4 = gamma_eigenvector(2, 4);
    CHECK(c4.gamma == rf(poly({4}), poly({-2, 1})));
    CHECK(gamma(Graph::cycle(4).adjacency_matrix(), ones(4), ones(4)).gamma == c4.gamma);
    CHECK(gamma_eigenvector(0, 1).gamma == rf(poly({1}), poly({0, 1})));
    for (long n = 1; n <= 6; ++n)
      CHECK(gamma(Graph::complete(n).adjacency_matrix(), ones(n), ones(n)).gamma ==
            gamma_eigenvector(n - 1, n).gamma);
    CHECK_THROWS_AS(gamma_eigenvector(1, 0), DomainError);
    CHECK_THROWS_AS(gamma_eigenvector(1, -2), DomainError);
  }

  TEST_CASE("poles are the u-main eigenvalues") {
    auto poles = u_main_poles(gamma(Graph::path(3).adjacency_matrix(), ones(3), ones(3)));
    REQUIRE(poles.size() == 2);
    CHECK(poles[0] == doctest::Approx(-std::sqrt(2.0)));
    CHECK(poles[1] == doctest::Approx(std::sqrt(2.0)));

    poles = u_main_poles(gamma_eigenvector(0, 1));
    REQUIRE(poles.size() == 1);
    CHECK(std::abs(poles[0]) < 1e-12);

    const RationalVector chi = VertexSubset(3, {0, 1}).characteristic_vector();
    const MainFunction g = gamma(Graph::path(3).adjacency_matrix(), chi, chi);
    CHECK(g.gamma == rf(poly({-1, 2, 2}), poly({0, -2, 0, 1})));
    poles = u_main_poles(g);
    REQUIRE(poles.size() == 3);
    CHECK(poles[0] == doctest::Approx(-std::sqrt(2.0)));
    CHECK(std::abs(poles[1]) < 1e-12);
    CHECK(poles[2] == doctest::Approx(std::sqrt(2.0)));

    CHECK_THROWS_AS(u_main_poles(gamma(Graph::path(3).adjacency_matrix(), chi, ones(3))), PreconditionError);
    RationalMatrix asym(2, 2, {0, 1, 2, 0});
    CHECK_THROWS_AS(u_main_poles(gamma(asym, ones(2), ones(2))), PreconditionError);
  }

  TEST_CASE("shifted main functions") {
    CHECK(shifted(gamma_eigenvector(0, 1), 2).gamma == rf(poly({1}), poly({-2, 1})));
    const MainFunction p3 = gamma(Graph::path(3).adjacency_matrix(), ones(3), ones(3));
    CHECK(shifted(p3, 0).gamma == p3.gamma);
    const RationalMatrix m = Graph::path(3).adjacency_matrix() + Rational(3) * RationalMatrix::identity(3);
    const MainFunction direct = gamma(m, ones(3), ones(3));
    const MainFunction s = shifted(p3, 3);
    CHECK(s.gamma == direct.gamma);
    CHECK(s.source_charpoly == direct.source_charpoly);

    testing::Rng rng(21);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = testing::uniform(rng, 1, 5);
      const RationalMatrix a = testing::random_matrix(rng, n, false);
      const RationalVector u = testing::random_vector(rng, n), v = testing::random_vector(rng, n);
      const Rational c = testing::random_rational(rng);
      CHECK(shifted(gamma(a, u, v), c).gamma == gamma(a + c * RationalMatrix::identity(n), u, v).gamma);
    }
  }

  TEST_CASE("g is square-free and divides phi; f/g is proper with leading ratio v.u") {
    testing::Rng rng(22);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = testing::uniform(rng, 1, 6);
      const bool sym = trial % 2 == 0;
      const RationalMatrix a = sym ? testing::random_int_matrix(rng, n, true, 2) : testing::random_matrix(rng, n, false);
      RationalVector u = testing::random_vector(rng, n);
      const RationalVector v = sym ? u : testing::random_vector(rng, n);
      if (std::all_of(u.begin(), u.end(), [](const Rational& x) { return sgn(x) == 0; })) u[0] = 1;
      const MainFunction mf = gamma(a, u, sym ? u : v);
      CHECK(divmod(mf.source_charpoly, mf.denominator_g).second.is_zero());
      CHECK(mf.denominator_g.is_monic());
      if (sym) {
        CHECK(mf.normal_case);
        CHECK_FALSE(mf.gamma.is_zero());
        CHECK(is_square_free(mf.denominator_g));
      }
      const Rational vu = dot(sym ? u : v, u);
      if (!mf.gamma.is_zero()) CHECK(mf.numerator_f.deg() < mf.denominator_g.deg());
      if (sgn(vu) != 0) {
        CHECK(mf.denominator_g.deg() == mf.numerator_f.deg() + 1);
        CHECK(mf.numerator_f.leading() == vu);
      }
    }
  }

  TEST_CASE("poles move with a polynomial in the matrix") {
    testing::Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = testing::uniform(rng, 1, 5);
      const RationalMatrix m = testing::random_int_matrix(rng, n, true, 2);
      RationalVector u(n);
      for (auto& x : u) x = testing::random_small_int(rng, 2);
      if (std::all_of(u.begin(), u.end(), [](const Rational& x) { return sgn(x) == 0; })) u[0] = 1;
      const Rational c0 = testing::random_small_int(rng), c1 = testing::random_small_int(rng),
                     c2 = testing::random_small_int(rng);
      const RationalMatrix pm =
          c0 * RationalMatrix::identity(n) + c1 * m + c2 * (m * m);
      std::vector<double> mapped;
      for (double th : u_main_poles(gamma(m, u, u)))
        mapped.push_back(c0.get_d() + c1.get_d() * th + c2.get_d() * th * th);
      const auto expect = distinct(mapped, 1e-8);
      const auto got = distinct(u_main_poles(gamma(pm, u, u)), 1e-8);
      REQUIRE(got.size() == expect.size());
      for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - expect[i]) < 1e-8);
    }
  }

  TEST_CASE("bilinearity in the coupling vectors") {
    testing::Rng rng(24);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = testing::uniform(rng, 1, 5);
      const RationalMatrix m = testing::random_matrix(rng, n, false);
      const RationalVector u1 = testing::random_vector(rng, n), u2 = testing::random_vector(rng, n),
                           v = testing::random_vector(rng, n);
      const Rational a = testing::random_rational(rng);
      RationalVector mix(n);
      for (std::size_t i = 0; i < n; ++i) mix[i] = a * u1[i] + u2[i];
      CHECK(gamma(m, mix, v).gamma == RationalFunction(a) * gamma(m, u1, v).gamma + gamma(m, u2, v).gamma);
      CHECK(gamma(m, v, mix).gamma == RationalFunction(a) * gamma(m, v, u1).gamma + gamma(m, v, u2).gamma);
    }
  }
}
