#pragma once

#include <cstddef>
#include <random>

#include "fiedler/fiedler_input.hpp"
#include "fiedler/graph.hpp"
#include "fiedler/polynomial.hpp"

// Seeded generators for randomized verification runs.
namespace fiedler::random {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);
bool coin(Rng& rng, double p = 0.5);

/// p/q with q in 1..4 and |p/q| <= bound.
Rational random_rational(Rng& rng, long bound = 3);
Rational random_small_int(Rng& rng, long bound = 3);
RationalMatrix random_matrix(Rng& rng, std::size_t n, bool symmetric, long bound = 3);
RationalMatrix random_int_matrix(Rng& rng, std::size_t n, bool symmetric, long bound = 3);
RationalVector random_vector(Rng& rng, std::size_t n, long bound = 3);
/// Exact degree `deg`.
Polynomial random_polynomial(Rng& rng, std::size_t deg, long bound = 3);

/// G(n, p).
Graph random_graph(Rng& rng, std::size_t n, double p = 0.5);
Graph random_relabel(Rng& rng, const Graph& g);
/// A randomly labelled regular graph on at most 6 vertices.
Graph random_regular_graph(Rng& rng);

/// Up to kmax components of up to nmax vertices, random host; random
/// subsets (possibly empty) when `subsets` is set.
JoinSpec random_join_spec(Rng& rng, std::size_t kmax = 5, std::size_t nmax = 5, bool subsets = false);
JoinSpec random_regular_join_spec(Rng& rng, std::size_t kmax = 5);

/// k <= kmax blocks of size <= nmax with rational entries in [-3, 3];
/// some coupling vectors zero, rho asymmetric.
FiedlerInput random_fiedler_input(Rng& rng, std::size_t kmax = 5, std::size_t nmax = 5);
/// Symmetric integer blocks with u = v and symmetric rho.
FiedlerInput random_symmetric_fiedler_input(Rng& rng, std::size_t kmax = 4, std::size_t nmax = 4);

}  // namespace fiedler::random
