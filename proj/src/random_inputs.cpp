#include "fiedler/random_inputs.hpp"

#include <algorithm>
#include <numeric>

namespace fiedler::random {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Rational random_rational(Rng& rng, long bound) {
  const long q = static_cast<long>(uniform(rng, 1, 4));
  const long p = std::uniform_int_distribution<long>(-bound * q, bound * q)(rng);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational random_small_int(Rng& rng, long bound) {
  return Rational(std::uniform_int_distribution<long>(-bound, bound)(rng));
}

RationalMatrix random_matrix(Rng& rng, std::size_t n, bool symmetric, long bound) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = symmetric ? i : 0; j < n; ++j) {
      m(i, j) = random_rational(rng, bound);
      if (symmetric) m(j, i) = m(i, j);
    }
  return m;
}

RationalMatrix random_int_matrix(Rng& rng, std::size_t n, bool symmetric, long bound) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = symmetric ? i : 0; j < n; ++j) {
      m(i, j) = random_small_int(rng, bound);
      if (symmetric) m(j, i) = m(i, j);
    }
  return m;
}

RationalVector random_vector(Rng& rng, std::size_t n, long bound) {
  RationalVector v(n);
  for (auto& x : v) x = random_rational(rng, bound);
  return v;
}

Polynomial random_polynomial(Rng& rng, std::size_t deg, long bound) {
  std::vector<Rational> c(deg + 1);
  for (auto& x : c) x = random_rational(rng, bound);
  if (sgn(c.back()) == 0) c.back() = 1;
  return Polynomial(std::move(c));
}

Graph random_graph(Rng& rng, std::size_t n, double p) {
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng, p)) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

Graph random_relabel(Rng& rng, const Graph& g) {
  std::vector<std::size_t> perm(g.n());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.relabeled(perm);
}

Graph random_regular_graph(Rng& rng) {
  const Graph two_k2 = Graph::disjoint_union(Graph::complete(2), Graph::complete(2));
  const Graph two_k3 = Graph::disjoint_union(Graph::complete(3), Graph::complete(3));
  const std::vector<Graph> catalog = {
      Graph::empty(1),   Graph::empty(2),      Graph::empty(3),    Graph::complete(2), Graph::complete(3),
      Graph::complete(4), Graph::complete(5),  Graph::cycle(4),    Graph::cycle(5),    Graph::cycle(6),
      two_k2,            Graph::complete_bipartite(3, 3), two_k3, Graph::cycle(6).complement(),
  };
  return random_relabel(rng, catalog[uniform(rng, 0, catalog.size() - 1)]);
}

JoinSpec random_join_spec(Rng& rng, std::size_t kmax, std::size_t nmax, bool subsets) {
  JoinSpec s;
  const std::size_t k = uniform(rng, 1, kmax);
  s.host = random_graph(rng, k);
  for (std::size_t i = 0; i < k; ++i) s.components.push_back(random_graph(rng, uniform(rng, 1, nmax)));
  if (subsets) {
    std::vector<VertexSubset> ss;
    for (const auto& g : s.components) {
      std::vector<std::size_t> m;
      for (std::size_t v = 0; v < g.n(); ++v)
        if (coin(rng)) m.push_back(v);
      ss.emplace_back(g.n(), std::move(m));
    }
    s.subsets = std::move(ss);
  }
  return s;
}

JoinSpec random_regular_join_spec(Rng& rng, std::size_t kmax) {
  JoinSpec s;
  const std::size_t k = uniform(rng, 1, kmax);
  s.host = random_graph(rng, k);
  for (std::size_t i = 0; i < k; ++i) s.components.push_back(random_regular_graph(rng));
  return s;
}

FiedlerInput random_fiedler_input(Rng& rng, std::size_t kmax, std::size_t nmax) {
  FiedlerInput in;
  const std::size_t k = uniform(rng, 1, kmax);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t n = uniform(rng, 1, nmax);
    FiedlerBlock b{random_matrix(rng, n, coin(rng, 0.3)), random_vector(rng, n), random_vector(rng, n)};
    if (coin(rng, 0.15)) b.u.assign(n, Rational(0));
    if (coin(rng, 0.15)) b.v.assign(n, Rational(0));
    if (coin(rng, 0.2)) b.v = b.u;
    in.blocks.push_back(std::move(b));
  }
  in.rho = RationalMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && coin(rng, 0.7)) in.rho(i, j) = random_rational(rng);
  return in;
}

FiedlerInput random_symmetric_fiedler_input(Rng& rng, std::size_t kmax, std::size_t nmax) {
  FiedlerInput in;
  const std::size_t k = uniform(rng, 1, kmax);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t n = uniform(rng, 1, nmax);
    RationalVector u(n);
    for (auto& x : u) x = random_small_int(rng, 2);
    in.blocks.push_back({random_int_matrix(rng, n, true, 2), u, u});
  }
  in.rho = RationalMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) in.rho(i, j) = in.rho(j, i) = random_small_int(rng, 2);
  return in;
}

}  // namespace fiedler::random
