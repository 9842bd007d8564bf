#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fiedler/matrix.hpp"
#include "fiedler/rational.hpp"

namespace fiedler {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph on vertices 0..n-1. Edges are stored as a sorted
/// list of pairs (u, v) with u < v.
class Graph {
 public:
  Graph() = default;
  /// Throws SpecError on loops or out-of-range endpoints; duplicate edges
  /// (in either orientation) are rejected too.
  Graph(std::size_t n, std::vector<Edge> edges);

  static Graph empty(std::size_t n);
  static Graph complete(std::size_t n);
  static Graph path(std::size_t n);
  static Graph cycle(std::size_t n);
  /// K_{1,leaves} with the center at vertex 0.
  static Graph star(std::size_t leaves);
  /// K_{a,b}: vertices 0..a-1 on one side.
  static Graph complete_bipartite(std::size_t a, std::size_t b);
  /// Vertices of `a` first, then those of `b`.
  static Graph disjoint_union(const Graph& a, const Graph& b);

  std::size_t n() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool has_edge(std::size_t u, std::size_t v) const;
  std::size_t degree(std::size_t v) const;
  std::vector<std::size_t> degrees() const;
  std::vector<std::size_t> neighbors(std::size_t v) const;
  /// Common degree when the graph is regular.
  std::optional<std::size_t> regularity() const;

  Graph complement() const;
  /// Relabel: vertex v becomes perm[v].
  Graph relabeled(const std::vector<std::size_t>& perm) const;

  RationalMatrix adjacency_matrix() const;
  RationalMatrix degree_matrix() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// Subset S of the vertex set of a graph on parent_size vertices.
class VertexSubset {
 public:
  VertexSubset() = default;
  /// Members are sorted and deduplicated; throws SpecError when out of range.
  VertexSubset(std::size_t parent_size, std::vector<std::size_t> members);
  static VertexSubset full(std::size_t parent_size);

  std::size_t parent_size() const noexcept { return parent_size_; }
  const std::vector<std::size_t>& members() const noexcept { return members_; }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(std::size_t v) const;
  bool is_full() const noexcept { return members_.size() == parent_size_; }
  /// 0-1 indicator vector.
  RationalVector characteristic_vector() const;

  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;

 private:
  std::size_t parent_size_ = 0;
  std::vector<std::size_t> members_;
};

/// Coefficients of U = alpha*A + beta*I + gamma*J + delta*D.
struct UniversalParams {
  Rational alpha = 1;
  Rational beta = 0;
  Rational gamma = 0;
  Rational delta = 0;

  static UniversalParams adjacency() { return {1, 0, 0, 0}; }
  static UniversalParams laplacian() { return {-1, 0, 0, 1}; }
  static UniversalParams signless_laplacian() { return {1, 0, 0, 1}; }
  static UniversalParams seidel() { return {-2, -1, 1, 0}; }

  /// Throws PreconditionError when alpha = 0 unless explicitly allowed.
  void validate(bool allow_zero_alpha = false) const;

  friend bool operator==(const UniversalParams&, const UniversalParams&) = default;
};

/// Input of every join construction: host graph H on k vertices, one
/// component graph per host vertex, optional vertex subsets, optional
/// universal parameters and an optional coupling override.
struct JoinSpec {
  Graph host;
  std::vector<Graph> components;
  std::optional<std::vector<VertexSubset>> subsets;
  std::optional<UniversalParams> universal;
  /// k x k, zero diagonal, not necessarily symmetric. Used by the formula
  /// routes only; graph constructions always follow `host`.
  std::optional<RationalMatrix> rho_override;
  bool allow_zero_alpha = false;

  std::size_t k() const noexcept { return host.n(); }
  std::vector<std::size_t> sizes() const;
  std::size_t total_size() const;
  /// Start index of each component block in the joined vertex order.
  std::vector<std::size_t> offsets() const;
  /// rho_override when present, otherwise the adjacency of H.
  RationalMatrix rho() const;

  /// Throws SpecError on structural problems (counts, subset sizes, rho shape).
  void validate() const;
};

/// H-join: component blocks concatenated in host order, block i fully
/// joined to block j for every host edge ij. Throws SpecError when subsets
/// are present or the component count differs from |V(H)|.
Graph h_join(const JoinSpec& spec);

/// H-generalized join: cross edges only between S_i and S_j.
Graph h_generalized_join(const JoinSpec& spec);

/// H[G']: the H-join with every component equal to G'.
Graph lexicographic(const Graph& host, const Graph& factor);

/// Generalized corona: H' vertices first (0..k-1), then the blocks of
/// G_1..G_k; vertex i of H' is joined to every vertex of G_i.
Graph generalized_corona(const Graph& hp, const std::vector<Graph>& family);

/// The corona seen as an H-join over H = H' o K1 with family
/// {K1,..,K1, G_1,..,G_k}. permutation[v] is the H-join index of corona
/// vertex v.
struct CoronaAsJoin {
  JoinSpec spec;
  std::vector<std::size_t> permutation;
};
CoronaAsJoin corona_as_hjoin(const Graph& hp, const std::vector<Graph>& family);

/// alpha*A + beta*I + gamma*J + delta*D.
RationalMatrix universal_matrix(const Graph& g, const UniversalParams& p, bool allow_zero_alpha = false);

/// w_i = sum of n_l over the host neighbours l of i.
std::vector<std::size_t> join_weights(const JoinSpec& spec);

/// (k, tau) when S induces a k-regular subgraph and every vertex outside S
/// has exactly tau neighbours in S. S = V(G) yields (deg, 0) for regular G.
/// Throws DomainError for empty S.
std::optional<std::pair<std::size_t, std::size_t>> is_k_tau_regular(const Graph& g, const VertexSubset& s);

}  // namespace fiedler
