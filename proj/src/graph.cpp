#include "fiedler/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "fiedler/errors.hpp"

namespace fiedler {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n) {
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw SpecError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" + std::to_string(n));
    if (u == v) throw SpecError("loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) throw SpecError("duplicate edge");
  edges_ = std::move(edges);
}

Graph Graph::empty(std::size_t n) { return Graph(n, {}); }

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

Graph Graph::path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return Graph(n, std::move(e));
}

Graph Graph::cycle(std::size_t n) {
  if (n < 3) throw SpecError("a cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
  return Graph(n, std::move(e));
}

Graph Graph::star(std::size_t leaves) {
  std::vector<Edge> e;
  for (std::size_t v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph(leaves + 1, std::move(e));
}

Graph Graph::complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (std::size_t u = 0; u < a; ++u)
    for (std::size_t v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return Graph(a + b, std::move(e));
}

Graph Graph::disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> e = a.edges_;
  for (const auto& [u, v] : b.edges_) e.emplace_back(u + a.n_, v + a.n_);
  return Graph(a.n_ + b.n_, std::move(e));
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::size_t Graph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (const auto& [a, b] : edges_) d += (a == v) + (b == v);
  return d;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d(n_);
  for (const auto& [a, b] : edges_) {
    ++d[a];
    ++d[b];
  }
  return d;
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (const auto& [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> Graph::regularity() const {
  const auto d = degrees();
  if (d.empty()) return 0;
  if (std::all_of(d.begin(), d.end(), [&](std::size_t x) { return x == d.front(); })) return d.front();
  return std::nullopt;
}

Graph Graph::complement() const {
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = u + 1; v < n_; ++v)
      if (!has_edge(u, v)) e.emplace_back(u, v);
  return Graph(n_, std::move(e));
}

Graph Graph::relabeled(const std::vector<std::size_t>& perm) const {
  if (perm.size() != n_) throw SpecError("permutation length does not match vertex count");
  std::vector<Edge> e;
  e.reserve(edges_.size());
  for (const auto& [u, v] : edges_) e.emplace_back(perm[u], perm[v]);
  return Graph(n_, std::move(e));
}

RationalMatrix Graph::adjacency_matrix() const {
  RationalMatrix a(n_, n_);
  for (const auto& [u, v] : edges_) {
    a(u, v) = 1;
    a(v, u) = 1;
  }
  return a;
}

RationalMatrix Graph::degree_matrix() const {
  RationalMatrix d(n_, n_);
  const auto deg = degrees();
  for (std::size_t v = 0; v < n_; ++v) d(v, v) = static_cast<unsigned long>(deg[v]);
  return d;
}

VertexSubset::VertexSubset(std::size_t parent_size, std::vector<std::size_t> members) : parent_size_(parent_size) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!members.empty() && members.back() >= parent_size)
    throw SpecError("subset member " + std::to_string(members.back()) + " out of range for a graph on " +
                    std::to_string(parent_size) + " vertices");
  members_ = std::move(members);
}

VertexSubset VertexSubset::full(std::size_t parent_size) {
  std::vector<std::size_t> all(parent_size);
  std::iota(all.begin(), all.end(), std::size_t{0});
  return VertexSubset(parent_size, std::move(all));
}

bool VertexSubset::contains(std::size_t v) const { return std::binary_search(members_.begin(), members_.end(), v); }

RationalVector VertexSubset::characteristic_vector() const {
  RationalVector chi(parent_size_);
  for (std::size_t v : members_) chi[v] = 1;
  return chi;
}

void UniversalParams::validate(bool allow_zero_alpha) const {
  if (!allow_zero_alpha && sgn(alpha) == 0)
    throw PreconditionError("universal adjacency matrix requires alpha != 0");
}

std::vector<std::size_t> JoinSpec::sizes() const {
  std::vector<std::size_t> n;
  n.reserve(components.size());
  for (const auto& g : components) n.push_back(g.n());
  return n;
}

std::size_t JoinSpec::total_size() const {
  std::size_t t = 0;
  for (const auto& g : components) t += g.n();
  return t;
}

std::vector<std::size_t> JoinSpec::offsets() const {
  std::vector<std::size_t> off(components.size());
  std::size_t acc = 0;
  for (std::size_t i = 0; i < components.size(); ++i) {
    off[i] = acc;
    acc += components[i].n();
  }
  return off;
}

RationalMatrix JoinSpec::rho() const {
  if (rho_override) return *rho_override;
  return host.adjacency_matrix();
}

void JoinSpec::validate() const {
  if (components.size() != host.n())
    throw SpecError("host has " + std::to_string(host.n()) + " vertices but " + std::to_string(components.size()) +
                    " component graphs were given");
  if (subsets) {
    if (subsets->size() != components.size()) throw SpecError("one vertex subset per component is required");
    for (std::size_t i = 0; i < components.size(); ++i)
      if ((*subsets)[i].parent_size() != components[i].n())
        throw SpecError("subset " + std::to_string(i) + " does not match its component size");
  }
  if (rho_override) {
    const auto& r = *rho_override;
    if (r.rows() != k() || r.cols() != k()) throw SpecError("rho must be k x k");
    for (std::size_t i = 0; i < k(); ++i)
      if (sgn(r(i, i)) != 0) throw SpecError("rho must have a zero diagonal");
  }
}

namespace {

Graph join_impl(const JoinSpec& spec, bool use_subsets) {
  spec.validate();
  const auto off = spec.offsets();
  std::vector<Edge> e;
  for (std::size_t i = 0; i < spec.k(); ++i)
    for (const auto& [u, v] : spec.components[i].edges()) e.emplace_back(off[i] + u, off[i] + v);

  for (const auto& [i, j] : spec.host.edges()) {
    if (use_subsets) {
      for (std::size_t a : (*spec.subsets)[i].members())
        for (std::size_t b : (*spec.subsets)[j].members()) e.emplace_back(off[i] + a, off[j] + b);
    } else {
      for (std::size_t a = 0; a < spec.components[i].n(); ++a)
        for (std::size_t b = 0; b < spec.components[j].n(); ++b) e.emplace_back(off[i] + a, off[j] + b);
    }
  }
  return Graph(spec.total_size(), std::move(e));
}

}  // namespace

Graph h_join(const JoinSpec& spec) {
  if (spec.subsets) throw SpecError("h_join takes no vertex subsets; use h_generalized_join");
  return join_impl(spec, false);
}

Graph h_generalized_join(const JoinSpec& spec) {
  if (!spec.subsets) throw SpecError("h_generalized_join requires vertex subsets");
  return join_impl(spec, true);
}

Graph lexicographic(const Graph& host, const Graph& factor) {
  JoinSpec spec;
  spec.host = host;
  spec.components.assign(host.n(), factor);
  return h_join(spec);
}

Graph generalized_corona(const Graph& hp, const std::vector<Graph>& family) {
  if (family.size() != hp.n())
    throw SpecError("corona needs one graph per vertex of H' (" + std::to_string(hp.n()) + "), got " +
                    std::to_string(family.size()));
  std::vector<Edge> e = hp.edges();
  std::size_t offset = hp.n();
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (const auto& [u, v] : family[i].edges()) e.emplace_back(offset + u, offset + v);
    for (std::size_t a = 0; a < family[i].n(); ++a) e.emplace_back(i, offset + a);
    offset += family[i].n();
  }
  return Graph(offset, std::move(e));
}

CoronaAsJoin corona_as_hjoin(const Graph& hp, const std::vector<Graph>& family) {
  if (family.size() != hp.n()) throw SpecError("corona needs one graph per vertex of H'");
  const std::size_t k = hp.n();
  std::vector<Edge> e = hp.edges();
  for (std::size_t i = 0; i < k; ++i) e.emplace_back(i, k + i);

  CoronaAsJoin out;
  out.spec.host = Graph(2 * k, std::move(e));
  out.spec.components.assign(k, Graph::empty(1));
  out.spec.components.insert(out.spec.components.end(), family.begin(), family.end());

  // Both layouts put the k hub vertices first followed by G_1..G_k in order.
  out.permutation.resize(out.spec.total_size());
  std::iota(out.permutation.begin(), out.permutation.end(), std::size_t{0});
  return out;
}

RationalMatrix universal_matrix(const Graph& g, const UniversalParams& p, bool allow_zero_alpha) {
  p.validate(allow_zero_alpha);
  const std::size_t n = g.n();
  const auto deg = g.degrees();
  RationalMatrix u(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational x = p.gamma;
      if (i == j) x += p.beta + p.delta * static_cast<unsigned long>(deg[i]);
      u(i, j) = x;
    }
  for (const auto& [a, b] : g.edges()) {
    u(a, b) += p.alpha;
    u(b, a) += p.alpha;
  }
  return u;
}

std::vector<std::size_t> join_weights(const JoinSpec& spec) {
  spec.validate();
  std::vector<std::size_t> w(spec.k());
  for (const auto& [i, j] : spec.host.edges()) {
    w[i] += spec.components[j].n();
    w[j] += spec.components[i].n();
  }
  return w;
}

std::optional<std::pair<std::size_t, std::size_t>> is_k_tau_regular(const Graph& g, const VertexSubset& s) {
  if (s.parent_size() != g.n()) throw ShapeError("subset does not belong to this graph");
  if (s.empty()) throw DomainError("(k,tau)-regularity of an empty vertex set");

  std::vector<std::size_t> inside(g.n());  // neighbours in S
  for (const auto& [a, b] : g.edges()) {
    if (s.contains(b)) ++inside[a];
    if (s.contains(a)) ++inside[b];
  }
  const std::size_t k = inside[s.members().front()];
  for (std::size_t v : s.members())
    if (inside[v] != k) return std::nullopt;

  std::optional<std::size_t> tau;
  for (std::size_t v = 0; v < g.n(); ++v) {
    if (s.contains(v)) continue;
    if (tau && *tau != inside[v]) return std::nullopt;
    tau = inside[v];
  }
  return std::pair{k, tau.value_or(0)};
}

}  // namespace fiedler
