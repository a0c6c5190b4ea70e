#pragma once

// Definitional brute-force twins of the graph searches. They share nothing
// with the fast paths beyond the graph representation: components come from
// a union-find over the edge list, distances from graph_core BFS, and every
// search is a plain enumeration of the definition.

#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "hypaut/graph.hpp"

namespace hypaut::oracle {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

// Component label per vertex of g (labels are representative ids).
inline std::vector<std::size_t> component_labels(const SimplicialGraph& g) {
  UnionFind uf(g.order());
  for (const auto& e : g.edges()) uf.unite(e.u, e.v);
  std::vector<std::size_t> out(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) out[v] = uf.find(v);
  return out;
}

/// Whether Γ has a SIL, straight from the definition: some pair at distance
/// >= 2 whose common-link complement has a component avoiding both.
inline bool has_sil(const SimplicialGraph& g) {
  const auto n = static_cast<VertexId>(g.order());
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w = 0; w < n; ++w) {
      if (v == w) continue;
      auto d = distance(g, v, w);
      if (d && *d < 2) continue;
      VertexSet keep(n);
      for (VertexId x = 0; x < n; ++x) {
        if (!(g.adjacent(x, v) && g.adjacent(x, w))) keep.insert(x);
      }
      auto sub = induced_subgraph(g, keep);
      auto labels = component_labels(sub.graph);
      const auto lv = labels[*sub.from_parent[v]];
      const auto lw = labels[*sub.from_parent[w]];
      for (auto l : labels) {
        if (l != lv && l != lw) return true;
      }
    }
  }
  return false;
}

namespace detail {

inline std::vector<std::uint32_t> adjacency_masks(const SimplicialGraph& g) {
  if (g.order() > 24) throw ResourceError("brute-force subset search is limited to 24 vertices");
  std::vector<std::uint32_t> adj(g.order(), 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= std::uint32_t{1} << e.v;
    adj[e.v] |= std::uint32_t{1} << e.u;
  }
  return adj;
}

// The subgraph induced on s is a cycle: |s| >= 3, every degree 2, connected.
inline bool induces_cycle(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
  if (std::popcount(s) < 3) return false;
  for (std::uint32_t r = s; r != 0; r &= r - 1) {
    if (std::popcount(adj[std::countr_zero(r)] & s) != 2) return false;
  }
  std::uint32_t seen = s & (~s + 1);
  std::uint32_t frontier = seen;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (std::uint32_t r = frontier; r != 0; r &= r - 1) next |= adj[std::countr_zero(r)];
    next &= s & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == s;
}

}  // namespace detail

inline bool induces_cycle(const SimplicialGraph& g, const VertexSet& s) {
  std::uint32_t mask = 0;
  s.for_each([&](VertexId v) { mask |= std::uint32_t{1} << v; });
  return detail::induces_cycle(detail::adjacency_masks(g), mask);
}

/// Any induced cycle of length >= 4, by enumerating every vertex subset.
inline bool has_chordless_cycle(const SimplicialGraph& g) {
  const auto adj = detail::adjacency_masks(g);
  const std::uint32_t limit = std::uint32_t{1} << g.order();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) >= 4 && detail::induces_cycle(adj, mask)) return true;
  }
  return false;
}

inline bool has_induced_c4(const SimplicialGraph& g) {
  const auto adj = detail::adjacency_masks(g);
  const std::uint32_t limit = std::uint32_t{1} << g.order();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) == 4 && detail::induces_cycle(adj, mask)) return true;
  }
  return false;
}

/// Maximal cliques by enumerating subsets, in ascending mask order.
inline std::vector<VertexSet> maximal_cliques(const SimplicialGraph& g) {
  const std::size_t n = g.order();
  if (n > 24) throw ResourceError("brute-force clique search is limited to 24 vertices");
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet s(n);
    for (VertexId v = 0; v < n; ++v) {
      if ((mask >> v) & 1u) s.insert(v);
    }
    if (!is_clique(g, s)) continue;
    bool maximal = true;
    for (VertexId v = 0; v < n && maximal; ++v) {
      if (s.contains(v)) continue;
      VertexSet t = s;
      t.insert(v);
      if (is_clique(g, t)) maximal = false;
    }
    if (maximal) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace hypaut::oracle
