#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hypaut/errors.hpp"
#include "hypaut/vertex_set.hpp"

namespace hypaut {

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simplicial graph on dense vertex ids [0, n).
///
/// Edges have set semantics: a repeated pair is stored once. Loops and
/// out-of-range endpoints are rejected. Vertex names are carried along for
/// reporting; when none are given, vertex i is named by its decimal index.
class SimplicialGraph {
 public:
  SimplicialGraph() = default;

  explicit SimplicialGraph(std::size_t n, std::span<const Edge> edges = {},
                           std::vector<std::string> names = {})
      : adjacency_(n, VertexSet(n)), names_(std::move(names)) {
    if (names_.empty()) {
      names_.reserve(n);
      for (std::size_t i = 0; i < n; ++i) names_.push_back(std::to_string(i));
    } else if (names_.size() != n) {
      throw InputError("expected " + std::to_string(n) + " vertex names, got " +
                       std::to_string(names_.size()));
    }
    for (const Edge& e : edges) {
      if (e.u >= n || e.v >= n) {
        throw InputError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         "} has an endpoint outside [0, " + std::to_string(n) + ")");
      }
      if (e.u == e.v) throw InputError("loop at vertex " + names_[e.u]);
      adjacency_[e.u].insert(e.v);
      adjacency_[e.v].insert(e.u);
    }
  }

  SimplicialGraph(std::size_t n, std::initializer_list<Edge> edges)
      : SimplicialGraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const { return adjacency_.size(); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& a : adjacency_) twice += a.size();
    return twice / 2;
  }

  bool adjacent(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    return adjacency_[u].contains(v);
  }

  const VertexSet& neighbors(VertexId v) const {
    check_vertex(v);
    return adjacency_[v];
  }

  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  // Ascending (u < v), sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (VertexId u = 0; u < order(); ++u) {
      adjacency_[u].for_each([&](VertexId v) {
        if (u < v) out.push_back({u, v});
      });
    }
    return out;
  }

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(VertexId v) const {
    check_vertex(v);
    return names_[v];
  }

  std::optional<VertexId> find(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return static_cast<VertexId>(i);
    }
    return std::nullopt;
  }

  VertexSet vertices() const { return VertexSet::full(order()); }

  void check_vertex(VertexId v) const {
    if (v >= order()) {
      throw InputError("vertex " + std::to_string(v) + " not in graph of order " +
                       std::to_string(order()));
    }
  }

  void check_subset(const VertexSet& s) const {
    if (s.universe() != order()) {
      throw InputError("vertex set universe " + std::to_string(s.universe()) +
                       " does not match graph order " + std::to_string(order()));
    }
  }

  friend bool operator==(const SimplicialGraph& a, const SimplicialGraph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<VertexSet> adjacency_;
  std::vector<std::string> names_;
};

struct InducedSubgraph {
  SimplicialGraph graph;
  std::vector<VertexId> to_parent;                   // new id -> old id
  std::vector<std::optional<VertexId>> from_parent;  // old id -> new id
};

inline InducedSubgraph induced_subgraph(const SimplicialGraph& g, const VertexSet& s) {
  g.check_subset(s);
  InducedSubgraph out;
  out.to_parent = s.members();
  out.from_parent.assign(g.order(), std::nullopt);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    out.from_parent[out.to_parent[i]] = static_cast<VertexId>(i);
  }
  std::vector<Edge> edges;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    VertexId u = out.to_parent[i];
    names.push_back(g.name(u));
    (g.neighbors(u) & s).for_each([&](VertexId v) {
      if (u < v) edges.push_back({static_cast<VertexId>(i), *out.from_parent[v]});
    });
  }
  out.graph = SimplicialGraph(out.to_parent.size(), edges, std::move(names));
  return out;
}

inline VertexSet link(const SimplicialGraph& g, VertexId v) { return g.neighbors(v); }

inline VertexSet star(const SimplicialGraph& g, VertexId v) {
  VertexSet s = g.neighbors(v);
  s.insert(v);
  return s;
}

/// BFS shortest-path length; nullopt when u and v lie in different components.
inline std::optional<std::size_t> distance(const SimplicialGraph& g, VertexId u, VertexId v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) return 0;
  std::vector<std::size_t> dist(g.order(), static_cast<std::size_t>(-1));
  std::deque<VertexId> queue{u};
  dist[u] = 0;
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    bool found = false;
    g.neighbors(x).for_each([&](VertexId y) {
      if (dist[y] != static_cast<std::size_t>(-1)) return;
      dist[y] = dist[x] + 1;
      if (y == v) found = true;
      queue.push_back(y);
    });
    if (found) return dist[v];
  }
  return std::nullopt;
}

/// Components of the subgraph induced on `within`, in ids of `g`.
/// Each component is keyed by its smallest vertex; the result is sorted by key.
inline std::vector<VertexSet> components_within(const SimplicialGraph& g, const VertexSet& within) {
  g.check_subset(within);
  std::vector<VertexSet> out;
  VertexSet unseen = within;
  while (auto root = unseen.first()) {
    VertexSet comp(g.order());
    VertexSet frontier(g.order(), {*root});
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next(g.order());
      frontier.for_each([&](VertexId x) { next |= g.neighbors(x); });
      next &= within;
      next -= comp;
      frontier = std::move(next);
    }
    unseen -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

inline std::vector<VertexSet> connected_components(const SimplicialGraph& g) {
  return components_within(g, g.vertices());
}

inline bool is_complete(const SimplicialGraph& g) {
  const std::size_t n = g.order();
  return g.edge_count() == n * (n == 0 ? 0 : n - 1) / 2;
}

inline bool is_clique(const SimplicialGraph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](VertexId v) {
    if (!ok) return;
    VertexSet others = s;
    others.erase(v);
    ok = others.is_subset_of(g.neighbors(v));
  });
  return ok;
}

inline std::size_t max_degree(const SimplicialGraph& g) {
  std::size_t d = 0;
  for (VertexId v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

}  // namespace hypaut
