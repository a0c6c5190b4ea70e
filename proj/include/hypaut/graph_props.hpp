#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <variant>
#include <vector>

#include "hypaut/graph.hpp"

namespace hypaut {

// ---------------------------------------------------------------------------
// Witness types
// ---------------------------------------------------------------------------

/// Induced 4-cycle, vertices in cycle order.
struct C4Witness {
  std::array<VertexId, 4> cycle{};
  friend bool operator==(const C4Witness&, const C4Witness&) = default;
};

struct PerfectEliminationOrdering {
  std::vector<VertexId> order;
  friend bool operator==(const PerfectEliminationOrdering&, const PerfectEliminationOrdering&) = default;
};

/// Induced cycle of length >= 4, vertices in cycle order.
struct ChordlessCycle {
  std::vector<VertexId> cycle;
  friend bool operator==(const ChordlessCycle&, const ChordlessCycle&) = default;
};

using ChordalityCertificate = std::variant<PerfectEliminationOrdering, ChordlessCycle>;

inline bool is_chordal(const ChordalityCertificate& c) {
  return std::holds_alternative<PerfectEliminationOrdering>(c);
}

/// Separating intersection of links: v, w at distance >= 2 and a component of
/// the graph with lk(v) ∩ lk(w) removed that contains neither of them.
struct SILWitness {
  VertexId v = 0;
  VertexId w = 0;
  VertexSet component;
  friend bool operator==(const SILWitness&, const SILWitness&) = default;
};

// ---------------------------------------------------------------------------
// Verifiers. These only use graph_core primitives so they stay independent of
// the search code below.
// ---------------------------------------------------------------------------

inline bool verify_c4(const SimplicialGraph& g, const C4Witness& w) {
  for (VertexId x : w.cycle) {
    if (x >= g.order()) return false;
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (w.cycle[i] == w.cycle[j]) return false;
    }
  }
  const auto& c = w.cycle;
  return g.adjacent(c[0], c[1]) && g.adjacent(c[1], c[2]) && g.adjacent(c[2], c[3]) &&
         g.adjacent(c[3], c[0]) && !g.adjacent(c[0], c[2]) && !g.adjacent(c[1], c[3]);
}

inline bool verify_chordless_cycle(const SimplicialGraph& g, const ChordlessCycle& w) {
  const auto& c = w.cycle;
  const std::size_t k = c.size();
  if (k < 4) return false;
  std::vector<bool> seen(g.order(), false);
  for (VertexId x : c) {
    if (x >= g.order() || seen[x]) return false;
    seen[x] = true;
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.adjacent(c[i], c[j]) != consecutive) return false;
    }
  }
  return true;
}

// Later neighbours of every vertex form a clique.
inline bool verify_peo(const SimplicialGraph& g, const PerfectEliminationOrdering& p) {
  const std::size_t n = g.order();
  if (p.order.size() != n) return false;
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (p.order[i] >= n || pos[p.order[i]] != n) return false;
    pos[p.order[i]] = i;
  }
  for (VertexId v = 0; v < n; ++v) {
    VertexSet later(n);
    g.neighbors(v).for_each([&](VertexId u) {
      if (pos[u] > pos[v]) later.insert(u);
    });
    if (!is_clique(g, later)) return false;
  }
  return true;
}

inline bool verify_certificate(const SimplicialGraph& g, const ChordalityCertificate& c) {
  return std::visit(
      [&](const auto& cert) {
        using T = std::decay_t<decltype(cert)>;
        if constexpr (std::is_same_v<T, PerfectEliminationOrdering>) {
          return verify_peo(g, cert);
        } else {
          return verify_chordless_cycle(g, cert);
        }
      },
      c);
}

inline bool verify_sil(const SimplicialGraph& g, const SILWitness& w) {
  if (w.v >= g.order() || w.w >= g.order() || w.component.universe() != g.order()) return false;
  auto d = distance(g, w.v, w.w);
  if (d && *d < 2) return false;
  if (w.component.empty() || w.component.contains(w.v) || w.component.contains(w.w)) return false;
  VertexSet remaining = g.vertices() - (link(g, w.v) & link(g, w.w));
  if (!w.component.is_subset_of(remaining)) return false;
  auto sub = induced_subgraph(g, remaining);
  for (const VertexSet& comp : connected_components(sub.graph)) {
    VertexSet lifted(g.order());
    comp.for_each([&](VertexId x) { lifted.insert(sub.to_parent[x]); });
    if (lifted == w.component) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Searches
// ---------------------------------------------------------------------------

/// Induced 4-cycle with the lexicographically smallest sorted vertex tuple.
/// The cycle is reported starting at its smallest vertex, heading to the
/// smaller of that vertex's two cycle neighbours.
inline std::optional<C4Witness> find_induced_c4(const SimplicialGraph& g) {
  const auto n = static_cast<VertexId>(g.order());
  std::optional<std::array<VertexId, 4>> best;
  // Every induced C4 is a non-adjacent pair (u, w) plus two non-adjacent
  // common neighbours.
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId w = u + 1; w < n; ++w) {
      if (g.adjacent(u, w)) continue;
      auto common = (g.neighbors(u) & g.neighbors(w)).members();
      for (std::size_t i = 0; i < common.size(); ++i) {
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          if (g.adjacent(common[i], common[j])) continue;
          std::array<VertexId, 4> key{u, w, common[i], common[j]};
          std::sort(key.begin(), key.end());
          if (!best || key < *best) best = key;
        }
      }
    }
  }
  if (!best) return std::nullopt;
  const auto& s = *best;
  C4Witness out;
  out.cycle[0] = s[0];
  std::vector<VertexId> nbrs;
  VertexId opposite = s[0];
  for (int i = 1; i < 4; ++i) {
    if (g.adjacent(s[0], s[i])) {
      nbrs.push_back(s[i]);
    } else {
      opposite = s[i];
    }
  }
  out.cycle[1] = nbrs[0];
  out.cycle[2] = opposite;
  out.cycle[3] = nbrs[1];
  return out;
}

/// Lexicographic breadth-first search visit order (ties to the smallest id).
inline std::vector<VertexId> lex_bfs(const SimplicialGraph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::size_t>> label(n);
  std::vector<bool> visited(n, false);
  std::vector<VertexId> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::optional<VertexId> pick;
    for (VertexId v = 0; v < n; ++v) {
      if (visited[v]) continue;
      if (!pick || label[v] > label[*pick]) pick = v;
    }
    visited[*pick] = true;
    order.push_back(*pick);
    g.neighbors(*pick).for_each([&](VertexId u) {
      if (!visited[u]) label[u].push_back(n - step);
    });
  }
  return order;
}

namespace detail {

// Shortest x-y path avoiding `blocked`; empty when none exists.
inline std::vector<VertexId> shortest_path_avoiding(const SimplicialGraph& g, VertexId x, VertexId y,
                                                    const VertexSet& blocked) {
  const std::size_t n = g.order();
  std::vector<std::optional<VertexId>> parent(n);
  std::vector<bool> seen(n, false);
  std::deque<VertexId> queue{x};
  seen[x] = true;
  while (!queue.empty()) {
    VertexId a = queue.front();
    queue.pop_front();
    if (a == y) break;
    g.neighbors(a).for_each([&](VertexId b) {
      if (seen[b] || blocked.contains(b)) return;
      seen[b] = true;
      parent[b] = a;
      queue.push_back(b);
    });
  }
  if (!seen[y]) return {};
  std::vector<VertexId> path{y};
  while (path.back() != x) path.push_back(*parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

// v with non-adjacent neighbours x, y: a shortest x-y path that avoids the
// rest of st(v) closes an induced cycle through v of length >= 4.
inline std::optional<ChordlessCycle> cycle_through(const SimplicialGraph& g, VertexId v, VertexId x,
                                                   VertexId y) {
  VertexSet blocked = star(g, v);
  blocked.erase(x);
  blocked.erase(y);
  auto path = shortest_path_avoiding(g, x, y, blocked);
  if (path.empty()) return std::nullopt;
  ChordlessCycle c;
  c.cycle.push_back(v);
  c.cycle.insert(c.cycle.end(), path.begin(), path.end());
  return c;
}

}  // namespace detail

/// PEO from lexicographic BFS when the graph is chordal, otherwise an induced
/// cycle of length >= 4 recovered at the first vertex where the PEO test fails.
inline ChordalityCertificate chordality(const SimplicialGraph& g) {
  const std::size_t n = g.order();
  auto visit = lex_bfs(g);
  PerfectEliminationOrdering peo{std::vector<VertexId>(visit.rbegin(), visit.rend())};
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[peo.order[i]] = i;

  for (VertexId v : peo.order) {
    std::optional<VertexId> parent;
    std::vector<VertexId> later;
    g.neighbors(v).for_each([&](VertexId u) {
      if (pos[u] <= pos[v]) return;
      later.push_back(u);
      if (!parent || pos[u] < pos[*parent]) parent = u;
    });
    for (VertexId u : later) {
      if (u == *parent || g.adjacent(u, *parent)) continue;
      if (auto c = detail::cycle_through(g, v, *parent, u)) return *c;
      // Not expected for a LexBFS order; fall back to scanning every
      // vertex and pair of non-adjacent neighbours.
      for (VertexId a = 0; a < n; ++a) {
        auto nb = g.neighbors(a).members();
        for (std::size_t i = 0; i < nb.size(); ++i) {
          for (std::size_t j = i + 1; j < nb.size(); ++j) {
            if (g.adjacent(nb[i], nb[j])) continue;
            if (auto c2 = detail::cycle_through(g, a, nb[i], nb[j])) return *c2;
          }
        }
      }
    }
  }
  return peo;
}

/// First SIL in ascending pair order, with the smallest-keyed qualifying component.
inline std::optional<SILWitness> find_sil(const SimplicialGraph& g) {
  const auto n = static_cast<VertexId>(g.order());
  const VertexSet all = g.vertices();
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w = v + 1; w < n; ++w) {
      // d(v, w) >= 2, including different components.
      if (g.adjacent(v, w)) continue;
      VertexSet remaining = all - (g.neighbors(v) & g.neighbors(w));
      for (VertexSet& comp : components_within(g, remaining)) {
        if (!comp.contains(v) && !comp.contains(w)) return SILWitness{v, w, std::move(comp)};
      }
    }
  }
  return std::nullopt;
}

namespace detail {

inline void bron_kerbosch(const SimplicialGraph& g, VertexSet r, VertexSet p, VertexSet x,
                          std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(std::move(r));
    return;
  }
  // Tomita pivot: maximise |P ∩ N(u)|.
  VertexId pivot = 0;
  std::size_t best = 0;
  bool have = false;
  (p | x).for_each([&](VertexId u) {
    std::size_t c = (p & g.neighbors(u)).size();
    if (!have || c > best) {
      pivot = u;
      best = c;
      have = true;
    }
  });
  VertexSet candidates = p - g.neighbors(pivot);
  candidates.for_each([&](VertexId v) {
    VertexSet r2 = r;
    r2.insert(v);
    bron_kerbosch(g, std::move(r2), p & g.neighbors(v), x & g.neighbors(v), out);
    p.erase(v);
    x.insert(v);
  });
}

}  // namespace detail

/// All maximal cliques, sorted by smallest member, then size, then lexicographically.
inline std::vector<VertexSet> maximal_cliques(const SimplicialGraph& g) {
  std::vector<VertexSet> out;
  if (g.order() == 0) return out;
  detail::bron_kerbosch(g, VertexSet(g.order()), g.vertices(), VertexSet(g.order()), out);
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    if (*a.first() != *b.first()) return *a.first() < *b.first();
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
  });
  return out;
}

/// Vertices adjacent to every other vertex. The center of a graph product of
/// finite groups lies in the parabolic subgroup on this set.
inline VertexSet center_support(const SimplicialGraph& g) {
  VertexSet out(g.order());
  for (VertexId v = 0; v < g.order(); ++v) {
    if (star(g, v).size() == g.order()) out.insert(v);
  }
  if (!is_clique(g, out)) throw std::logic_error("center support is not a clique");
  return out;
}

}  // namespace hypaut
