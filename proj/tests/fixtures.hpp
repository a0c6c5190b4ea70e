#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hypaut/coxeter.hpp"
#include "hypaut/graph.hpp"

namespace hypaut::testing {

inline std::vector<std::string> letters(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

inline SimplicialGraph named(std::size_t n, std::initializer_list<Edge> edges) {
  std::vector<Edge> e(edges);
  return SimplicialGraph(n, e, letters(n));
}

inline SimplicialGraph triangle() { return named(3, {{0, 1}, {1, 2}, {0, 2}}); }
inline SimplicialGraph path2() { return named(3, {{0, 1}, {1, 2}}); }  // a–b–c
inline SimplicialGraph cycle4() { return named(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
inline SimplicialGraph cycle4_chord() { return named(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}); }
inline SimplicialGraph cycle5() { return named(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }
// K_{1,3}: center c, leaves a, b, d.
inline SimplicialGraph star13() { return named(4, {{0, 2}, {1, 2}, {3, 2}}); }
inline SimplicialGraph discrete(std::size_t n) { return SimplicialGraph(n, std::span<const Edge>{}, letters(n)); }
inline SimplicialGraph complete(std::size_t n) {
  std::vector<Edge> e;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) e.push_back({u, v});
  }
  return SimplicialGraph(n, e, letters(n));
}
inline SimplicialGraph two_edges() { return named(4, {{0, 1}, {2, 3}}); }

// Graph on n vertices whose edges are the set bits of `mask` over the pairs
// (0,1),(0,2),...,(n-2,n-1).
inline SimplicialGraph from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> e;
  std::size_t bit = 0;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1u) e.push_back({u, v});
    }
  }
  return SimplicialGraph(n, e);
}

inline SimplicialGraph random_gnp(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(rng)) e.push_back({u, v});
    }
  }
  return SimplicialGraph(n, e);
}

inline SimplicialGraph random_tree(std::size_t n, std::mt19937_64& rng) {
  std::vector<Edge> e;
  for (VertexId v = 1; v < n; ++v) {
    std::uniform_int_distribution<VertexId> pick(0, v - 1);
    e.push_back({pick(rng), v});
  }
  return SimplicialGraph(n, e);
}

// Coxeter system on n vertices from upper-triangle labels (0 = ∞).
inline CoxeterMatrix coxeter(std::size_t n, std::initializer_list<int> upper) {
  CoxeterMatrix m(n);
  auto it = upper.begin();
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v, ++it) {
      if (*it != 0) m.set(u, v, *it);
    }
  }
  return m;
}

}  // namespace hypaut::testing
