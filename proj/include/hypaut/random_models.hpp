#pragma once

// Seeded random graph models for the census. Draws go through mt19937_64
// with explicit reductions (not the std distributions, whose output differs
// between standard libraries) so a seed means the same sample everywhere.

#include <cstdint>
#include <random>
#include <vector>

#include "hypaut/graph.hpp"

namespace hypaut {

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound), by rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw InputError("empty range");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Uniform labelled tree on n vertices, decoded from a random Prüfer sequence.
inline SimplicialGraph random_tree(std::size_t n, RandomSource& rng) {
  std::vector<Edge> edges;
  if (n == 2) edges.push_back({0, 1});
  if (n > 2) {
    std::vector<VertexId> code(n - 2);
    for (auto& c : code) c = static_cast<VertexId>(rng.below(n));
    std::vector<std::size_t> degree(n, 1);
    for (auto c : code) ++degree[c];
    for (auto c : code) {
      VertexId leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.push_back({leaf, c});
      --degree[leaf];
      --degree[c];
    }
    VertexId a = 0;
    while (degree[a] != 1) ++a;
    VertexId b = a + 1;
    while (degree[b] != 1) ++b;
    edges.push_back({a, b});
  }
  return SimplicialGraph(n, edges);
}

/// Erdős–Rényi G(n, p): each pair independently, in ascending pair order.
inline SimplicialGraph random_gnp(std::size_t n, double p, RandomSource& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.push_back({u, v});
    }
  }
  return SimplicialGraph(n, edges);
}

}  // namespace hypaut
