#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hypaut/graph.hpp"

namespace hypaut {

/// Graph product of finite groups. Each vertex group is known only by its
/// order; every decision here depends on finiteness alone, and the word
/// layer realises vertex v as the cyclic group Z/order(v).
class GraphProductSpec {
 public:
  GraphProductSpec() = default;
  GraphProductSpec(SimplicialGraph graph, std::vector<std::uint32_t> orders)
      : graph_(std::move(graph)), orders_(std::move(orders)) {
    if (orders_.size() != graph_.order()) {
      throw InputError("expected " + std::to_string(graph_.order()) + " vertex group orders, got " +
                       std::to_string(orders_.size()));
    }
    for (VertexId v = 0; v < orders_.size(); ++v) {
      if (orders_[v] < 2) {
        throw InputError("vertex group order of " + graph_.name(v) + " is " + std::to_string(orders_[v]) +
                         "; vertex groups must be non-trivial (order >= 2)");
      }
    }
  }

  // All vertex groups of one order.
  static GraphProductSpec uniform(SimplicialGraph graph, std::uint32_t order) {
    std::vector<std::uint32_t> orders(graph.order(), order);
    return GraphProductSpec(std::move(graph), std::move(orders));
  }

  const SimplicialGraph& graph() const { return graph_; }
  std::uint32_t order(VertexId v) const {
    graph_.check_vertex(v);
    return orders_[v];
  }
  const std::vector<std::uint32_t>& orders() const { return orders_; }

 private:
  SimplicialGraph graph_;
  std::vector<std::uint32_t> orders_;
};

}  // namespace hypaut
