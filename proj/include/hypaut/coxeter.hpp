#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hypaut/graph.hpp"

namespace hypaut {

// ---------------------------------------------------------------------------
// Presentation graph and Coxeter matrix
//
// Convention: a missing edge in the presentation graph means m = ∞ (no
// relation between the two generators). Diagram adjacency, used for
// irreducibility and classification, is m ≠ 2 and so includes ∞ pairs.
// This is the opposite of how Dynkin diagrams are drawn.
// ---------------------------------------------------------------------------

struct LabeledEdge {
  VertexId u = 0;
  VertexId v = 0;
  int label = 2;
};

/// Simplicial graph with an order label >= 2 on every edge.
class CoxeterPresentationGraph {
 public:
  CoxeterPresentationGraph() = default;

  CoxeterPresentationGraph(std::size_t n, std::span<const LabeledEdge> edges,
                           std::vector<std::string> names = {}) {
    std::vector<Edge> plain;
    plain.reserve(edges.size());
    for (const auto& e : edges) {
      if (e.label < 2) {
        throw InputError("edge label " + std::to_string(e.label) + " < 2");
      }
      Edge key{std::min(e.u, e.v), std::max(e.u, e.v)};
      auto [it, inserted] = labels_.emplace(key, e.label);
      if (!inserted && it->second != e.label) throw InputError("conflicting labels on one edge");
      plain.push_back({e.u, e.v});
    }
    graph_ = SimplicialGraph(n, plain, std::move(names));
  }

  CoxeterPresentationGraph(std::size_t n, std::initializer_list<LabeledEdge> edges,
                           std::vector<std::string> names = {})
      : CoxeterPresentationGraph(n, std::span<const LabeledEdge>(edges.begin(), edges.size()),
                                 std::move(names)) {}

  const SimplicialGraph& graph() const { return graph_; }
  std::size_t order() const { return graph_.order(); }

  // Label of an existing edge; nullopt for a non-edge (order ∞).
  std::optional<int> label(VertexId u, VertexId v) const {
    auto it = labels_.find(Edge{std::min(u, v), std::max(u, v)});
    if (it == labels_.end()) return std::nullopt;
    return it->second;
  }

  std::vector<LabeledEdge> labeled_edges() const {
    std::vector<LabeledEdge> out;
    for (const auto& [e, l] : labels_) out.push_back({e.u, e.v, l});
    return out;
  }

 private:
  SimplicialGraph graph_;
  std::map<Edge, int> labels_;
};

class CoxeterMatrix {
 public:
  static constexpr int infinity = std::numeric_limits<int>::max();

  CoxeterMatrix() = default;
  // Off-diagonal entries start at ∞.
  explicit CoxeterMatrix(std::size_t n) : n_(n), m_(n * n, infinity) {
    for (std::size_t i = 0; i < n; ++i) m_[i * n + i] = 1;
  }

  std::size_t rank() const { return n_; }

  int operator()(VertexId u, VertexId v) const { return m_[u * n_ + v]; }

  void set(VertexId u, VertexId v, int value) {
    if (u == v || u >= n_ || v >= n_) throw InputError("invalid Coxeter matrix position");
    if (value < 2) throw InputError("Coxeter matrix entry " + std::to_string(value) + " < 2");
    m_[u * n_ + v] = value;
    m_[v * n_ + u] = value;
  }

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<int> m_;
};

inline CoxeterMatrix coxeter_matrix(const CoxeterPresentationGraph& cg) {
  CoxeterMatrix m(cg.order());
  for (const auto& e : cg.labeled_edges()) m.set(e.u, e.v, e.label);
  return m;
}

// The presentation graph of a matrix: an edge exactly where m is finite.
inline CoxeterPresentationGraph presentation_graph(const CoxeterMatrix& m,
                                                   std::vector<std::string> names = {}) {
  std::vector<LabeledEdge> edges;
  for (VertexId u = 0; u < m.rank(); ++u) {
    for (VertexId v = u + 1; v < m.rank(); ++v) {
      if (m(u, v) != CoxeterMatrix::infinity) edges.push_back({u, v, m(u, v)});
    }
  }
  return CoxeterPresentationGraph(m.rank(), edges, std::move(names));
}

/// Components of s under u ~ v ⟺ m(u, v) ≠ 2, sorted by smallest member.
inline std::vector<VertexSet> diagram_components(const CoxeterMatrix& m, const VertexSet& s) {
  std::vector<VertexSet> out;
  VertexSet unseen = s;
  while (auto root = unseen.first()) {
    VertexSet comp(m.rank());
    std::vector<VertexId> stack{*root};
    comp.insert(*root);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      unseen.for_each([&](VertexId y) {
        if (!comp.contains(y) && m(x, y) != 2) {
          comp.insert(y);
          stack.push_back(y);
        }
      });
    }
    unseen -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact classification of irreducible systems
// ---------------------------------------------------------------------------

enum class TypeKind { Finite, Affine, Indefinite };

struct IrreducibleClassification {
  TypeKind kind = TypeKind::Indefinite;
  std::string name;  // "A3", "I2(7)", "~A2", "~G2", ... ; empty for Indefinite
  friend bool operator==(const IrreducibleClassification&, const IrreducibleClassification&) = default;
};

namespace detail {

struct LocalDiagram {
  std::size_t k = 0;
  std::vector<int> label;  // k*k; 2 = no diagram edge
  std::vector<std::vector<std::size_t>> adj;

  int at(std::size_t i, std::size_t j) const { return label[i * k + j]; }
};

inline LocalDiagram local_diagram(const CoxeterMatrix& m, std::span<const VertexId> vs) {
  LocalDiagram d;
  d.k = vs.size();
  d.label.assign(d.k * d.k, 1);
  d.adj.resize(d.k);
  for (std::size_t i = 0; i < d.k; ++i) {
    for (std::size_t j = 0; j < d.k; ++j) {
      if (i == j) continue;
      d.label[i * d.k + j] = m(vs[i], vs[j]);
      if (m(vs[i], vs[j]) != 2) d.adj[i].push_back(j);
    }
  }
  return d;
}

inline bool local_connected(const LocalDiagram& d) {
  if (d.k == 0) return false;
  std::vector<bool> seen(d.k, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    for (auto y : d.adj[x]) {
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == d.k;
}

inline IrreducibleClassification finite(std::string name) { return {TypeKind::Finite, std::move(name)}; }
inline IrreducibleClassification affine(std::string name) { return {TypeKind::Affine, std::move(name)}; }
inline IrreducibleClassification indefinite() { return {TypeKind::Indefinite, {}}; }

// Path diagram with edge labels read from one end to the other.
inline IrreducibleClassification classify_path(const std::vector<int>& seq) {
  const std::size_t k = seq.size() + 1;
  const std::string n = std::to_string(k);
  std::vector<std::size_t> odd;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] != 3) odd.push_back(i);
  }
  const std::size_t last = seq.size() - 1;
  auto at_end = [&](std::size_t i) { return i == 0 || i == last; };

  if (odd.empty()) return finite("A" + n);
  if (odd.size() == 1) {
    const std::size_t p = odd[0];
    switch (seq[p]) {
      case 4:
        if (at_end(p)) return finite("B" + n);
        if (k == 4) return finite("F4");
        if (k == 5 && (p == 1 || p == 2)) return affine("~F4");
        return indefinite();
      case 5:
        if (at_end(p) && k == 3) return finite("H3");
        if (at_end(p) && k == 4) return finite("H4");
        return indefinite();
      case 6:
        if (at_end(p) && k == 3) return affine("~G2");
        return indefinite();
      default:
        return indefinite();
    }
  }
  if (odd.size() == 2 && seq[odd[0]] == 4 && seq[odd[1]] == 4 && odd[0] == 0 && odd[1] == last) {
    return affine("~C" + std::to_string(k - 1));
  }
  return indefinite();
}

inline IrreducibleClassification classify_tree(const LocalDiagram& d) {
  const std::size_t k = d.k;
  std::size_t max_deg = 0;
  std::vector<std::size_t> branches;
  std::size_t fours = 0;
  bool other_labels = false;
  for (std::size_t i = 0; i < k; ++i) {
    max_deg = std::max(max_deg, d.adj[i].size());
    if (d.adj[i].size() >= 3) branches.push_back(i);
    for (auto j : d.adj[i]) {
      if (j < i) continue;
      if (d.at(i, j) == 4) {
        ++fours;
      } else if (d.at(i, j) != 3) {
        other_labels = true;
      }
    }
  }
  if (max_deg >= 5) return indefinite();
  if (max_deg == 4) {
    return (k == 5 && fours == 0 && !other_labels) ? affine("~D4") : indefinite();
  }

  if (branches.empty()) {
    std::size_t start = 0;
    while (d.adj[start].size() != 1) ++start;
    std::vector<int> seq;
    std::size_t prev = k, cur = start;
    while (true) {
      std::size_t next = k;
      for (auto j : d.adj[cur]) {
        if (j != prev) next = j;
      }
      if (next == k) break;
      seq.push_back(d.at(cur, next));
      prev = cur;
      cur = next;
    }
    return classify_path(seq);
  }

  if (other_labels) return indefinite();

  if (branches.size() == 1) {
    const std::size_t c = branches[0];
    struct Arm {
      std::size_t length = 0;
      std::vector<int> labels;  // from the branch vertex outwards
    };
    std::vector<Arm> arms;
    for (auto first : d.adj[c]) {
      Arm arm;
      std::size_t prev = c, cur = first;
      arm.labels.push_back(d.at(c, first));
      while (true) {
        ++arm.length;
        std::size_t next = k;
        for (auto j : d.adj[cur]) {
          if (j != prev) next = j;
        }
        if (next == k) break;
        arm.labels.push_back(d.at(cur, next));
        prev = cur;
        cur = next;
      }
      arms.push_back(std::move(arm));
    }
    if (fours == 0) {
      std::array<std::size_t, 3> len{arms[0].length, arms[1].length, arms[2].length};
      std::sort(len.begin(), len.end());
      if (len[0] == 1 && len[1] == 1) return finite("D" + std::to_string(k));
      if (len == std::array<std::size_t, 3>{1, 2, 2}) return finite("E6");
      if (len == std::array<std::size_t, 3>{1, 2, 3}) return finite("E7");
      if (len == std::array<std::size_t, 3>{1, 2, 4}) return finite("E8");
      if (len == std::array<std::size_t, 3>{2, 2, 2}) return affine("~E6");
      if (len == std::array<std::size_t, 3>{1, 3, 3}) return affine("~E7");
      if (len == std::array<std::size_t, 3>{1, 2, 5}) return affine("~E8");
      return indefinite();
    }
    if (fours == 1) {
      // One arm ends in the 4-edge; the other two are single vertices.
      for (std::size_t a = 0; a < 3; ++a) {
        if (arms[a].labels.back() != 4) continue;
        bool others_short = true;
        for (std::size_t b = 0; b < 3; ++b) {
          if (b != a && arms[b].length != 1) others_short = false;
        }
        if (others_short) return affine("~B" + std::to_string(k - 1));
      }
    }
    return indefinite();
  }

  if (branches.size() == 2 && fours == 0) {
    for (auto b : branches) {
      std::size_t leaves = 0;
      for (auto j : d.adj[b]) {
        if (d.adj[j].size() == 1) ++leaves;
      }
      if (leaves != 2) return indefinite();
    }
    return affine("~D" + std::to_string(k - 1));
  }
  return indefinite();
}

inline IrreducibleClassification classify_members(const CoxeterMatrix& m, std::span<const VertexId> vs) {
  const LocalDiagram d = local_diagram(m, vs);
  if (!local_connected(d)) throw InputError("vertex set is not irreducible (diagram is disconnected)");
  const std::size_t k = d.k;
  if (k == 1) return finite("A1");
  if (k == 2) {
    const int l = d.at(0, 1);
    if (l == CoxeterMatrix::infinity) return affine("~A1");
    return finite("I2(" + std::to_string(l) + ")");
  }
  std::size_t edges = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (auto j : d.adj[i]) {
      if (j < i) continue;
      if (d.at(i, j) == CoxeterMatrix::infinity) return indefinite();
      ++edges;
    }
  }
  if (edges > k) return indefinite();
  if (edges == k) {
    for (std::size_t i = 0; i < k; ++i) {
      if (d.adj[i].size() != 2) return indefinite();
      for (auto j : d.adj[i]) {
        if (d.at(i, j) != 3) return indefinite();
      }
    }
    return affine("~A" + std::to_string(k - 1));
  }
  return classify_tree(d);
}

inline std::vector<VertexId> mask_members(std::uint64_t mask) {
  std::vector<VertexId> out;
  while (mask != 0) {
    out.push_back(static_cast<VertexId>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace detail

/// Matches an irreducible vertex set against the finite and affine tables.
/// Throws InputError when s is empty or not diagram-connected.
inline IrreducibleClassification classify_irreducible(const CoxeterMatrix& m, const VertexSet& s) {
  auto vs = s.members();
  return detail::classify_members(m, vs);
}

inline bool is_finite_system(const CoxeterMatrix& m, const VertexSet& s) {
  for (const auto& comp : diagram_components(m, s)) {
    if (classify_irreducible(m, comp).kind != TypeKind::Finite) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Gram form (floating-point cross-check only; never used for decisions)
// ---------------------------------------------------------------------------

inline Eigen::MatrixXd gram_matrix(const CoxeterMatrix& m, const VertexSet& s) {
  auto vs = s.members();
  const auto k = static_cast<Eigen::Index>(vs.size());
  Eigen::MatrixXd g(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      if (i == j) {
        g(i, j) = 1.0;
      } else {
        const int l = m(vs[i], vs[j]);
        g(i, j) = l == CoxeterMatrix::infinity ? -1.0 : -std::cos(std::numbers::pi / l);
      }
    }
  }
  return g;
}

enum class SignatureKind { PositiveDefinite, PositiveSemidefinite, Indefinite };

struct GramSignature {
  SignatureKind kind = SignatureKind::Indefinite;
  std::size_t nullity = 0;  // eigenvalues in [-tol, tol]
  friend bool operator==(const GramSignature&, const GramSignature&) = default;
};

inline GramSignature gram_signature(const Eigen::MatrixXd& g, double tol = 1e-9) {
  const Eigen::MatrixXd sym = 0.5 * (g + g.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  GramSignature out;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev[i] < -tol) return {SignatureKind::Indefinite, 0};
    if (ev[i] <= tol) ++out.nullity;
  }
  out.kind = out.nullity == 0 ? SignatureKind::PositiveDefinite : SignatureKind::PositiveSemidefinite;
  return out;
}

// ---------------------------------------------------------------------------
// Lannér diagrams: irreducible, not finite, not affine, every proper
// subdiagram finite. Rank 3 is the hyperbolic triangle condition
// 1/p + 1/q + 1/r < 1; ranks 4 and 5 come from the tables below, in
// canonical form (lexicographically least upper triangle over all vertex
// orders, pairs listed (0,1),(0,2),...,(k-2,k-1)).
// ---------------------------------------------------------------------------

namespace detail {

inline constexpr std::array<std::array<int, 6>, 9> kLannerRank4{{
    {2, 2, 3, 2, 3, 5},
    {2, 2, 3, 3, 2, 5},
    {2, 2, 4, 5, 2, 3},
    {2, 2, 5, 5, 2, 3},
    {2, 3, 3, 3, 4, 2},
    {2, 3, 3, 3, 5, 2},
    {2, 3, 4, 4, 3, 2},
    {2, 3, 4, 5, 3, 2},
    {2, 3, 5, 5, 3, 2},
}};

inline constexpr std::array<std::array<int, 10>, 5> kLannerRank5{{
    {2, 2, 2, 3, 2, 2, 3, 5, 2, 3},
    {2, 2, 2, 3, 2, 3, 3, 5, 2, 2},
    {2, 2, 2, 4, 2, 3, 3, 5, 2, 2},
    {2, 2, 2, 5, 2, 3, 3, 5, 2, 2},
    {2, 2, 3, 3, 3, 2, 3, 4, 2, 2},
}};

inline std::vector<int> canonical_upper_triangle(const CoxeterMatrix& m, std::vector<VertexId> vs) {
  std::sort(vs.begin(), vs.end());
  std::vector<int> best;
  do {
    std::vector<int> t;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) t.push_back(m(vs[i], vs[j]));
    }
    if (best.empty() || t < best) best = std::move(t);
  } while (std::next_permutation(vs.begin(), vs.end()));
  return best;
}

}  // namespace detail

inline bool is_lanner(const CoxeterMatrix& m, const VertexSet& s) {
  auto vs = s.members();
  if (vs.size() < 3 || vs.size() > 5) return false;
  if (diagram_components(m, s).size() != 1) return false;
  if (vs.size() == 3) {
    std::int64_t p = m(vs[0], vs[1]), q = m(vs[0], vs[2]), r = m(vs[1], vs[2]);
    if (p == CoxeterMatrix::infinity || q == CoxeterMatrix::infinity || r == CoxeterMatrix::infinity) {
      return false;
    }
    // 1/p + 1/q + 1/r < 1
    return q * r + p * r + p * q < p * q * r;
  }
  auto canon = detail::canonical_upper_triangle(m, vs);
  if (vs.size() == 4) {
    for (const auto& row : detail::kLannerRank4) {
      if (std::equal(row.begin(), row.end(), canon.begin(), canon.end())) return true;
    }
    return false;
  }
  for (const auto& row : detail::kLannerRank5) {
    if (std::equal(row.begin(), row.end(), canon.begin(), canon.end())) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Subset searches for the hyperbolicity criterion
// ---------------------------------------------------------------------------

struct EuclideanSubdiagramWitness {
  VertexSet subset;
  std::string type_name;
  friend bool operator==(const EuclideanSubdiagramWitness&, const EuclideanSubdiagramWitness&) = default;
};

struct CommutingInfinitePairWitness {
  VertexSet first;
  VertexSet second;
  friend bool operator==(const CommutingInfinitePairWitness&, const CommutingInfinitePairWitness&) = default;
};

enum class SearchMode {
  // Grows diagram-connected finite subsets and keeps their minimal infinite
  // one-vertex extensions (∞ pairs, affine, Lannér).
  MinimalInfinite,
  // Definitional twin: every subset of the vertex set.
  AllSubsets,
};

struct SearchOptions {
  SearchMode mode = SearchMode::MinimalInfinite;
  std::size_t max_vertices = 20;  // 2^20 subsets
  // Lifts max_vertices for the minimal-infinite enumerator, which only walks
  // finite-type diagram shapes (paths and forks) and their closures.
  bool pattern_mode = false;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

namespace detail {

constexpr std::size_t kMaskVertices = 64;

inline void check_cap(std::size_t n, const SearchOptions& opt) {
  if (opt.mode == SearchMode::AllSubsets || !opt.pattern_mode) {
    if (n > opt.max_vertices) {
      throw ResourceError("subset search over " + std::to_string(n) + " vertices exceeds the cap of " +
                          std::to_string(opt.max_vertices) +
                          " vertices; use --pattern-mode for larger diagrams");
    }
  }
  if (n > kMaskVertices || (opt.mode == SearchMode::AllSubsets && n > 30)) {
    throw ResourceError("subset search supports at most " +
                        std::to_string(opt.mode == SearchMode::AllSubsets ? 30 : kMaskVertices) +
                        " vertices");
  }
}

class DeadlineGuard {
 public:
  explicit DeadlineGuard(const SearchOptions& opt) : deadline_(opt.deadline) {}
  void tick() {
    if (deadline_ && (++count_ & 0x3ff) == 0 && std::chrono::steady_clock::now() > *deadline_) {
      throw DeadlineExceeded();
    }
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::uint64_t count_ = 0;
};

// Mask-level kernel shared by both search modes.
class MaskSystem {
 public:
  explicit MaskSystem(const CoxeterMatrix& m) : m_(m), n_(m.rank()), diagram_(n_, 0), commute_(n_, 0) {
    for (VertexId u = 0; u < n_; ++u) {
      for (VertexId v = 0; v < n_; ++v) {
        if (u == v) continue;
        if (m(u, v) == 2) {
          commute_[u] |= std::uint64_t{1} << v;
        } else {
          diagram_[u] |= std::uint64_t{1} << v;
        }
      }
    }
  }

  std::size_t size() const { return n_; }
  std::uint64_t diagram_neighbors(VertexId v) const { return diagram_[v]; }

  std::vector<std::uint64_t> components(std::uint64_t s) const {
    std::vector<std::uint64_t> out;
    while (s != 0) {
      std::uint64_t comp = s & (~s + 1);
      std::uint64_t frontier = comp;
      while (frontier != 0) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= diagram_[std::countr_zero(f)];
        next &= s & ~comp;
        comp |= next;
        frontier = next;
      }
      out.push_back(comp);
      s &= ~comp;
    }
    return out;
  }

  bool connected(std::uint64_t s) const { return s != 0 && components(s).size() == 1; }

  IrreducibleClassification classify(std::uint64_t s) const {
    auto vs = mask_members(s);
    return classify_members(m_, vs);
  }

  bool finite(std::uint64_t s) const {
    for (auto c : components(s)) {
      if (classify(c).kind != TypeKind::Finite) return false;
    }
    return true;
  }

  // Vertices outside s commuting with all of s.
  std::uint64_t orth(std::uint64_t s) const {
    std::uint64_t out = full() & ~s;
    for (std::uint64_t f = s; f != 0; f &= f - 1) out &= commute_[std::countr_zero(f)];
    return out;
  }

  std::uint64_t full() const { return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1; }

  VertexSet to_set(std::uint64_t s) const {
    VertexSet out(n_);
    for (auto v : mask_members(s)) out.insert(v);
    return out;
  }

 private:
  const CoxeterMatrix& m_;
  std::size_t n_;
  std::vector<std::uint64_t> diagram_;
  std::vector<std::uint64_t> commute_;
};

// Size first, then lexicographic on ascending member lists.
inline bool mask_less(std::uint64_t a, std::uint64_t b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  const std::uint64_t low = (a ^ b) & (~(a ^ b) + 1);
  return (a & low) != 0;
}

// Enumerates each diagram-connected subset once (extension-set method),
// descending only into finite subsets, and records the infinite subsets all
// of whose proper subsets are finite.
class MinimalInfiniteEnumerator {
 public:
  MinimalInfiniteEnumerator(const MaskSystem& sys, DeadlineGuard& guard) : sys_(sys), guard_(guard) {}

  std::vector<std::uint64_t> run() {
    for (VertexId r = 0; r < sys_.size(); ++r) {
      root_ = r;
      const std::uint64_t above = sys_.full() & ~((std::uint64_t{2} << r) - 1);
      extend(std::uint64_t{1} << r, sys_.diagram_neighbors(r) & above, sys_.diagram_neighbors(r));
    }
    std::sort(found_.begin(), found_.end(), mask_less);
    return found_;
  }

 private:
  void extend(std::uint64_t s, std::uint64_t ext, std::uint64_t nbhd) {
    guard_.tick();
    if (!visit(s)) return;
    const std::uint64_t above = sys_.full() & ~((std::uint64_t{2} << root_) - 1);
    while (ext != 0) {
      const auto w = static_cast<VertexId>(std::countr_zero(ext));
      ext &= ext - 1;
      const std::uint64_t wn = sys_.diagram_neighbors(w);
      const std::uint64_t exclusive = wn & ~s & ~nbhd & above;
      extend(s | (std::uint64_t{1} << w), ext | exclusive, nbhd | wn);
    }
  }

  // False when s is infinite (no further growth).
  bool visit(std::uint64_t s) {
    if (sys_.classify(s).kind == TypeKind::Finite) return true;
    bool minimal = true;
    for (std::uint64_t f = s; f != 0 && minimal; f &= f - 1) {
      minimal = sys_.finite(s & ~(f & (~f + 1)));
    }
    if (minimal) found_.push_back(s);
    return false;
  }

  const MaskSystem& sys_;
  DeadlineGuard& guard_;
  VertexId root_ = 0;
  std::vector<std::uint64_t> found_;
};

// All subsets in size-then-lexicographic order.
inline std::vector<std::uint64_t> all_subsets_ordered(std::size_t n) {
  std::vector<std::uint64_t> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) out.push_back(s);
  std::sort(out.begin(), out.end(), mask_less);
  return out;
}

}  // namespace detail

/// Every minimal infinite subset, sorted by size then lexicographically.
inline std::vector<VertexSet> minimal_infinite_subsets(const CoxeterMatrix& m, const SearchOptions& opt = {}) {
  SearchOptions o = opt;
  o.mode = SearchMode::MinimalInfinite;
  detail::check_cap(m.rank(), o);
  detail::MaskSystem sys(m);
  detail::DeadlineGuard guard(o);
  std::vector<VertexSet> out;
  for (auto s : detail::MinimalInfiniteEnumerator(sys, guard).run()) out.push_back(sys.to_set(s));
  return out;
}

/// Smallest (size, then lexicographic) irreducible affine subset of rank >= min_rank.
inline std::optional<EuclideanSubdiagramWitness> find_euclidean_subdiagram(const CoxeterMatrix& m,
                                                                           std::size_t min_rank = 3,
                                                                           const SearchOptions& opt = {}) {
  detail::check_cap(m.rank(), opt);
  detail::MaskSystem sys(m);
  detail::DeadlineGuard guard(opt);
  auto accept = [&](std::uint64_t s) -> std::optional<EuclideanSubdiagramWitness> {
    if (static_cast<std::size_t>(std::popcount(s)) < min_rank || !sys.connected(s)) return std::nullopt;
    auto c = sys.classify(s);
    if (c.kind != TypeKind::Affine) return std::nullopt;
    return EuclideanSubdiagramWitness{sys.to_set(s), c.name};
  };
  const auto candidates = opt.mode == SearchMode::AllSubsets
                              ? detail::all_subsets_ordered(m.rank())
                              : detail::MinimalInfiniteEnumerator(sys, guard).run();
  for (auto s : candidates) {
    guard.tick();
    if (auto w = accept(s)) return w;
  }
  return std::nullopt;
}

/// Disjoint S1, S2 with every cross pair commuting (m = 2) and both parabolic
/// subgroups infinite. S1 is the smallest (size, then lexicographic) subset
/// that admits a partner and S2 = orth(S1), its full commuting complement.
/// Such an S1 is always a minimal infinite subset, so both modes agree.
inline std::optional<CommutingInfinitePairWitness> find_commuting_infinite_pair(const CoxeterMatrix& m,
                                                                                const SearchOptions& opt = {}) {
  detail::check_cap(m.rank(), opt);
  detail::MaskSystem sys(m);
  detail::DeadlineGuard guard(opt);
  if (opt.mode == SearchMode::AllSubsets) {
    for (auto s : detail::all_subsets_ordered(m.rank())) {
      guard.tick();
      if (sys.finite(s)) continue;
      const auto o = sys.orth(s);
      if (o != 0 && !sys.finite(o)) return CommutingInfinitePairWitness{sys.to_set(s), sys.to_set(o)};
    }
    return std::nullopt;
  }
  for (auto s : detail::MinimalInfiniteEnumerator(sys, guard).run()) {
    guard.tick();
    const auto o = sys.orth(s);
    if (o != 0 && !sys.finite(o)) return CommutingInfinitePairWitness{sys.to_set(s), sys.to_set(o)};
  }
  return std::nullopt;
}

inline bool verify_euclidean(const CoxeterMatrix& m, const EuclideanSubdiagramWitness& w) {
  if (w.subset.universe() != m.rank() || w.subset.size() < 3) return false;
  if (diagram_components(m, w.subset).size() != 1) return false;
  auto c = classify_irreducible(m, w.subset);
  return c.kind == TypeKind::Affine && c.name == w.type_name;
}

inline bool verify_commuting_pair(const CoxeterMatrix& m, const CommutingInfinitePairWitness& w) {
  if (w.first.universe() != m.rank() || w.second.universe() != m.rank()) return false;
  if (w.first.empty() || w.second.empty() || w.first.intersects(w.second)) return false;
  bool commute = true;
  w.first.for_each([&](VertexId a) {
    w.second.for_each([&](VertexId b) { commute = commute && m(a, b) == 2; });
  });
  return commute && !is_finite_system(m, w.first) && !is_finite_system(m, w.second);
}

}  // namespace hypaut
