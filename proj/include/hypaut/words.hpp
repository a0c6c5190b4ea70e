#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "hypaut/graph_product.hpp"
#include "hypaut/graph_props.hpp"

namespace hypaut {

// ---------------------------------------------------------------------------
// Words in a graph product of finite cyclic groups Z/order(v)
// ---------------------------------------------------------------------------

struct Syllable {
  VertexId vertex = 0;
  std::uint32_t exponent = 1;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

struct GroupWord {
  std::vector<Syllable> syllables;

  std::size_t length() const { return syllables.size(); }
  bool empty() const { return syllables.empty(); }

  static GroupWord generator(VertexId v, std::uint32_t exponent = 1) { return GroupWord{{{v, exponent}}}; }

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
};

namespace detail {

inline void check_word(const GraphProductSpec& spec, const GroupWord& w) {
  for (const auto& s : w.syllables) {
    spec.graph().check_vertex(s.vertex);
    if (s.exponent >= spec.order(s.vertex)) {
      throw InputError("exponent " + std::to_string(s.exponent) + " out of range for vertex " +
                       spec.graph().name(s.vertex) + " of order " + std::to_string(spec.order(s.vertex)));
    }
  }
}

// Appends one syllable to a reduced word: it merges with the last syllable of
// the same vertex if everything after that one commutes with it.
inline void push_reduced(const GraphProductSpec& spec, std::vector<Syllable>& word, Syllable s) {
  const std::uint32_t ord = spec.order(s.vertex);
  s.exponent %= ord;
  if (s.exponent == 0) return;
  const auto& g = spec.graph();
  for (std::size_t i = word.size(); i-- > 0;) {
    const VertexId u = word[i].vertex;
    if (u == s.vertex) {
      word[i].exponent = (word[i].exponent + s.exponent) % ord;
      if (word[i].exponent == 0) word.erase(word.begin() + static_cast<std::ptrdiff_t>(i));
      return;
    }
    if (!g.adjacent(u, s.vertex)) break;
  }
  word.push_back(s);
}

// Least linearisation of the dependency order under vertex id: repeatedly
// emit the smallest vertex whose syllable can be shuffled to the front.
inline std::vector<Syllable> canonical_shuffle(const GraphProductSpec& spec, const std::vector<Syllable>& word) {
  const auto& g = spec.graph();
  const std::size_t len = word.size();
  const std::size_t n = g.order();
  std::vector<std::vector<std::size_t>> succ(len);
  std::vector<std::size_t> indegree(len, 0);
  std::vector<std::optional<std::size_t>> last(n);
  for (std::size_t j = 0; j < len; ++j) {
    const VertexId v = word[j].vertex;
    for (VertexId u = 0; u < n; ++u) {
      if (!last[u] || (u != v && g.adjacent(u, v))) continue;
      succ[*last[u]].push_back(j);
      ++indegree[j];
    }
    last[v] = j;
  }
  using Entry = std::pair<VertexId, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
  for (std::size_t j = 0; j < len; ++j) {
    if (indegree[j] == 0) ready.push({word[j].vertex, j});
  }
  std::vector<Syllable> out;
  out.reserve(len);
  while (!ready.empty()) {
    const auto [v, j] = ready.top();
    ready.pop();
    out.push_back(word[j]);
    for (auto k : succ[j]) {
      if (--indegree[k] == 0) ready.push({word[k].vertex, k});
    }
  }
  return out;
}

inline GroupWord normalize_unchecked(const GraphProductSpec& spec, const std::vector<Syllable>& raw) {
  std::vector<Syllable> reduced;
  reduced.reserve(raw.size());
  for (const auto& s : raw) push_reduced(spec, reduced, s);
  return GroupWord{canonical_shuffle(spec, reduced)};
}

}  // namespace detail

/// Canonical representative: fully reduced (no two syllables of one vertex
/// separated only by commuting syllables), then the least shuffle under the
/// vertex order. Exponents must lie in [0, order); zero syllables are dropped.
inline GroupWord normal_form(const GraphProductSpec& spec, const GroupWord& w) {
  detail::check_word(spec, w);
  return detail::normalize_unchecked(spec, w.syllables);
}

inline GroupWord multiply(const GraphProductSpec& spec, const GroupWord& a, const GroupWord& b) {
  detail::check_word(spec, a);
  detail::check_word(spec, b);
  std::vector<Syllable> raw = a.syllables;
  raw.insert(raw.end(), b.syllables.begin(), b.syllables.end());
  return detail::normalize_unchecked(spec, raw);
}

inline GroupWord invert(const GraphProductSpec& spec, const GroupWord& w) {
  detail::check_word(spec, w);
  std::vector<Syllable> raw;
  raw.reserve(w.length());
  for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it) {
    raw.push_back({it->vertex, (spec.order(it->vertex) - it->exponent) % spec.order(it->vertex)});
  }
  return detail::normalize_unchecked(spec, raw);
}

// ---------------------------------------------------------------------------
// Automorphisms, given by the images of the standard generators g_v
// ---------------------------------------------------------------------------

class Automorphism {
 public:
  /// Throws InputError unless the images satisfy every defining relation:
  /// image(g_v)^order(v) = 1, and images of adjacent generators commute.
  Automorphism(const GraphProductSpec& spec, std::vector<GroupWord> images) : images_(std::move(images)) {
    const auto& g = spec.graph();
    if (images_.size() != g.order()) throw InputError("automorphism needs one image per generator");
    for (auto& img : images_) img = normal_form(spec, img);
    for (VertexId v = 0; v < g.order(); ++v) {
      GroupWord p;
      for (std::uint32_t i = 0; i < spec.order(v); ++i) p = multiply(spec, p, images_[v]);
      if (!p.empty()) {
        throw InputError("image of generator " + g.name(v) + " does not have order dividing " +
                         std::to_string(spec.order(v)));
      }
    }
    for (const auto& e : g.edges()) {
      if (multiply(spec, images_[e.u], images_[e.v]) != multiply(spec, images_[e.v], images_[e.u])) {
        throw InputError("images of adjacent generators " + g.name(e.u) + " and " + g.name(e.v) +
                         " do not commute");
      }
    }
  }

  static Automorphism identity(const GraphProductSpec& spec) {
    std::vector<GroupWord> images;
    for (VertexId v = 0; v < spec.graph().order(); ++v) images.push_back(GroupWord::generator(v));
    return Automorphism(spec, std::move(images));
  }

  const GroupWord& image(VertexId v) const { return images_.at(v); }
  const std::vector<GroupWord>& images() const { return images_; }

 private:
  struct Trusted {};
  Automorphism(Trusted, std::vector<GroupWord> images) : images_(std::move(images)) {}

  friend Automorphism compose(const GraphProductSpec&, const Automorphism&, const Automorphism&);

  std::vector<GroupWord> images_;
};

/// Homomorphic extension of f's generator images to w.
inline GroupWord apply(const GraphProductSpec& spec, const Automorphism& f, const GroupWord& w) {
  detail::check_word(spec, w);
  std::vector<Syllable> raw;
  for (const auto& s : w.syllables) {
    const auto& img = f.image(s.vertex).syllables;
    for (std::uint32_t i = 0; i < s.exponent; ++i) raw.insert(raw.end(), img.begin(), img.end());
  }
  return detail::normalize_unchecked(spec, raw);
}

/// f ∘ g: apply g first.
inline Automorphism compose(const GraphProductSpec& spec, const Automorphism& f, const Automorphism& g) {
  std::vector<GroupWord> images;
  images.reserve(g.images().size());
  for (const auto& img : g.images()) images.push_back(apply(spec, f, img));
  // Composites of relation-respecting maps respect the relations.
  return Automorphism(Automorphism::Trusted{}, std::move(images));
}

// Generators generate, so this decides equality.
inline bool equal_on_generators(const Automorphism& f, const Automorphism& g) { return f.images() == g.images(); }

/// Conjugation g ↦ x g x⁻¹ on the vertex groups of `component` (a connected
/// component of Γ − st(v)), identity elsewhere; x = g_v^exponent.
inline Automorphism partial_conjugation(const GraphProductSpec& spec, VertexId v, std::uint32_t exponent,
                                        const VertexSet& component) {
  const auto& g = spec.graph();
  g.check_vertex(v);
  g.check_subset(component);
  if (exponent == 0 || exponent >= spec.order(v)) {
    throw InputError("partial conjugation needs a non-trivial element of the vertex group of " + g.name(v));
  }
  const auto comps = components_within(g, g.vertices() - star(g, v));
  if (std::find(comps.begin(), comps.end(), component) == comps.end()) {
    throw InputError("vertex set is not a connected component of Γ − st(" + g.name(v) + ")");
  }
  const GroupWord x = GroupWord::generator(v, exponent);
  const GroupWord x_inv = invert(spec, x);
  std::vector<GroupWord> images;
  for (VertexId w = 0; w < g.order(); ++w) {
    GroupWord gen = GroupWord::generator(w);
    images.push_back(component.contains(w) ? multiply(spec, multiply(spec, x, gen), x_inv) : gen);
  }
  return Automorphism(spec, std::move(images));
}

/// g' ↦ h g' h⁻¹ for every generator.
inline Automorphism inner(const GraphProductSpec& spec, const GroupWord& h) {
  const GroupWord hn = normal_form(spec, h);
  const GroupWord h_inv = invert(spec, hn);
  std::vector<GroupWord> images;
  for (VertexId w = 0; w < spec.graph().order(); ++w) {
    images.push_back(multiply(spec, multiply(spec, hn, GroupWord::generator(w)), h_inv));
  }
  return Automorphism(spec, std::move(images));
}

// ---------------------------------------------------------------------------
// SIL ⟹ Z×Z in Aut(G_Γ)
// ---------------------------------------------------------------------------

struct ZZReport {
  bool commute = false;              // f ∘ α = α ∘ f on every generator
  bool growth = false;               // |α^k(g_u)| strictly increasing, >= 4k − 1
  bool f_nontrivial = false;         // f^k ≠ id for k = 1..K
  VertexId probe = 0;                // u
  std::vector<std::size_t> lengths;  // |α^k(g_u)| for k = 1..K
  std::size_t iterations = 0;        // K
  // Growth up to K is evidence of infinite order, not a proof.
  std::string note = "infinite order evidenced by growth up to K, not proved";

  bool passed() const { return commute && growth && f_nontrivial; }
};

namespace detail {

// Product of the partial conjugations by x = g_v on the components of
// Γ − st(v) contained in `part`; `part` must be a union of such components.
inline Automorphism conjugate_part(const GraphProductSpec& spec, VertexId v, const VertexSet& part) {
  const auto& g = spec.graph();
  Automorphism out = Automorphism::identity(spec);
  VertexSet covered(g.order());
  for (const auto& comp : components_within(g, g.vertices() - star(g, v))) {
    if (!comp.intersects(part)) continue;
    if (!comp.is_subset_of(part)) {
      throw InputError("vertex set is not a union of components of Γ − st(" + g.name(v) + ")");
    }
    out = compose(spec, partial_conjugation(spec, v, 1, comp), out);
    covered |= comp;
  }
  if (covered != part) throw InputError("vertex set meets st(" + g.name(v) + ")");
  return out;
}

}  // namespace detail

/// Builds α = π_{x,C} ∘ π_{y,C} and f = inner(x·y) for the standard
/// generators x = g_v, y = g_w of the SIL pair, and checks that they commute
/// and both have (evidently) infinite order.
///
/// The SIL component C avoids lk(v) ∪ lk(w) (an edge into it would pull v or
/// w into the component), so it is a union of components of Γ − st(v) and of
/// Γ − st(w); π_{x,C} is the product of the partial conjugations on those.
inline ZZReport zz_witness_verify(const GraphProductSpec& spec, const SILWitness& sil, std::size_t iterations) {
  if (iterations < 1) throw InputError("iteration count K must be >= 1");
  if (!verify_sil(spec.graph(), sil)) throw InputError("not a valid SIL witness");

  const Automorphism pi_x = detail::conjugate_part(spec, sil.v, sil.component);
  const Automorphism pi_y = detail::conjugate_part(spec, sil.w, sil.component);
  const Automorphism alpha = compose(spec, pi_x, pi_y);
  const Automorphism f =
      inner(spec, multiply(spec, GroupWord::generator(sil.v), GroupWord::generator(sil.w)));

  ZZReport r;
  r.iterations = iterations;
  r.probe = *sil.component.first();
  r.commute = equal_on_generators(compose(spec, f, alpha), compose(spec, alpha, f));

  r.growth = true;
  GroupWord cur = GroupWord::generator(r.probe);
  for (std::size_t k = 1; k <= iterations; ++k) {
    cur = apply(spec, alpha, cur);
    r.lengths.push_back(cur.length());
    if (cur.length() + 1 < 4 * k) r.growth = false;
    if (k > 1 && r.lengths[k - 1] <= r.lengths[k - 2]) r.growth = false;
  }

  r.f_nontrivial = true;
  const Automorphism id = Automorphism::identity(spec);
  Automorphism fk = f;
  for (std::size_t k = 1; k <= iterations; ++k) {
    if (equal_on_generators(fk, id)) {
      r.f_nontrivial = false;
      break;
    }
    if (k < iterations) fk = compose(spec, f, fk);
  }
  return r;
}

}  // namespace hypaut
