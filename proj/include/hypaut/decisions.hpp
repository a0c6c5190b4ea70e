#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypaut/coxeter.hpp"
#include "hypaut/graph_product.hpp"
#include "hypaut/graph_props.hpp"
#include "hypaut/verdict.hpp"

namespace hypaut {

/// Externally supplied facts that no criterion here can decide.
struct Assumptions {
  std::optional<bool> out_w_finite;  // finiteness of Out(W_Γ)
  friend bool operator==(const Assumptions&, const Assumptions&) = default;
};

struct FreeFactor {
  bool finite = true;
  bool center_finite = true;
};

// Published results each trace step rests on.
namespace refs {
inline constexpr const char* kMeier = "Meier: a graph product of finite groups is hyperbolic iff Γ has no induced 4-cycle";
inline constexpr const char* kLohreySenizergues =
    "Lohrey-Senizergues: a graph product of finite groups is virtually free iff Γ is chordal";
inline constexpr const char* kGenevois = "Genevois: Out of a graph product of finite groups is finite iff Γ has no SIL";
inline constexpr const char* kAutGpHyperbolic =
    "Aut of a graph product of finite groups is hyperbolic iff Γ has no induced 4-cycle and no SIL";
inline constexpr const char* kAutGpVirtuallyFree =
    "Aut of a graph product of finite groups is virtually free iff Γ is chordal and has no SIL";
inline constexpr const char* kInfiniteVirtuallyFreeNoFA =
    "Dicks-Dunwoody: an infinite finitely generated virtually free group does not have FA";
inline constexpr const char* kFiniteHasFA = "a finite group has FA (complete Γ gives a finite group)";
inline constexpr const char* kFRComplete = "graph products of finite groups and Coxeter groups have FR iff Γ is complete";
inline constexpr const char* kMoussong =
    "Moussong: W is hyperbolic iff no affine parabolic of rank >= 3 and no commuting pair of infinite parabolics";
inline constexpr const char* kMihalikTschantz =
    "Mihalik-Tschantz: W is virtually free iff Γ is chordal and every clique parabolic is finite";
inline constexpr const char* kHowlett = "Howlett: Out(W) is finite when Γ is complete";
inline constexpr const char* kAutInheritsZZ =
    "W not hyperbolic implies Aut(W) not hyperbolic (Z(W) finite, Inn(W) ≅ W/Z(W) inherits Z×Z)";
inline constexpr const char* kThreeFactors = "free product of >= 3 groups: Aut contains Z×Z, not hyperbolic";
inline constexpr const char* kTwoFactors =
    "free product of two groups with finite centers: Aut hyperbolic iff both factors finite";
inline constexpr const char* kFiniteOutAndCenter =
    "G hyperbolic with Z(G) and Out(G) finite implies Aut(G) hyperbolic";
inline constexpr const char* kPettet = "Pettet: for virtually free G, Aut(G) is virtually free iff Out(G) is finite";
inline constexpr const char* kAssumption = "user-asserted fact";
}  // namespace refs

// ---------------------------------------------------------------------------
// Graph products of finite groups
// ---------------------------------------------------------------------------

inline Verdict gp_hyperbolic(const GraphProductSpec& spec) {
  Verdict v = verdict_for(GroupKind::GraphProduct, Property::Hyperbolic);
  if (auto c4 = find_induced_c4(spec.graph())) {
    v.step("induced 4-cycle", refs::kMeier, "found");
    v.witnesses.push_back(*c4);
    v.answer = Answer::No;
  } else {
    v.step("induced 4-cycle", refs::kMeier, "absent");
    v.answer = Answer::Yes;
  }
  return v;
}

inline Verdict gp_virtually_free(const GraphProductSpec& spec) {
  Verdict v = verdict_for(GroupKind::GraphProduct, Property::VirtuallyFree);
  auto cert = chordality(spec.graph());
  if (auto* cycle = std::get_if<ChordlessCycle>(&cert)) {
    v.step("chordal", refs::kLohreySenizergues, "no: chordless cycle of length " + std::to_string(cycle->cycle.size()));
    v.witnesses.push_back(*cycle);
    v.answer = Answer::No;
  } else {
    v.step("chordal", refs::kLohreySenizergues, "yes: perfect elimination ordering");
    v.answer = Answer::Yes;
  }
  return v;
}

inline Verdict gp_out_finite(const GraphProductSpec& spec) {
  Verdict v = verdict_for(GroupKind::GraphProduct, Property::OutFinite);
  if (auto sil = find_sil(spec.graph())) {
    v.step("separating intersection of links", refs::kGenevois, "found");
    v.witnesses.push_back(*sil);
    v.answer = Answer::No;
  } else {
    v.step("separating intersection of links", refs::kGenevois, "absent");
    v.answer = Answer::Yes;
  }
  return v;
}

inline Verdict aut_gp_hyperbolic(const GraphProductSpec& spec) {
  Verdict v = verdict_for(GroupKind::AutGraphProduct, Property::Hyperbolic);
  auto c4 = find_induced_c4(spec.graph());
  auto sil = find_sil(spec.graph());
  v.step("induced 4-cycle", refs::kAutGpHyperbolic, c4 ? "found" : "absent");
  v.step("separating intersection of links", refs::kAutGpHyperbolic, sil ? "found" : "absent");
  if (c4) v.witnesses.push_back(*c4);
  if (sil) v.witnesses.push_back(*sil);
  v.answer = (c4 || sil) ? Answer::No : Answer::Yes;
  return v;
}

inline Verdict aut_gp_virtually_free(const GraphProductSpec& spec) {
  Verdict v = verdict_for(GroupKind::AutGraphProduct, Property::VirtuallyFree);
  auto cert = chordality(spec.graph());
  auto sil = find_sil(spec.graph());
  const auto* cycle = std::get_if<ChordlessCycle>(&cert);
  v.step("chordal", refs::kAutGpVirtuallyFree, cycle ? "no" : "yes");
  v.step("separating intersection of links", refs::kAutGpVirtuallyFree, sil ? "found" : "absent");
  if (cycle) v.witnesses.push_back(*cycle);
  if (sil) v.witnesses.push_back(*sil);
  v.answer = (cycle || sil) ? Answer::No : Answer::Yes;
  return v;
}

/// Three-valued: No for non-complete chordal graphs without SIL (Aut is then
/// infinite virtually free), Yes for complete graphs (finite group, finite
/// Aut), Unknown otherwise.
inline Verdict aut_gp_has_FA(const GraphProductSpec& spec) {
  Verdict v = verdict_for(GroupKind::AutGraphProduct, Property::FA);
  const auto& g = spec.graph();
  if (is_complete(g)) {
    v.step("Γ complete", refs::kFiniteHasFA, "yes: G_Γ and Aut(G_Γ) are finite (triviality)");
    v.answer = Answer::Yes;
    return v;
  }
  v.step("Γ complete", refs::kFiniteHasFA, "no");
  const bool chordal = is_chordal(chordality(g));
  const bool sil = find_sil(g).has_value();
  v.step("chordal", refs::kAutGpVirtuallyFree, chordal ? "yes" : "no");
  v.step("separating intersection of links", refs::kAutGpVirtuallyFree, sil ? "found" : "absent");
  if (chordal && !sil) {
    v.step("Aut(G_Γ) infinite and virtually free", refs::kInfiniteVirtuallyFreeNoFA, "no FA");
    v.answer = Answer::No;
  } else {
    v.step("hypotheses of the FA criterion", refs::kInfiniteVirtuallyFreeNoFA,
           "unmet: Γ must be non-complete, chordal and SIL-free; no converse is known");
    v.answer = Answer::Unknown;
  }
  return v;
}

inline Verdict gp_has_FR(const GraphProductSpec& spec) {
  Verdict v = verdict_for(GroupKind::GraphProduct, Property::FR);
  const bool complete = is_complete(spec.graph());
  v.step("Γ complete", refs::kFRComplete, complete ? "yes" : "no");
  v.answer = complete ? Answer::Yes : Answer::No;
  return v;
}

// ---------------------------------------------------------------------------
// Coxeter groups
// ---------------------------------------------------------------------------

inline Verdict coxeter_has_FR(const CoxeterPresentationGraph& cg) {
  Verdict v = verdict_for(GroupKind::Coxeter, Property::FR);
  const bool complete = is_complete(cg.graph());
  v.step("Γ complete", refs::kFRComplete, complete ? "yes" : "no");
  v.answer = complete ? Answer::Yes : Answer::No;
  return v;
}

inline Verdict coxeter_out_finite_partial(const CoxeterPresentationGraph& cg) {
  Verdict v = verdict_for(GroupKind::Coxeter, Property::OutFinite);
  if (is_complete(cg.graph())) {
    v.step("Γ complete", refs::kHowlett, "yes: Out(W) finite");
    v.answer = Answer::Yes;
  } else {
    v.step("Γ complete", refs::kHowlett, "no: no available criterion decides Out(W)");
    v.answer = Answer::Unknown;
  }
  return v;
}

inline Verdict moussong_hyperbolic(const CoxeterPresentationGraph& cg, const SearchOptions& opt = {}) {
  Verdict v = verdict_for(GroupKind::Coxeter, Property::Hyperbolic);
  const auto m = coxeter_matrix(cg);
  auto euclid = find_euclidean_subdiagram(m, 3, opt);
  auto pair = find_commuting_infinite_pair(m, opt);
  v.step("affine parabolic of rank >= 3", refs::kMoussong, euclid ? "found " + euclid->type_name : "absent");
  v.step("commuting pair of infinite parabolics", refs::kMoussong, pair ? "found" : "absent");
  if (euclid) v.witnesses.push_back(*euclid);
  if (pair) v.witnesses.push_back(*pair);
  v.answer = (euclid || pair) ? Answer::No : Answer::Yes;
  return v;
}

namespace detail {

// Chordality of Γ and finiteness of every maximal-clique parabolic; appends
// trace steps and witnesses for the failing parts.
inline bool chordal_with_finite_cliques(const CoxeterPresentationGraph& cg, Verdict& v, const char* reference) {
  const auto m = coxeter_matrix(cg);
  auto cert = chordality(cg.graph());
  bool ok = true;
  if (auto* cycle = std::get_if<ChordlessCycle>(&cert)) {
    v.step("chordal", reference, "no: chordless cycle of length " + std::to_string(cycle->cycle.size()));
    v.witnesses.push_back(*cycle);
    ok = false;
  } else {
    v.step("chordal", reference, "yes");
  }
  std::optional<VertexSet> bad;
  for (const auto& clique : maximal_cliques(cg.graph())) {
    if (!is_finite_system(m, clique)) {
      bad = clique;
      break;
    }
  }
  if (bad) {
    v.step("maximal-clique parabolics finite", reference, "no");
    v.witnesses.push_back(InfiniteParabolicWitness{*bad, InfiniteParabolicWitness::Role::MaximalClique});
    ok = false;
  } else {
    v.step("maximal-clique parabolics finite", reference, "yes");
  }
  return ok;
}

}  // namespace detail

inline Verdict coxeter_virtually_free(const CoxeterPresentationGraph& cg) {
  Verdict v = verdict_for(GroupKind::Coxeter, Property::VirtuallyFree);
  v.answer = detail::chordal_with_finite_cliques(cg, v, refs::kMihalikTschantz) ? Answer::Yes : Answer::No;
  return v;
}

/// Decision cascade for Aut(W_Γ): Yes/No where a criterion applies, Unknown
/// for a connected hyperbolic W whose Out(W) is undetermined.
inline Verdict aut_coxeter_hyperbolic(const CoxeterPresentationGraph& cg, const Assumptions& a = {},
                                      const SearchOptions& opt = {}) {
  Verdict v = verdict_for(GroupKind::AutCoxeter, Property::Hyperbolic);
  Verdict w = moussong_hyperbolic(cg, opt);
  v.trace = w.trace;
  if (w.answer == Answer::No) {
    v.step("W hyperbolic", refs::kAutInheritsZZ, "no");
    v.witnesses = std::move(w.witnesses);
    v.answer = Answer::No;
    return v;
  }
  v.step("W hyperbolic", refs::kAutInheritsZZ, "yes");

  const auto comps = connected_components(cg.graph());
  if (comps.size() > 2) {
    v.step("connected components of Γ", refs::kThreeFactors, std::to_string(comps.size()) + " > 2");
    v.witnesses.push_back(ComponentsWitness{comps});
    v.answer = Answer::No;
    return v;
  }
  if (comps.size() == 2) {
    v.step("connected components of Γ", refs::kTwoFactors, "2");
    const auto m = coxeter_matrix(cg);
    bool both_finite = true;
    for (const auto& c : comps) {
      const bool fin = is_finite_system(m, c);
      v.step("component parabolic finite", refs::kTwoFactors, fin ? "yes" : "no");
      if (!fin) {
        both_finite = false;
        v.witnesses.push_back(InfiniteParabolicWitness{c, InfiniteParabolicWitness::Role::Component});
      }
    }
    v.answer = both_finite ? Answer::Yes : Answer::No;
    return v;
  }

  v.step("connected components of Γ", refs::kFiniteOutAndCenter, comps.empty() ? "0" : "1");
  Verdict out = coxeter_out_finite_partial(cg);
  v.trace.insert(v.trace.end(), out.trace.begin(), out.trace.end());
  if (out.answer == Answer::Yes) {
    v.step("Out(W) finite", refs::kFiniteOutAndCenter, "yes");
    v.answer = Answer::Yes;
  } else if (a.out_w_finite == true) {
    v.step("Out(W) finite", refs::kAssumption, "asserted");
    v.step("Out(W) finite", refs::kFiniteOutAndCenter, "yes (by assumption)");
    v.answer = Answer::Yes;
  } else {
    v.step("Out(W) finite", refs::kFiniteOutAndCenter,
           "undetermined: hyperbolicity of Aut(W) follows only from finite Out(W)");
    v.answer = Answer::Unknown;
  }
  return v;
}

inline Verdict aut_coxeter_virtually_free(const CoxeterPresentationGraph& cg, const Assumptions& a = {}) {
  Verdict v = verdict_for(GroupKind::AutCoxeter, Property::VirtuallyFree);
  const bool c = detail::chordal_with_finite_cliques(cg, v, refs::kMihalikTschantz);
  Answer o = Answer::Unknown;
  if (is_complete(cg.graph())) {
    v.step("Out(W) finite", refs::kHowlett, "yes");
    o = Answer::Yes;
  } else if (a.out_w_finite) {
    v.step("Out(W) finite", refs::kAssumption, *a.out_w_finite ? "asserted finite" : "asserted infinite");
    o = *a.out_w_finite ? Answer::Yes : Answer::No;
  } else {
    v.step("Out(W) finite", refs::kHowlett, "undetermined");
  }
  if (!c || o == Answer::No) {
    v.answer = Answer::No;
  } else if (o == Answer::Yes) {
    v.answer = Answer::Yes;
  } else {
    v.answer = Answer::Unknown;
  }
  v.step("Aut(W) virtually free", refs::kPettet, std::string(to_string(v.answer)));
  return v;
}

/// Aut of a free product G_1 * ... * G_k given only finiteness data per factor.
inline Verdict free_product_aut_hyperbolic(std::span<const FreeFactor> factors) {
  if (factors.size() < 2) throw InputError("free product needs at least two factors");
  Verdict v = verdict_for(GroupKind::AutGraphProduct, Property::Hyperbolic);
  if (factors.size() >= 3) {
    v.step("number of factors", refs::kThreeFactors, std::to_string(factors.size()));
    v.answer = Answer::No;
    return v;
  }
  v.step("number of factors", refs::kTwoFactors, "2");
  // A finite factor has finite center.
  const bool centers = (factors[0].finite || factors[0].center_finite) && (factors[1].finite || factors[1].center_finite);
  if (!centers) {
    v.step("factor centers finite", refs::kTwoFactors, "no: criterion does not apply");
    v.answer = Answer::Unknown;
    return v;
  }
  const bool finite = factors[0].finite && factors[1].finite;
  v.step("both factors finite", refs::kTwoFactors, finite ? "yes" : "no");
  v.answer = finite ? Answer::Yes : Answer::No;
  return v;
}

// ---------------------------------------------------------------------------
// Witness verification
// ---------------------------------------------------------------------------

inline bool verify_witness(const SimplicialGraph& g, const CoxeterMatrix* m, const Witness& w) {
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, C4Witness>) {
          return verify_c4(g, x);
        } else if constexpr (std::is_same_v<T, ChordlessCycle>) {
          return verify_chordless_cycle(g, x);
        } else if constexpr (std::is_same_v<T, SILWitness>) {
          return verify_sil(g, x);
        } else if constexpr (std::is_same_v<T, EuclideanSubdiagramWitness>) {
          return m != nullptr && verify_euclidean(*m, x);
        } else if constexpr (std::is_same_v<T, CommutingInfinitePairWitness>) {
          return m != nullptr && verify_commuting_pair(*m, x);
        } else if constexpr (std::is_same_v<T, InfiniteParabolicWitness>) {
          if (m == nullptr || x.subset.universe() != g.order() || x.subset.empty()) return false;
          if (is_finite_system(*m, x.subset)) return false;
          if (x.role == InfiniteParabolicWitness::Role::MaximalClique) return is_clique(g, x.subset);
          const auto comps = connected_components(g);
          return std::find(comps.begin(), comps.end(), x.subset) != comps.end();
        } else {
          return x.components == connected_components(g);
        }
      },
      w);
}

}  // namespace hypaut
