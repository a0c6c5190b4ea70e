#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hypaut/coxeter.hpp"
#include "hypaut/graph_props.hpp"

namespace hypaut {

enum class Answer { Yes, No, Unknown };

enum class GroupKind { GraphProduct, Coxeter, AutGraphProduct, AutCoxeter };

enum class Property { Hyperbolic, VirtuallyFree, OutFinite, FA, FR };

struct Subject {
  GroupKind group = GroupKind::GraphProduct;
  Property property = Property::Hyperbolic;
  friend bool operator==(const Subject&, const Subject&) = default;
};

/// One step of the reason trace: which criterion was evaluated, the
/// published result it rests on, and what it found.
struct TraceStep {
  std::string criterion;
  std::string reference;
  std::string outcome;
  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

// A parabolic subgroup shown to be infinite: a maximal clique of Γ, or a
// connected component of Γ.
struct InfiniteParabolicWitness {
  enum class Role { MaximalClique, Component };
  VertexSet subset;
  Role role = Role::MaximalClique;
  friend bool operator==(const InfiniteParabolicWitness&, const InfiniteParabolicWitness&) = default;
};

struct ComponentsWitness {
  std::vector<VertexSet> components;
  friend bool operator==(const ComponentsWitness&, const ComponentsWitness&) = default;
};

using Witness = std::variant<C4Witness, ChordlessCycle, SILWitness, EuclideanSubdiagramWitness,
                             CommutingInfinitePairWitness, InfiniteParabolicWitness, ComponentsWitness>;

struct Verdict {
  Answer answer = Answer::Unknown;
  Subject subject;
  std::vector<TraceStep> trace;
  std::vector<Witness> witnesses;

  Verdict& step(std::string criterion, std::string reference, std::string outcome) {
    trace.push_back({std::move(criterion), std::move(reference), std::move(outcome)});
    return *this;
  }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

inline Verdict verdict_for(GroupKind group, Property property) {
  Verdict v;
  v.subject = {group, property};
  return v;
}

inline std::string_view to_string(Answer a) {
  switch (a) {
    case Answer::Yes:
      return "yes";
    case Answer::No:
      return "no";
    case Answer::Unknown:
      return "unknown";
  }
  return "?";
}

inline std::string_view to_string(GroupKind g) {
  switch (g) {
    case GroupKind::GraphProduct:
      return "graph-product";
    case GroupKind::Coxeter:
      return "coxeter";
    case GroupKind::AutGraphProduct:
      return "aut-graph-product";
    case GroupKind::AutCoxeter:
      return "aut-coxeter";
  }
  return "?";
}

inline std::string_view to_string(Property p) {
  switch (p) {
    case Property::Hyperbolic:
      return "hyperbolic";
    case Property::VirtuallyFree:
      return "virtually-free";
    case Property::OutFinite:
      return "out-finite";
    case Property::FA:
      return "fa";
    case Property::FR:
      return "fr";
  }
  return "?";
}

inline std::string_view to_string(InfiniteParabolicWitness::Role r) {
  return r == InfiniteParabolicWitness::Role::MaximalClique ? "maximal-clique" : "component";
}

}  // namespace hypaut
