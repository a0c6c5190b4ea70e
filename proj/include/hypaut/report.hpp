#pragma once

// Report serialization. Witnesses are written with the document's vertex
// names so a report can be checked against its input alone.

#include <cstdint>
#include <cstdio>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hypaut/decisions.hpp"
#include "hypaut/document.hpp"
#include "hypaut/verdict.hpp"

namespace hypaut {

inline constexpr const char* kToolName = "hypaut";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportFormatVersion = 1;

/// FNV-1a, 64 bit, as 16 lowercase hex digits.
inline std::string fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Digest of the canonical serialization, so formatting of the input file
// does not matter.
inline std::string document_digest(const GraphDocument& d) { return "fnv1a64:" + fnv1a64(serialize_document(d)); }

struct Report {
  std::string tool = kToolName;
  std::string version = kToolVersion;
  int format_version = kReportFormatVersion;
  std::string input_digest;
  DocumentKind kind = DocumentKind::GraphProduct;
  Assumptions assumptions;
  std::vector<Verdict> verdicts;
  friend bool operator==(const Report&, const Report&) = default;
};

namespace detail {

inline Json names_of(const std::vector<std::string>& names, const VertexSet& s) {
  Json out = Json::array();
  s.for_each([&](VertexId v) { out.push_back(names.at(v)); });
  return out;
}

inline Json names_of(const std::vector<std::string>& names, std::span<const VertexId> vs) {
  Json out = Json::array();
  for (auto v : vs) out.push_back(names.at(v));
  return out;
}

class NameIndex {
 public:
  explicit NameIndex(const std::vector<std::string>& names) : n_(names.size()) {
    for (VertexId v = 0; v < names.size(); ++v) index_.emplace(names[v], v);
  }
  VertexId id(const Json& j, const std::string& where) const {
    if (!j.is_string()) throw InputError(where + ": expected a vertex name");
    auto it = index_.find(j.get<std::string>());
    if (it == index_.end()) throw InputError(where + ": unknown vertex \"" + j.get<std::string>() + "\"");
    return it->second;
  }
  std::vector<VertexId> ids(const Json& j, const std::string& where) const {
    if (!j.is_array()) throw InputError(where + ": expected an array of vertex names");
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(id(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
  }
  VertexSet set(const Json& j, const std::string& where) const {
    VertexSet s(n_);
    for (auto v : ids(j, where)) s.insert(v);
    return s;
  }

 private:
  std::size_t n_;
  std::map<std::string, VertexId> index_;
};

inline const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(where + "." + key + ": missing field");
  return j[key];
}

template <class E>
E parse_enum(const Json& j, std::initializer_list<E> values, const std::string& where) {
  if (j.is_string()) {
    for (E e : values) {
      if (j.get<std::string>() == to_string(e)) return e;
    }
  }
  throw InputError(where + ": unrecognised value " + j.dump());
}

}  // namespace detail

inline Json witness_to_json(const Witness& w, const std::vector<std::string>& names) {
  using detail::names_of;
  return std::visit(
      [&](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        Json j;
        if constexpr (std::is_same_v<T, C4Witness>) {
          j["type"] = "induced-c4";
          j["cycle"] = names_of(names, x.cycle);
        } else if constexpr (std::is_same_v<T, ChordlessCycle>) {
          j["type"] = "chordless-cycle";
          j["cycle"] = names_of(names, x.cycle);
        } else if constexpr (std::is_same_v<T, SILWitness>) {
          j["type"] = "sil";
          j["v"] = names.at(x.v);
          j["w"] = names.at(x.w);
          j["component"] = names_of(names, x.component);
        } else if constexpr (std::is_same_v<T, EuclideanSubdiagramWitness>) {
          j["type"] = "euclidean-subdiagram";
          j["subset"] = names_of(names, x.subset);
          j["affine_type"] = x.type_name;
        } else if constexpr (std::is_same_v<T, CommutingInfinitePairWitness>) {
          j["type"] = "commuting-infinite-pair";
          j["first"] = names_of(names, x.first);
          j["second"] = names_of(names, x.second);
        } else if constexpr (std::is_same_v<T, InfiniteParabolicWitness>) {
          j["type"] = "infinite-parabolic";
          j["role"] = std::string(to_string(x.role));
          j["subset"] = names_of(names, x.subset);
        } else {
          j["type"] = "components";
          Json cs = Json::array();
          for (const auto& c : x.components) cs.push_back(names_of(names, c));
          j["components"] = std::move(cs);
        }
        return j;
      },
      w);
}

inline Witness witness_from_json(const Json& j, const std::vector<std::string>& names, const std::string& where) {
  using detail::field;
  const detail::NameIndex idx(names);
  const Json& type = field(j, "type", where);
  const std::string t = type.is_string() ? type.get<std::string>() : "";
  if (t == "induced-c4") {
    auto ids = idx.ids(field(j, "cycle", where), where + ".cycle");
    if (ids.size() != 4) throw InputError(where + ".cycle: expected 4 vertices");
    C4Witness w;
    std::copy(ids.begin(), ids.end(), w.cycle.begin());
    return w;
  }
  if (t == "chordless-cycle") return ChordlessCycle{idx.ids(field(j, "cycle", where), where + ".cycle")};
  if (t == "sil") {
    return SILWitness{idx.id(field(j, "v", where), where + ".v"), idx.id(field(j, "w", where), where + ".w"),
                      idx.set(field(j, "component", where), where + ".component")};
  }
  if (t == "euclidean-subdiagram") {
    const Json& at = field(j, "affine_type", where);
    if (!at.is_string()) throw InputError(where + ".affine_type: expected a string");
    return EuclideanSubdiagramWitness{idx.set(field(j, "subset", where), where + ".subset"), at.get<std::string>()};
  }
  if (t == "commuting-infinite-pair") {
    return CommutingInfinitePairWitness{idx.set(field(j, "first", where), where + ".first"),
                                        idx.set(field(j, "second", where), where + ".second")};
  }
  if (t == "infinite-parabolic") {
    using Role = InfiniteParabolicWitness::Role;
    const Role role = detail::parse_enum(field(j, "role", where), {Role::MaximalClique, Role::Component}, where + ".role");
    return InfiniteParabolicWitness{idx.set(field(j, "subset", where), where + ".subset"), role};
  }
  if (t == "components") {
    const Json& cs = field(j, "components", where);
    if (!cs.is_array()) throw InputError(where + ".components: expected an array");
    ComponentsWitness w;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      w.components.push_back(idx.set(cs[i], where + ".components[" + std::to_string(i) + "]"));
    }
    return w;
  }
  throw InputError(where + ".type: unknown witness type " + type.dump());
}

inline Json verdict_to_json(const Verdict& v, const std::vector<std::string>& names) {
  Json j;
  j["group"] = std::string(to_string(v.subject.group));
  j["property"] = std::string(to_string(v.subject.property));
  j["answer"] = std::string(to_string(v.answer));
  Json trace = Json::array();
  for (const auto& s : v.trace) {
    trace.push_back(Json{{"criterion", s.criterion}, {"reference", s.reference}, {"outcome", s.outcome}});
  }
  j["trace"] = std::move(trace);
  Json ws = Json::array();
  for (const auto& w : v.witnesses) ws.push_back(witness_to_json(w, names));
  j["witnesses"] = std::move(ws);
  return j;
}

inline Verdict verdict_from_json(const Json& j, const std::vector<std::string>& names, const std::string& where) {
  using detail::field;
  Verdict v;
  v.subject.group = detail::parse_enum(
      field(j, "group", where),
      {GroupKind::GraphProduct, GroupKind::Coxeter, GroupKind::AutGraphProduct, GroupKind::AutCoxeter},
      where + ".group");
  v.subject.property = detail::parse_enum(
      field(j, "property", where),
      {Property::Hyperbolic, Property::VirtuallyFree, Property::OutFinite, Property::FA, Property::FR},
      where + ".property");
  v.answer = detail::parse_enum(field(j, "answer", where), {Answer::Yes, Answer::No, Answer::Unknown}, where + ".answer");
  const Json& trace = field(j, "trace", where);
  if (!trace.is_array()) throw InputError(where + ".trace: expected an array");
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const std::string w = where + ".trace[" + std::to_string(i) + "]";
    auto str = [&](const char* key) {
      const Json& f = field(trace[i], key, w);
      if (!f.is_string()) throw InputError(w + "." + key + ": expected a string");
      return f.get<std::string>();
    };
    v.trace.push_back({str("criterion"), str("reference"), str("outcome")});
  }
  const Json& ws = field(j, "witnesses", where);
  if (!ws.is_array()) throw InputError(where + ".witnesses: expected an array");
  for (std::size_t i = 0; i < ws.size(); ++i) {
    v.witnesses.push_back(witness_from_json(ws[i], names, where + ".witnesses[" + std::to_string(i) + "]"));
  }
  return v;
}

inline Json report_to_json(const Report& r, const std::vector<std::string>& names) {
  Json j;
  j["tool"] = r.tool;
  j["version"] = r.version;
  j["format_version"] = r.format_version;
  j["input_digest"] = r.input_digest;
  j["kind"] = std::string(to_string(r.kind));
  Json a = Json::object();
  if (r.assumptions.out_w_finite) a["out_w_finite"] = *r.assumptions.out_w_finite;
  j["assumptions"] = std::move(a);
  Json vs = Json::array();
  for (const auto& v : r.verdicts) vs.push_back(verdict_to_json(v, names));
  j["verdicts"] = std::move(vs);
  return j;
}

inline Report report_from_json(const Json& j, const std::vector<std::string>& names) {
  using detail::field;
  Report r;
  auto str = [&](const char* key) {
    const Json& f = field(j, key, "report");
    if (!f.is_string()) throw InputError(std::string("report.") + key + ": expected a string");
    return f.get<std::string>();
  };
  r.tool = str("tool");
  r.version = str("version");
  const Json& fv = field(j, "format_version", "report");
  if (!fv.is_number_integer() || fv.get<int>() != kReportFormatVersion) {
    throw InputError("report.format_version: unsupported version " + fv.dump());
  }
  r.input_digest = str("input_digest");
  r.kind = parse_kind(str("kind"), "report.kind");
  const Json& a = field(j, "assumptions", "report");
  if (a.contains("out_w_finite")) {
    if (!a["out_w_finite"].is_boolean()) throw InputError("report.assumptions.out_w_finite: expected a boolean");
    r.assumptions.out_w_finite = a["out_w_finite"].get<bool>();
  }
  const Json& vs = field(j, "verdicts", "report");
  if (!vs.is_array()) throw InputError("report.verdicts: expected an array");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    r.verdicts.push_back(verdict_from_json(vs[i], names, "report.verdicts[" + std::to_string(i) + "]"));
  }
  return r;
}

inline std::string serialize_report(const Report& r, const std::vector<std::string>& names) {
  return report_to_json(r, names).dump(2) + "\n";
}

inline Report parse_report(const std::string& text, const std::vector<std::string>& names) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed report JSON: ") + e.what());
  }
  return report_from_json(j, names);
}

}  // namespace hypaut
