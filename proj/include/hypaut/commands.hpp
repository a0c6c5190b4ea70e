#pragma once

// The decide / oracle / census / zz commands. Each returns its output text
// and an exit status; the executable in tools/ only parses flags.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hypaut/decisions.hpp"
#include "hypaut/document.hpp"
#include "hypaut/oracles.hpp"
#include "hypaut/random_models.hpp"
#include "hypaut/report.hpp"
#include "hypaut/words.hpp"

namespace hypaut {

namespace exit_status {
inline constexpr int kDecided = 0;
inline constexpr int kError = 1;
inline constexpr int kUnknown = 2;
}  // namespace exit_status

struct CommandOutput {
  std::string text;
  int exit_code = exit_status::kDecided;
};

/// Splits "a,b , c" into {"a","b","c"}; empty items are dropped.
inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    const auto b = cur.find_first_not_of(" \t");
    if (b != std::string::npos) out.push_back(cur.substr(b, cur.find_last_not_of(" \t") - b + 1));
    cur.clear();
  };
  for (char c : s) {
    if (c == ',') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

// ---------------------------------------------------------------------------
// decide
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& decide_properties(DocumentKind kind) {
  static const std::vector<std::string> gp = {"hyperbolic",     "virtually-free",     "out-finite", "fr",
                                              "aut-hyperbolic", "aut-virtually-free", "aut-fa"};
  static const std::vector<std::string> cox = {"hyperbolic",     "virtually-free",    "out-finite",
                                               "fr",             "aut-hyperbolic",    "aut-virtually-free"};
  return kind == DocumentKind::Coxeter ? cox : gp;
}

struct DecideOptions {
  std::vector<std::string> properties;  // "all" expands to every property of the document kind
  Assumptions assumptions;
  std::optional<double> deadline_seconds;
  bool pattern_mode = false;
};

namespace detail {

inline std::vector<std::string> resolve_properties(DocumentKind kind, const std::vector<std::string>& requested) {
  const auto& known = decide_properties(kind);
  std::vector<std::string> out;
  for (const auto& p : requested) {
    if (p == "all") {
      for (const auto& k : known) {
        if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
      }
      continue;
    }
    if (std::find(known.begin(), known.end(), p) == known.end()) {
      std::string list;
      for (const auto& k : known) list += (list.empty() ? "" : ", ") + k;
      if (p == "aut-fa" && kind == DocumentKind::Coxeter) {
        throw InputError("property \"aut-fa\" is only decided for graph-product documents");
      }
      throw InputError("unknown property \"" + p + "\" for a " + std::string(to_string(kind)) +
                       " document; expected one of: " + list);
    }
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  if (out.empty()) throw InputError("no property requested; pass --property");
  return out;
}

inline Verdict decide_gp(const GraphProductSpec& spec, const std::string& p) {
  if (p == "hyperbolic") return gp_hyperbolic(spec);
  if (p == "virtually-free") return gp_virtually_free(spec);
  if (p == "out-finite") return gp_out_finite(spec);
  if (p == "fr") return gp_has_FR(spec);
  if (p == "aut-hyperbolic") return aut_gp_hyperbolic(spec);
  if (p == "aut-virtually-free") return aut_gp_virtually_free(spec);
  return aut_gp_has_FA(spec);
}

inline Verdict decide_coxeter(const CoxeterPresentationGraph& cg, const std::string& p, const Assumptions& a,
                              const SearchOptions& opt) {
  if (p == "hyperbolic") return moussong_hyperbolic(cg, opt);
  if (p == "virtually-free") return coxeter_virtually_free(cg);
  if (p == "out-finite") return coxeter_out_finite_partial(cg);
  if (p == "fr") return coxeter_has_FR(cg);
  if (p == "aut-hyperbolic") return aut_coxeter_hyperbolic(cg, a, opt);
  return aut_coxeter_virtually_free(cg, a);
}

}  // namespace detail

inline Report decide(const GraphDocument& doc, const DecideOptions& o) {
  const auto props = detail::resolve_properties(doc.kind, o.properties);
  SearchOptions opt;
  opt.pattern_mode = o.pattern_mode;
  if (o.deadline_seconds) {
    if (!(*o.deadline_seconds > 0)) throw InputError("--deadline must be a positive number of seconds");
    opt.deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(*o.deadline_seconds));
  }

  Report r;
  r.input_digest = document_digest(doc);
  r.kind = doc.kind;
  r.assumptions = o.assumptions;
  try {
    if (doc.kind == DocumentKind::Coxeter) {
      const auto cg = doc.coxeter();
      for (const auto& p : props) r.verdicts.push_back(detail::decide_coxeter(cg, p, o.assumptions, opt));
    } else {
      const auto spec = doc.graph_product();
      for (const auto& p : props) r.verdicts.push_back(detail::decide_gp(spec, p));
    }
  } catch (const DeadlineExceeded&) {
    std::ostringstream s;
    s << "deadline of " << *o.deadline_seconds << " s exceeded; raise --deadline";
    throw ResourceError(s.str());
  }
  return r;
}

inline int exit_code_for(const Report& r) {
  for (const auto& v : r.verdicts) {
    if (v.answer == Answer::Unknown) return exit_status::kUnknown;
  }
  return exit_status::kDecided;
}

inline CommandOutput decide_command(const GraphDocument& doc, const DecideOptions& o) {
  const Report r = decide(doc, o);
  return {serialize_report(r, doc.vertices), exit_code_for(r)};
}

// ---------------------------------------------------------------------------
// oracle: fast path against the definitional brute force
// ---------------------------------------------------------------------------

inline constexpr std::size_t kDefaultOracleCap = 12;
inline constexpr std::size_t kMaxOracleCap = 24;

struct OracleOptions {
  std::vector<std::string> properties;
  std::size_t max_vertices = kDefaultOracleCap;
};

struct OracleCheck {
  std::string property;
  std::string fast;
  std::string oracle;
  bool agree = false;
};

inline const std::vector<std::string>& oracle_properties(DocumentKind kind) {
  static const std::vector<std::string> gp = {"sil", "chordal", "c4", "cliques"};
  static const std::vector<std::string> cox = {"sil", "chordal", "c4", "cliques", "euclidean", "commuting-pair"};
  return kind == DocumentKind::Coxeter ? cox : gp;
}

namespace detail {

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

// Finiteness of every parabolic W_S from the Gram matrix alone (W_S is
// finite iff its Gram matrix is positive definite).
inline std::vector<bool> gram_finite_table(const CoxeterMatrix& m) {
  const std::size_t n = m.rank();
  std::vector<bool> finite(std::size_t{1} << n);
  for (std::uint64_t s = 0; s < finite.size(); ++s) {
    VertexSet set(n);
    for (VertexId v = 0; v < n; ++v) {
      if ((s >> v) & 1) set.insert(v);
    }
    finite[s] = s == 0 || gram_signature(gram_matrix(m, set)).kind == SignatureKind::PositiveDefinite;
  }
  return finite;
}

inline OracleCheck oracle_check(const GraphDocument& doc, const std::string& p) {
  const auto g = doc.graph();
  OracleCheck c{p, "", "", false};
  if (p == "sil") {
    const auto w = find_sil(g);
    const bool ok = !w || verify_sil(g, *w);
    const bool brute = oracle::has_sil(g);
    c.fast = std::string(yes_no(w.has_value())) + (ok ? "" : " (witness rejected)");
    c.oracle = yes_no(brute);
    c.agree = ok && w.has_value() == brute;
  } else if (p == "chordal") {
    const auto cert = chordality(g);
    const bool ok = verify_certificate(g, cert);
    const bool brute = !oracle::has_chordless_cycle(g);
    c.fast = std::string(yes_no(is_chordal(cert))) + (ok ? "" : " (certificate rejected)");
    c.oracle = yes_no(brute);
    c.agree = ok && is_chordal(cert) == brute;
  } else if (p == "c4") {
    const auto w = find_induced_c4(g);
    const bool ok = !w || verify_c4(g, *w);
    const bool brute = oracle::has_induced_c4(g);
    c.fast = std::string(yes_no(w.has_value())) + (ok ? "" : " (witness rejected)");
    c.oracle = yes_no(brute);
    c.agree = ok && w.has_value() == brute;
  } else if (p == "cliques") {
    auto fast = maximal_cliques(g);
    auto brute = oracle::maximal_cliques(g);
    std::sort(fast.begin(), fast.end(), lex_less);
    std::sort(brute.begin(), brute.end(), lex_less);
    c.fast = std::to_string(fast.size()) + " maximal cliques";
    c.oracle = std::to_string(brute.size()) + " maximal cliques";
    c.agree = fast == brute;
  } else {
    const auto m = coxeter_matrix(doc.coxeter());
    const std::size_t n = m.rank();
    SearchOptions opt;
    opt.max_vertices = n;
    if (p == "euclidean") {
      // Irreducible, rank >= 3, Gram positive semidefinite with nullity 1.
      const auto w = find_euclidean_subdiagram(m, 3, opt);
      const bool ok = !w || verify_euclidean(m, *w);
      bool brute = false;
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << n) && !brute; ++s) {
        if (std::popcount(s) < 3) continue;
        VertexSet set(n);
        for (VertexId v = 0; v < n; ++v) {
          if ((s >> v) & 1) set.insert(v);
        }
        if (diagram_components(m, set).size() != 1) continue;
        const auto sig = gram_signature(gram_matrix(m, set));
        brute = sig.kind == SignatureKind::PositiveSemidefinite && sig.nullity == 1;
      }
      c.fast = std::string(yes_no(w.has_value())) + (ok ? "" : " (witness rejected)");
      c.oracle = yes_no(brute);
      c.agree = ok && w.has_value() == brute;
    } else {
      // Disjoint S, T, all cross labels 2, both W_S and W_T infinite.
      const auto w = find_commuting_infinite_pair(m, opt);
      const bool ok = !w || verify_commuting_pair(m, *w);
      const auto finite = gram_finite_table(m);
      std::vector<std::uint64_t> orth(n, 0);
      for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = 0; v < n; ++v) {
          if (u != v && m(u, v) == 2) orth[u] |= std::uint64_t{1} << v;
        }
      }
      bool brute = false;
      const std::uint64_t full = (std::uint64_t{1} << n) - 1;
      for (std::uint64_t s = 1; s <= full && !brute; ++s) {
        if (finite[s]) continue;
        std::uint64_t allowed = full & ~s;
        for (VertexId v = 0; v < n; ++v) {
          if ((s >> v) & 1) allowed &= orth[v];
        }
        for (std::uint64_t t = allowed; t != 0 && !brute; t = (t - 1) & allowed) brute = !finite[t];
      }
      c.fast = std::string(yes_no(w.has_value())) + (ok ? "" : " (witness rejected)");
      c.oracle = yes_no(brute);
      c.agree = ok && w.has_value() == brute;
    }
  }
  return c;
}

}  // namespace detail

inline std::vector<OracleCheck> run_oracle(const GraphDocument& doc, const OracleOptions& o) {
  if (o.max_vertices > kMaxOracleCap) {
    throw InputError("--max-vertices is limited to " + std::to_string(kMaxOracleCap));
  }
  if (doc.vertices.size() > o.max_vertices) {
    throw ResourceError("oracle brute force over " + std::to_string(doc.vertices.size()) +
                        " vertices exceeds the cap of " + std::to_string(o.max_vertices) +
                        " vertices; raise --max-vertices (at most " + std::to_string(kMaxOracleCap) + ")");
  }
  const auto& known = oracle_properties(doc.kind);
  std::vector<std::string> props;
  for (const auto& p : o.properties) {
    if (p == "all") {
      for (const auto& k : known) {
        if (std::find(props.begin(), props.end(), k) == props.end()) props.push_back(k);
      }
      continue;
    }
    if (std::find(known.begin(), known.end(), p) == known.end()) {
      std::string list;
      for (const auto& k : known) list += (list.empty() ? "" : ", ") + k;
      throw InputError("unknown oracle property \"" + p + "\" for a " + std::string(to_string(doc.kind)) +
                       " document; expected one of: " + list);
    }
    if (std::find(props.begin(), props.end(), p) == props.end()) props.push_back(p);
  }
  if (props.empty()) throw InputError("no property requested; pass --property");

  std::vector<OracleCheck> out;
  for (const auto& p : props) out.push_back(detail::oracle_check(doc, p));
  return out;
}

inline CommandOutput oracle_command(const GraphDocument& doc, const OracleOptions& o) {
  const auto checks = run_oracle(doc, o);
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["input_digest"] = document_digest(doc);
  Json arr = Json::array();
  bool all = true;
  for (const auto& c : checks) {
    arr.push_back(Json{{"property", c.property},
                       {"fast", c.fast},
                       {"oracle", c.oracle},
                       {"status", std::string(c.agree ? "AGREE" : "DISAGREE")}});
    all = all && c.agree;
  }
  j["checks"] = std::move(arr);
  return {j.dump(2) + "\n", all ? exit_status::kDecided : exit_status::kError};
}

// ---------------------------------------------------------------------------
// census
// ---------------------------------------------------------------------------

enum class RandomModel { Tree, Gnp };

inline RandomModel parse_model(const std::string& s) {
  if (s == "tree") return RandomModel::Tree;
  if (s == "gnp") return RandomModel::Gnp;
  throw InputError("unknown random model \"" + s + "\"; expected tree or gnp");
}

struct CensusOptions {
  RandomModel model = RandomModel::Tree;
  std::size_t n = 10;
  std::size_t count = 1000;
  std::uint64_t seed = 1;
  double p = 0.3;                       // gnp only
  std::vector<std::string> properties;  // graph-product properties, every vertex group Z/2
};

struct PropertyTally {
  std::string property;
  std::size_t yes = 0;
  std::size_t no = 0;
  std::size_t unknown = 0;
};

struct CensusResult {
  CensusOptions options;
  std::vector<PropertyTally> tallies;
  // SIL against max degree >= 3.
  std::size_t sil_high_degree = 0;
  std::size_t sil_low_degree = 0;
  std::size_t no_sil_high_degree = 0;
  std::size_t no_sil_low_degree = 0;
  // Shape of the graphs without SIL.
  std::size_t no_sil_connected = 0;
  std::size_t no_sil_two_complete = 0;
  std::size_t no_sil_other = 0;
};

inline bool two_complete_components(const SimplicialGraph& g) {
  const auto comps = connected_components(g);
  return comps.size() == 2 && is_clique(g, comps[0]) && is_clique(g, comps[1]);
}

inline CensusResult census(const CensusOptions& o) {
  CensusResult r;
  r.options = o;
  std::vector<std::string> props;
  if (!o.properties.empty()) props = detail::resolve_properties(DocumentKind::GraphProduct, o.properties);
  for (const auto& p : props) r.tallies.push_back({p});

  RandomSource rng(o.seed);
  for (std::size_t i = 0; i < o.count; ++i) {
    const SimplicialGraph g = o.model == RandomModel::Tree ? random_tree(o.n, rng) : random_gnp(o.n, o.p, rng);
    const bool sil = find_sil(g).has_value();
    const bool high = max_degree(g) >= 3;
    if (sil) {
      ++(high ? r.sil_high_degree : r.sil_low_degree);
    } else {
      ++(high ? r.no_sil_high_degree : r.no_sil_low_degree);
      if (connected_components(g).size() <= 1) {
        ++r.no_sil_connected;
      } else if (two_complete_components(g)) {
        ++r.no_sil_two_complete;
      } else {
        ++r.no_sil_other;
      }
    }
    if (props.empty()) continue;
    const auto spec = GraphProductSpec::uniform(g, 2);
    for (std::size_t k = 0; k < props.size(); ++k) {
      switch (detail::decide_gp(spec, props[k]).answer) {
        case Answer::Yes: ++r.tallies[k].yes; break;
        case Answer::No: ++r.tallies[k].no; break;
        case Answer::Unknown: ++r.tallies[k].unknown; break;
      }
    }
  }
  return r;
}

inline std::string format_census(const CensusResult& r) {
  const auto& o = r.options;
  std::ostringstream s;
  s << "# census model=" << (o.model == RandomModel::Tree ? "tree" : "gnp") << " n=" << o.n;
  if (o.model == RandomModel::Gnp) s << " p=" << o.p;
  s << " count=" << o.count << " seed=" << o.seed << "\n";
  s << "property\tyes\tno\tunknown\n";
  if (o.count == 0) return s.str();
  for (const auto& t : r.tallies) s << t.property << "\t" << t.yes << "\t" << t.no << "\t" << t.unknown << "\n";
  s << "\n# SIL by maximum degree\n";
  s << "\tdeg>=3\tdeg<=2\n";
  s << "sil\t" << r.sil_high_degree << "\t" << r.sil_low_degree << "\n";
  s << "no-sil\t" << r.no_sil_high_degree << "\t" << r.no_sil_low_degree << "\n";
  s << "\n# shape of graphs without SIL\n";
  s << "connected\t" << r.no_sil_connected << "\n";
  s << "two-complete-components\t" << r.no_sil_two_complete << "\n";
  s << "other\t" << r.no_sil_other << "\n";
  return s.str();
}

inline CommandOutput census_command(const CensusOptions& o) { return {format_census(census(o)), exit_status::kDecided}; }

// ---------------------------------------------------------------------------
// zz: build and check the commuting pair of infinite-order automorphisms
// ---------------------------------------------------------------------------

inline CommandOutput zz_command(const GraphDocument& doc, std::size_t iterations) {
  const auto spec = doc.graph_product();
  const auto sil = find_sil(spec.graph());
  if (!sil) throw InputError("the graph has no SIL, so there is no pair to check");
  const ZZReport z = zz_witness_verify(spec, *sil, iterations);
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["input_digest"] = document_digest(doc);
  j["sil"] = witness_to_json(*sil, doc.vertices);
  j["probe"] = doc.vertices.at(z.probe);
  j["iterations"] = z.iterations;
  j["commute"] = z.commute;
  j["growth"] = z.growth;
  j["f_nontrivial"] = z.f_nontrivial;
  j["lengths"] = z.lengths;
  j["note"] = z.note;
  j["passed"] = z.passed();
  return {j.dump(2) + "\n", z.passed() ? exit_status::kDecided : exit_status::kError};
}

}  // namespace hypaut
