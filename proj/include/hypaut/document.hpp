#pragma once

// Input documents. The canonical format is JSON:
//
//   {
//     "kind": "coxeter",                 // or "graph-product"
//     "vertices": ["a", "b", "c"],
//     "edges": [{"u": "a", "v": "b", "label": 3}, ...],
//     "orders": {"a": 2, "b": 3, ...}    // graph-product only
//   }
//
// Coxeter edges carry their label m >= 2; m = ∞ is written by leaving the
// edge out. A small DOT importer maps edge attribute "label" and node
// attribute "order" onto the same structure.

#include <cctype>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypaut/coxeter.hpp"
#include "hypaut/graph_product.hpp"

namespace hypaut {

using Json = nlohmann::ordered_json;

inline constexpr int kDocumentFormatVersion = 1;

enum class DocumentKind { Coxeter, GraphProduct };

inline std::string_view to_string(DocumentKind k) { return k == DocumentKind::Coxeter ? "coxeter" : "graph-product"; }

struct DocumentEdge {
  VertexId u = 0;
  VertexId v = 0;
  int label = 0;  // Coxeter label; 0 for graph products
  friend bool operator==(const DocumentEdge&, const DocumentEdge&) = default;
};

struct GraphDocument {
  DocumentKind kind = DocumentKind::GraphProduct;
  std::vector<std::string> vertices;
  std::vector<DocumentEdge> edges;     // u < v, sorted
  std::vector<std::uint32_t> orders;  // per vertex; empty for Coxeter documents

  SimplicialGraph graph() const {
    std::vector<Edge> e;
    for (const auto& d : edges) e.push_back({d.u, d.v});
    return SimplicialGraph(vertices.size(), e, vertices);
  }

  CoxeterPresentationGraph coxeter() const {
    if (kind != DocumentKind::Coxeter) throw InputError("document is not a coxeter document");
    std::vector<LabeledEdge> e;
    for (const auto& d : edges) e.push_back({d.u, d.v, d.label});
    return CoxeterPresentationGraph(vertices.size(), e, vertices);
  }

  GraphProductSpec graph_product() const {
    if (kind != DocumentKind::GraphProduct) throw InputError("document is not a graph-product document");
    return GraphProductSpec(graph(), orders);
  }

  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

inline GraphDocument document_from(const CoxeterPresentationGraph& cg) {
  GraphDocument d;
  d.kind = DocumentKind::Coxeter;
  d.vertices = cg.graph().names();
  for (const auto& e : cg.labeled_edges()) d.edges.push_back({e.u, e.v, e.label});
  return d;
}

inline GraphDocument document_from(const GraphProductSpec& spec) {
  GraphDocument d;
  d.kind = DocumentKind::GraphProduct;
  d.vertices = spec.graph().names();
  for (const auto& e : spec.graph().edges()) d.edges.push_back({e.u, e.v, 0});
  d.orders = spec.orders();
  return d;
}

namespace detail {

// Checks shared by the JSON and DOT front ends; `where` prefixes messages.
class DocumentBuilder {
 public:
  explicit DocumentBuilder(DocumentKind kind) { doc_.kind = kind; }

  void add_vertex(const std::string& name, const std::string& where) {
    if (name.empty()) throw InputError(where + ": vertex name must not be empty");
    if (!index_.emplace(name, static_cast<VertexId>(doc_.vertices.size())).second) {
      throw InputError(where + ": duplicate vertex name \"" + name + "\"");
    }
    doc_.vertices.push_back(name);
  }

  bool has_vertex(const std::string& name) const { return index_.count(name) != 0; }

  VertexId vertex(const std::string& name, const std::string& where) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw InputError(where + ": unknown vertex \"" + name + "\"");
    return it->second;
  }

  void add_edge(const std::string& a, const std::string& b, std::optional<std::int64_t> label,
                const std::string& where) {
    VertexId u = vertex(a, where + ".u");
    VertexId v = vertex(b, where + ".v");
    if (u == v) throw InputError(where + ": loop at \"" + a + "\" (graphs are simplicial)");
    if (u > v) std::swap(u, v);
    if (!seen_.insert({u, v}).second) {
      throw InputError(where + ": duplicate edge \"" + doc_.vertices[u] + "\" -- \"" + doc_.vertices[v] + "\"");
    }
    int l = 0;
    if (doc_.kind == DocumentKind::Coxeter) {
      if (!label) throw InputError(where + ": missing label (coxeter edges need a label >= 2)");
      if (*label < 2) throw InputError(where + ".label: label " + std::to_string(*label) + " is < 2");
      if (*label >= CoxeterMatrix::infinity) throw InputError(where + ".label: label too large");
      l = static_cast<int>(*label);
    } else if (label) {
      throw InputError(where + ".label: labels only apply to coxeter documents");
    }
    doc_.edges.push_back({u, v, l});
  }

  void set_order(const std::string& name, std::int64_t order, const std::string& where) {
    if (doc_.kind != DocumentKind::GraphProduct) throw InputError(where + ": orders only apply to graph-product documents");
    const VertexId v = vertex(name, where);
    if (order < 2) {
      throw InputError(where + ": order " + std::to_string(order) + " of \"" + name +
                       "\" is < 2 (vertex groups must be non-trivial)");
    }
    if (order > 0xFFFF) throw InputError(where + ": order of \"" + name + "\" is too large");
    orders_[v] = static_cast<std::uint32_t>(order);
  }

  GraphDocument finish(const std::string& orders_where) {
    std::sort(doc_.edges.begin(), doc_.edges.end(),
              [](const DocumentEdge& a, const DocumentEdge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    if (doc_.kind == DocumentKind::GraphProduct) {
      for (VertexId v = 0; v < doc_.vertices.size(); ++v) {
        auto it = orders_.find(v);
        if (it == orders_.end()) {
          throw InputError(orders_where + ": missing order for vertex \"" + doc_.vertices[v] + "\"");
        }
        doc_.orders.push_back(it->second);
      }
    }
    return doc_;
  }

 private:
  GraphDocument doc_;
  std::map<std::string, VertexId> index_;
  std::set<std::pair<VertexId, VertexId>> seen_;
  std::map<VertexId, std::uint32_t> orders_;
};

inline std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline std::int64_t integer_field(const Json& j, const std::string& where) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "infinity" || s == "∞") {
      throw InputError(where + ": explicit \"" + s +
                       "\" label is not accepted; m = ∞ is expressed by omitting the edge");
    }
    throw InputError(where + ": expected an integer, got string \"" + s + "\"");
  }
  if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
  return j.get<std::int64_t>();
}

inline std::string string_field(const Json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where + ": expected a string");
  return j.get<std::string>();
}

}  // namespace detail

inline DocumentKind parse_kind(const std::string& s, const std::string& where = "kind") {
  if (s == "coxeter") return DocumentKind::Coxeter;
  if (s == "graph-product") return DocumentKind::GraphProduct;
  throw InputError(where + ": unknown kind \"" + s + "\" (expected \"coxeter\" or \"graph-product\")");
}

inline GraphDocument document_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("document: expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "kind" && key != "vertices" && key != "edges" && key != "orders" && key != "format_version") {
      throw InputError(key + ": unknown field");
    }
  }
  if (j.contains("format_version")) {
    const auto v = detail::integer_field(j["format_version"], "format_version");
    if (v != kDocumentFormatVersion) throw InputError("format_version: unsupported version " + std::to_string(v));
  }
  if (!j.contains("kind")) throw InputError("kind: missing field");
  detail::DocumentBuilder b(parse_kind(detail::string_field(j["kind"], "kind")));

  if (!j.contains("vertices")) throw InputError("vertices: missing field");
  const Json& vs = j["vertices"];
  if (!vs.is_array()) throw InputError("vertices: expected an array of names");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    b.add_vertex(detail::string_field(vs[i], where), where);
  }

  if (j.contains("edges")) {
    const Json& es = j["edges"];
    if (!es.is_array()) throw InputError("edges: expected an array");
    for (std::size_t i = 0; i < es.size(); ++i) {
      const std::string where = "edges[" + std::to_string(i) + "]";
      const Json& e = es[i];
      if (!e.is_object()) throw InputError(where + ": expected an object with fields u, v, label");
      for (const auto& [key, value] : e.items()) {
        if (key != "u" && key != "v" && key != "label") throw InputError(where + "." + key + ": unknown field");
      }
      if (!e.contains("u") || !e.contains("v")) throw InputError(where + ": edge needs fields u and v");
      std::optional<std::int64_t> label;
      if (e.contains("label")) label = detail::integer_field(e["label"], where + ".label");
      b.add_edge(detail::string_field(e["u"], where + ".u"), detail::string_field(e["v"], where + ".v"), label,
                 where);
    }
  }

  if (j.contains("orders")) {
    const Json& os = j["orders"];
    if (!os.is_object()) throw InputError("orders: expected an object mapping vertex names to orders");
    for (const auto& [name, value] : os.items()) {
      const std::string where = "orders." + name;
      b.set_order(name, detail::integer_field(value, where), where);
    }
  }
  return b.finish("orders");
}

inline GraphDocument parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("malformed JSON at " + detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1) + ": " +
                     e.what());
  }
  return document_from_json(j);
}

inline Json to_json(const GraphDocument& d) {
  Json j;
  j["format_version"] = kDocumentFormatVersion;
  j["kind"] = std::string(to_string(d.kind));
  j["vertices"] = d.vertices;
  Json edges = Json::array();
  for (const auto& e : d.edges) {
    Json je;
    je["u"] = d.vertices[e.u];
    je["v"] = d.vertices[e.v];
    if (d.kind == DocumentKind::Coxeter) je["label"] = e.label;
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);
  if (d.kind == DocumentKind::GraphProduct) {
    Json orders = Json::object();
    for (VertexId v = 0; v < d.vertices.size(); ++v) orders[d.vertices[v]] = d.orders[v];
    j["orders"] = std::move(orders);
  }
  return j;
}

inline std::string serialize_document(const GraphDocument& d) { return to_json(d).dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// DOT import
// ---------------------------------------------------------------------------

namespace detail {

class DotLexer {
 public:
  explicit DotLexer(const std::string& text) : text_(text) {}

  struct Token {
    std::string text;
    bool quoted = false;
    std::size_t line = 0;
  };

  std::optional<Token> next() {
    skip();
    if (pos_ >= text_.size()) return std::nullopt;
    Token t;
    t.line = line_;
    const char c = text_[pos_];
    if (c == '"') {
      ++pos_;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
        if (text_[pos_] == '\n') ++line_;
        t.text += text_[pos_++];
      }
      if (pos_ >= text_.size()) throw InputError("DOT line " + std::to_string(t.line) + ": unterminated string");
      ++pos_;
      t.quoted = true;
      return t;
    }
    if (text_.compare(pos_, 2, "--") == 0 || text_.compare(pos_, 2, "->") == 0) {
      t.text = text_.substr(pos_, 2);
      pos_ += 2;
      return t;
    }
    if (std::string_view("{}[];,=").find(c) != std::string_view::npos) {
      t.text = std::string(1, c);
      ++pos_;
      return t;
    }
    while (pos_ < text_.size()) {
      const char d = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(d)) || std::string_view("{}[];,=\"").find(d) != std::string_view::npos ||
          text_.compare(pos_, 2, "--") == 0 || text_.compare(pos_, 2, "->") == 0) {
        break;
      }
      t.text += d;
      ++pos_;
    }
    return t;
  }

 private:
  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (text_.compare(pos_, 2, "//") == 0 || c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (text_.compare(pos_, 2, "/*") == 0) {
        auto end = text_.find("*/", pos_ + 2);
        for (std::size_t i = pos_; i < std::min(end, text_.size()); ++i) line_ += text_[i] == '\n';
        pos_ = end == std::string::npos ? text_.size() : end + 2;
      } else {
        break;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

}  // namespace detail

/// Undirected DOT subset: node statements with an optional `order`
/// attribute, edge chains `a -- b -- c` with an optional `label`, and a
/// `kind` graph attribute (or the `kind` argument) choosing the document kind.
inline GraphDocument parse_dot(const std::string& text, std::optional<DocumentKind> kind = std::nullopt) {
  using Token = detail::DotLexer::Token;
  std::vector<Token> toks;
  detail::DotLexer lex(text);
  while (auto t = lex.next()) toks.push_back(std::move(*t));

  std::size_t i = 0;
  auto where = [&](std::size_t k) {
    return "DOT line " + std::to_string(k < toks.size() ? toks[k].line : (toks.empty() ? 1 : toks.back().line));
  };
  auto expect = [&](const std::string& s) {
    if (i >= toks.size() || toks[i].quoted || toks[i].text != s) {
      throw InputError(where(i) + ": expected '" + s + "'");
    }
    ++i;
  };
  auto is = [&](std::size_t k, const char* s) { return k < toks.size() && !toks[k].quoted && toks[k].text == s; };

  if (is(i, "strict")) ++i;
  if (is(i, "digraph")) throw InputError(where(i) + ": directed graphs are not supported");
  expect("graph");
  if (i < toks.size() && !is(i, "{")) ++i;  // graph name
  expect("{");

  using Attrs = std::vector<std::pair<std::string, Token>>;
  auto attr_list = [&]() {
    Attrs out;
    while (is(i, "[")) {
      ++i;
      while (!is(i, "]")) {
        if (i >= toks.size()) throw InputError(where(i) + ": unterminated attribute list");
        std::string key = toks[i++].text;
        expect("=");
        if (i >= toks.size()) throw InputError(where(i) + ": missing attribute value");
        out.emplace_back(key, toks[i++]);
        if (is(i, ",") || is(i, ";")) ++i;
      }
      ++i;
    }
    return out;
  };

  struct PendingEdge {
    std::string a, b;
    std::optional<Token> label;
    std::size_t tok;
  };
  std::vector<std::pair<std::string, std::size_t>> nodes;  // declaration order
  std::set<std::string> declared;
  std::vector<PendingEdge> pending_edges;
  std::map<std::string, std::pair<Token, std::size_t>> pending_orders;
  std::optional<std::string> kind_attr;
  // `node [order=..]` and `edge [label=..]` defaults, for statements that follow.
  std::optional<Token> default_order, default_label;

  auto declare = [&](const std::string& name, std::size_t tok) {
    if (declared.insert(name).second) {
      nodes.emplace_back(name, tok);
      if (default_order) pending_orders.insert_or_assign(name, std::pair{*default_order, tok});
    }
  };

  while (!is(i, "}")) {
    if (i >= toks.size()) throw InputError(where(i) + ": missing closing '}'");
    if (is(i, ";") || is(i, ",")) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (is(i, "graph") || is(i, "node") || is(i, "edge")) {
      const std::string what = toks[i].text;
      ++i;
      for (auto& [k, v] : attr_list()) {
        if (what == "graph" && k == "kind") kind_attr = v.text;
        if (what == "node" && k == "order") default_order = v;
        if (what == "edge" && k == "label") default_label = v;
      }
      continue;
    }
    std::string first = toks[i++].text;
    if (is(i, "=")) {  // top-level graph attribute
      ++i;
      if (i >= toks.size()) throw InputError(where(i) + ": missing attribute value");
      if (first == "kind") kind_attr = toks[i].text;
      ++i;
      continue;
    }
    std::vector<std::string> chain{first};
    while (is(i, "--") || is(i, "->")) {
      if (is(i, "->")) throw InputError(where(i) + ": directed edge '->' in an undirected graph");
      ++i;
      if (i >= toks.size()) throw InputError(where(i) + ": edge without a target");
      chain.push_back(toks[i++].text);
    }
    auto attrs = attr_list();
    for (const auto& name : chain) declare(name, start);
    if (chain.size() == 1) {
      for (auto& [k, v] : attrs) {
        if (k == "order") pending_orders.insert_or_assign(first, std::pair{v, start});
      }
    } else {
      std::optional<Token> label = default_label;
      for (auto& [k, v] : attrs) {
        if (k == "label") label = v;
      }
      for (std::size_t k = 0; k + 1 < chain.size(); ++k) pending_edges.push_back({chain[k], chain[k + 1], label, start});
    }
  }

  DocumentKind k = kind.value_or(DocumentKind::GraphProduct);
  if (kind_attr) {
    const DocumentKind from_file = parse_kind(*kind_attr, "DOT graph attribute kind");
    if (kind && *kind != from_file) throw InputError("DOT graph attribute kind conflicts with the requested kind");
    k = from_file;
  } else if (!kind) {
    throw InputError("DOT input needs a graph attribute kind=\"coxeter\" or kind=\"graph-product\"");
  }

  auto number = [&](const Token& t, const std::string& w) -> std::int64_t {
    if (t.text == "inf" || t.text == "infinity" || t.text == "∞") {
      throw InputError(w + ": explicit \"" + t.text + "\" label is not accepted; m = ∞ is expressed by omitting the edge");
    }
    std::int64_t value = 0;
    std::size_t used = 0;
    try {
      value = std::stoll(t.text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != t.text.size()) throw InputError(w + ": expected an integer, got \"" + t.text + "\"");
    return value;
  };

  detail::DocumentBuilder b(k);
  for (const auto& [name, tok] : nodes) b.add_vertex(name, where(tok));
  for (const auto& e : pending_edges) {
    std::optional<std::int64_t> label;
    if (e.label) label = number(*e.label, where(e.tok) + " label");
    b.add_edge(e.a, e.b, label, where(e.tok) + " edge");
  }
  for (const auto& [name, value] : pending_orders) {
    const auto& [token, tok] = value;
    b.set_order(name, number(token, where(tok) + " order"), where(tok) + " order");
  }
  return b.finish("DOT order attributes");
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Reads a JSON document, or DOT when the extension is .dot or .gv.
inline GraphDocument load_document(const std::string& path) {
  const std::string text = read_file(path);
  auto ends_with = [&](const std::string& suffix) {
    return path.size() >= suffix.size() && path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  try {
    if (ends_with(".dot") || ends_with(".gv")) return parse_dot(text);
    return parse_document(text);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace hypaut
