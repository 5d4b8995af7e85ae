#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tutte3/error.hpp"
#include "tutte3/graphic.hpp"
#include "tutte3/matroid.hpp"
#include "tutte3/perspective.hpp"
#include "tutte3/setcore.hpp"

namespace tutte3 {

/// Syntax or semantic error in an input document. line() is 0 when the
/// problem is not tied to a single line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// A `matroid NAME bases:|circuits:` or `graph NAME edges:` line.
struct MatroidStanza {
  enum class Kind { kBases, kCircuits, kGraph };

  std::string name;
  Kind kind = Kind::kCircuits;
  std::vector<Subset> sets;  // bases or circuits
  Multigraph graph;          // graph stanzas only; vertices in first-appearance order
  int line = 0;

  friend bool operator==(const MatroidStanza& a, const MatroidStanza& b) {
    return a.name == b.name && a.kind == b.kind && a.sets == b.sets && a.graph == b.graph;
  }
};

/// Parsed input file.
///
/// Grammar (line oriented, `#` starts a comment):
///
///     elements: <n>
///     order: <e1> ... <en>
///     matroid <name> circuits: {a,b} {c} ...
///     matroid <name> bases: {a,b} ...
///     graph <name> edges: 1=u-v 2=v-w ...
///     identify: u=v w=x ...
///
/// Element labels are either all integers in 1..n, or arbitrary tokens that
/// are numbered 1..n in first-appearance order (an `order:` line, when
/// present, fixes that numbering). The first stanza is M and the second M';
/// `identify:` instead derives M' from a single graph stanza.
struct InputDocument {
  int n = 0;
  std::vector<std::string> labels;  // labels[e-1] names element e
  std::vector<Element> order;       // least to greatest
  bool explicit_order = false;
  std::vector<MatroidStanza> stanzas;
  std::vector<std::pair<std::string, std::string>> identify;

  bool is_perspective() const { return stanzas.size() == 2 || !identify.empty(); }

  GroundSet ground() const { return GroundSet(n, order); }

  std::string label(Element e) const { return labels.at(static_cast<std::size_t>(e - 1)); }

  /// `{a,b,c}` with elements in ascending label number, `{}` when empty.
  std::string format(Subset s) const {
    std::string out = "{";
    bool first = true;
    for (Element e : s.elements()) {
      if (!first) out += ',';
      out += label(e);
      first = false;
    }
    return out + "}";
  }

  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Drops whitespace next to punctuation so `{ 1, 2 }` and `1 = a - b` read
// as `{1,2}` and `1=a-b`.
inline std::string squeeze(std::string_view s) {
  auto is_punct = [](char c) {
    return c == '{' || c == '}' || c == ',' || c == '=' || c == '-' || c == ':';
  };
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
      const bool after_punct = !out.empty() && is_punct(out.back()) && out.back() != '}';
      const bool before_punct = j < s.size() && is_punct(s[j]) && s[j] != '{';
      if (!after_punct && !before_punct && !out.empty() && j < s.size()) out += ' ';
      i = j - 1;
    } else {
      out += c;
    }
  }
  return out;
}

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline bool valid_token(std::string_view t) {
  return !t.empty() && std::none_of(t.begin(), t.end(), [](char c) {
    return c == '{' || c == '}' || c == ',' || c == '=' || c == '-' || c == ':' || c == '#' ||
           std::isspace(static_cast<unsigned char>(c));
  });
}

inline std::optional<int> as_int(std::string_view t) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size()) return std::nullopt;
  return v;
}

// Raw element labels per stanza before numbering.
struct RawStanza {
  std::string name;
  MatroidStanza::Kind kind;
  std::vector<std::vector<std::string>> sets;
  std::vector<std::pair<std::string, std::pair<std::string, std::string>>> edges;
  int line;
};

inline std::vector<std::vector<std::string>> parse_sets(const std::string& body, int line) {
  std::vector<std::vector<std::string>> sets;
  std::size_t i = 0;
  while (i < body.size()) {
    if (body[i] == ' ') {
      ++i;
      continue;
    }
    if (body[i] != '{') throw ParseError(line, "expected '{' in set list");
    const std::size_t close = body.find('}', i);
    if (close == std::string::npos) throw ParseError(line, "unterminated '{'");
    const std::string inner = body.substr(i + 1, close - i - 1);
    std::vector<std::string> members;
    if (!inner.empty()) {
      std::size_t start = 0;
      while (true) {
        const std::size_t comma = inner.find(',', start);
        const std::string tok =
            inner.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!valid_token(tok)) throw ParseError(line, "bad element '" + tok + "' in set");
        members.push_back(tok);
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
    sets.push_back(std::move(members));
    i = close + 1;
  }
  return sets;
}

}  // namespace detail

inline InputDocument parse_input(std::string_view text) {
  std::optional<int> declared_n;
  std::optional<std::vector<std::string>> order_tokens;
  int order_line = 0;
  std::vector<detail::RawStanza> raw;
  std::vector<std::pair<std::string, std::string>> identify;
  int identify_line = 0;
  std::vector<std::string> appearance;  // element tokens in first-appearance order
  auto note = [&appearance](const std::string& t) {
    if (std::find(appearance.begin(), appearance.end(), t) == appearance.end()) {
      appearance.push_back(t);
    }
  };

  std::istringstream in{std::string(text)};
  std::string raw_line;
  int line_no = 0;
  while (std::getline(in, raw_line)) {
    ++line_no;
    if (auto hash = raw_line.find('#'); hash != std::string::npos) raw_line.erase(hash);
    const std::string line = detail::squeeze(detail::trim(raw_line));
    if (line.empty()) continue;
    const std::size_t colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(line_no, "expected 'key:'");
    const std::string head = line.substr(0, colon);
    const std::string body = detail::trim(line.substr(colon + 1));
    const auto head_words = detail::split_ws(head);

    if (head == "elements") {
      if (declared_n) throw ParseError(line_no, "duplicate 'elements:' line");
      auto n = detail::as_int(body);
      if (!n || *n < 0) throw ParseError(line_no, "'elements:' expects a non-negative integer");
      if (*n > kMaxElements) {
        throw ParseError(line_no, "ground sets larger than " + std::to_string(kMaxElements) +
                                      " elements are not supported");
      }
      declared_n = *n;
    } else if (head == "order") {
      if (order_tokens) throw ParseError(line_no, "duplicate 'order:' line");
      order_tokens = detail::split_ws(body);
      order_line = line_no;
      for (const auto& t : *order_tokens) {
        if (!detail::valid_token(t)) throw ParseError(line_no, "bad element '" + t + "'");
      }
    } else if (head == "identify") {
      if (!identify.empty()) throw ParseError(line_no, "duplicate 'identify:' line");
      for (const auto& tok : detail::split_ws(body)) {
        const std::size_t eq = tok.find('=');
        if (eq == std::string::npos) throw ParseError(line_no, "expected 'u=v' in identify list");
        std::string u = tok.substr(0, eq);
        std::string v = tok.substr(eq + 1);
        if (!detail::valid_token(u) || !detail::valid_token(v)) {
          throw ParseError(line_no, "bad vertex pair '" + tok + "'");
        }
        identify.emplace_back(std::move(u), std::move(v));
      }
      if (identify.empty()) throw ParseError(line_no, "'identify:' needs at least one pair");
      identify_line = line_no;
    } else if (head_words.size() == 3 && head_words[0] == "matroid" &&
               (head_words[2] == "bases" || head_words[2] == "circuits")) {
      detail::RawStanza st{head_words[1],
                           head_words[2] == "bases" ? MatroidStanza::Kind::kBases
                                                    : MatroidStanza::Kind::kCircuits,
                           detail::parse_sets(body, line_no),
                           {},
                           line_no};
      for (const auto& set : st.sets) {
        for (const auto& t : set) note(t);
      }
      raw.push_back(std::move(st));
    } else if (head_words.size() == 3 && head_words[0] == "graph" && head_words[2] == "edges") {
      detail::RawStanza st{head_words[1], MatroidStanza::Kind::kGraph, {}, {}, line_no};
      for (const auto& tok : detail::split_ws(body)) {
        const std::size_t eq = tok.find('=');
        const std::size_t dash = tok.find('-', eq == std::string::npos ? 0 : eq);
        if (eq == std::string::npos || dash == std::string::npos) {
          throw ParseError(line_no, "expected 'label=u-v', got '" + tok + "'");
        }
        std::string label = tok.substr(0, eq);
        std::string u = tok.substr(eq + 1, dash - eq - 1);
        std::string v = tok.substr(dash + 1);
        if (!detail::valid_token(label) || !detail::valid_token(u) || !detail::valid_token(v)) {
          throw ParseError(line_no, "bad edge '" + tok + "'");
        }
        note(label);
        st.edges.push_back({std::move(label), {std::move(u), std::move(v)}});
      }
      raw.push_back(std::move(st));
    } else {
      throw ParseError(line_no, "unknown line '" + head + ":'");
    }
  }

  if (!declared_n) throw ParseError(0, "missing 'elements:' line");
  if (raw.empty()) throw ParseError(0, "no matroid or graph stanza");
  if (raw.size() > 2) throw ParseError(raw[2].line, "at most two matroid stanzas are allowed");
  if (raw.size() == 2 && raw[0].name == raw[1].name) {
    throw ParseError(raw[1].line, "duplicate stanza name '" + raw[1].name + "'");
  }
  if (!identify.empty()) {
    if (raw.size() != 1 || raw[0].kind != MatroidStanza::Kind::kGraph) {
      throw ParseError(identify_line, "'identify:' requires exactly one graph stanza and no other");
    }
  }

  InputDocument doc;
  doc.n = *declared_n;

  // Numbering of element tokens.
  std::vector<std::string> all_tokens = appearance;
  if (order_tokens) {
    for (const auto& t : *order_tokens) {
      if (std::find(all_tokens.begin(), all_tokens.end(), t) == all_tokens.end()) {
        all_tokens.push_back(t);
      }
    }
  }
  const bool numeric = std::all_of(all_tokens.begin(), all_tokens.end(),
                                   [](const std::string& t) { return detail::as_int(t).has_value(); });
  std::map<std::string, Element> number;
  if (numeric) {
    for (int e = 1; e <= doc.n; ++e) doc.labels.push_back(std::to_string(e));
    for (const auto& t : all_tokens) {
      const int v = *detail::as_int(t);
      if (v < 1 || v > doc.n) {
        throw ParseError(0, "element " + t + " is not in the ground set {1.." +
                                std::to_string(doc.n) + "}");
      }
      number[t] = v;
    }
  } else {
    doc.labels = order_tokens ? *order_tokens : appearance;
    for (const auto& t : appearance) {
      if (std::find(doc.labels.begin(), doc.labels.end(), t) == doc.labels.end()) {
        throw ParseError(order_line, "element '" + t + "' does not appear in the order line");
      }
    }
    if (static_cast<int>(doc.labels.size()) != doc.n) {
      throw ParseError(0, "ground set declares " + std::to_string(doc.n) + " elements but " +
                              std::to_string(doc.labels.size()) +
                              " distinct labels are named; list every label in an 'order:' line");
    }
    for (std::size_t i = 0; i < doc.labels.size(); ++i) {
      if (!number.emplace(doc.labels[i], static_cast<Element>(i + 1)).second) {
        throw ParseError(order_line, "element '" + doc.labels[i] + "' repeated in order line");
      }
    }
  }

  if (order_tokens) {
    if (static_cast<int>(order_tokens->size()) != doc.n) {
      throw ParseError(order_line, "order line must list all " + std::to_string(doc.n) + " elements");
    }
    std::set<Element> seen;
    for (const auto& t : *order_tokens) {
      const Element e = number.at(t);
      if (!seen.insert(e).second) {
        throw ParseError(order_line, "element '" + t + "' repeated in order line");
      }
      doc.order.push_back(e);
    }
    doc.explicit_order = true;
  } else {
    doc.order = GroundSet::natural_order(doc.n);
  }

  for (auto& st : raw) {
    MatroidStanza out;
    out.name = st.name;
    out.kind = st.kind;
    out.line = st.line;
    for (const auto& set : st.sets) {
      Subset s;
      for (const auto& t : set) {
        const Element e = number.at(t);
        if (s.contains(e)) throw ParseError(st.line, "element '" + t + "' repeated within a set");
        s = s.with(e);
      }
      out.sets.push_back(s);
    }
    std::set<Element> used;
    for (const auto& [label, ends] : st.edges) {
      const Element e = number.at(label);
      if (!used.insert(e).second) {
        throw ParseError(st.line, "edge label '" + label + "' used twice");
      }
      for (const auto& v : {ends.first, ends.second}) {
        if (std::find(out.graph.vertices.begin(), out.graph.vertices.end(), v) ==
            out.graph.vertices.end()) {
          out.graph.vertices.push_back(v);
        }
      }
      out.graph.edges.push_back({e, ends.first, ends.second});
    }
    if (st.kind == MatroidStanza::Kind::kGraph && static_cast<int>(used.size()) != doc.n) {
      throw ParseError(st.line, "graph '" + st.name + "' must label its edges with all " +
                                    std::to_string(doc.n) + " elements exactly once");
    }
    doc.stanzas.push_back(std::move(out));
  }

  if (!identify.empty()) {
    const auto& vs = doc.stanzas[0].graph.vertices;
    for (const auto& [u, v] : identify) {
      for (const auto& w : {u, v}) {
        if (std::find(vs.begin(), vs.end(), w) == vs.end()) {
          throw ParseError(identify_line, "unknown vertex '" + w + "' in identify list");
        }
      }
    }
    doc.identify = std::move(identify);
  }
  return doc;
}

/// Writes a document that parses back to an equal InputDocument.
inline std::string serialize(const InputDocument& doc) {
  std::ostringstream out;
  out << "elements: " << doc.n << '\n';
  // Symbolic labels without an order line are numbered by first appearance,
  // which writing the stanzas back in the same sequence preserves.
  if (doc.explicit_order) {
    out << "order:";
    for (Element e : doc.order) out << ' ' << doc.label(e);
    out << '\n';
  }
  for (const auto& st : doc.stanzas) {
    switch (st.kind) {
      case MatroidStanza::Kind::kBases:
      case MatroidStanza::Kind::kCircuits:
        out << "matroid " << st.name
            << (st.kind == MatroidStanza::Kind::kBases ? " bases:" : " circuits:");
        for (Subset s : st.sets) out << ' ' << doc.format(s);
        break;
      case MatroidStanza::Kind::kGraph:
        out << "graph " << st.name << " edges:";
        for (const auto& e : st.graph.edges) out << ' ' << doc.label(e.label) << '=' << e.u << '-' << e.v;
        break;
    }
    out << '\n';
  }
  if (!doc.identify.empty()) {
    out << "identify:";
    for (const auto& [u, v] : doc.identify) out << ' ' << u << '=' << v;
    out << '\n';
  }
  return out.str();
}

/// Vertex classes generated by the `identify:` pairs (union of pairs).
inline std::vector<std::vector<std::string>> identification_classes(
    const Multigraph& g, const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) index[g.vertices[i]] = i;
  detail::UnionFind uf(g.vertices.size());
  for (const auto& [u, v] : pairs) uf.unite(index.at(u), index.at(v));
  std::map<std::size_t, std::size_t> class_of_root;
  std::vector<std::vector<std::string>> classes;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    auto [it, fresh] = class_of_root.emplace(uf.find(i), classes.size());
    if (fresh) classes.emplace_back();
    classes[it->second].push_back(g.vertices[i]);
  }
  return classes;
}

/// Builds the matroid of one stanza. Axiom violations surface as ParseError.
inline Matroid build_matroid(const InputDocument& doc, const MatroidStanza& st) {
  const GroundSet ground = doc.ground();
  try {
    switch (st.kind) {
      case MatroidStanza::Kind::kBases:
        if (st.sets.empty()) throw AxiomViolation("a 'bases:' stanza needs at least one basis");
        return Matroid::from_bases(ground, st.sets);
      case MatroidStanza::Kind::kCircuits:
        return Matroid::from_circuits(ground, st.sets);
      case MatroidStanza::Kind::kGraph:
        return cycle_matroid(st.graph, ground);
    }
  } catch (const AxiomViolation& e) {
    throw ParseError(st.line, "matroid '" + st.name + "': " + e.what());
  } catch (const DomainError& e) {
    throw ParseError(st.line, "matroid '" + st.name + "': " + e.what());
  }
  throw ParseError(st.line, "unknown stanza kind");
}

/// The two matroids named by the document: (M, M') for perspective
/// documents, (M, M) for single-matroid documents. Not yet validated as a
/// perspective.
inline std::pair<Matroid, Matroid> build_pair(const InputDocument& doc) {
  Matroid m = build_matroid(doc, doc.stanzas.front());
  if (!doc.identify.empty()) {
    const Multigraph& g = doc.stanzas.front().graph;
    const Multigraph merged = identify_vertices(g, identification_classes(g, doc.identify));
    return {m, cycle_matroid(merged, doc.ground())};
  }
  if (doc.stanzas.size() == 2) return {m, build_matroid(doc, doc.stanzas[1])};
  return {m, m};
}

}  // namespace tutte3
