#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "tutte3/error.hpp"
#include "tutte3/matroid.hpp"
#include "tutte3/setcore.hpp"

namespace tutte3 {

struct Edge {
  Element label = 0;
  std::string u;
  std::string v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph whose edges are the matroid elements. Loops and
/// parallel edges are allowed.
struct Multigraph {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }

  /// Returns false when a and b were already joined.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

struct IndexedEdge {
  Element label;
  std::size_t u;
  std::size_t v;
};

inline std::vector<IndexedEdge> index_edges(const Multigraph& g) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    if (!index.emplace(g.vertices[i], i).second) {
      throw DomainError("duplicate vertex '" + g.vertices[i] + "'");
    }
  }
  std::vector<IndexedEdge> out;
  for (const Edge& e : g.edges) {
    auto iu = index.find(e.u);
    auto iv = index.find(e.v);
    if (iu == index.end() || iv == index.end()) {
      throw DomainError("edge " + std::to_string(e.label) + " has an endpoint that is not a vertex");
    }
    out.push_back({e.label, iu->second, iv->second});
  }
  return out;
}

}  // namespace detail

/// Cycle matroid of g over `universe`; edge labels must be exactly 1..n.
inline Matroid cycle_matroid(const Multigraph& g, const GroundSet& universe) {
  const auto edges = detail::index_edges(g);
  if (static_cast<int>(edges.size()) != universe.size()) {
    throw DomainError("graph has " + std::to_string(edges.size()) + " edges but the ground set has " +
                      std::to_string(universe.size()) + " elements");
  }
  std::vector<const detail::IndexedEdge*> by_label(static_cast<std::size_t>(universe.size()) + 1);
  for (const auto& e : edges) {
    universe.require_member(e.label);
    if (by_label[static_cast<std::size_t>(e.label)] != nullptr) {
      throw DomainError("edge label " + std::to_string(e.label) + " used twice");
    }
    by_label[static_cast<std::size_t>(e.label)] = &e;
  }

  auto acyclic = [&](Subset s) {
    detail::UnionFind uf(g.vertices.size());
    for (Element e : s.elements()) {
      const auto* edge = by_label[static_cast<std::size_t>(e)];
      if (!uf.unite(edge->u, edge->v)) return false;
    }
    return true;
  };

  detail::UnionFind components(g.vertices.size());
  int rank = 0;
  for (const auto& e : edges) rank += components.unite(e.u, e.v) ? 1 : 0;

  std::vector<Subset> bases;
  for_each_subset_of_size(universe.all(), rank, [&](Subset s) {
    if (acyclic(s)) bases.push_back(s);
  });
  return Matroid::from_bases(universe, std::move(bases));
}

inline Matroid cycle_matroid(const Multigraph& g) {
  return cycle_matroid(g, GroundSet(static_cast<int>(g.edges.size())));
}

/// Merges each class of `classes` into a single vertex named after the
/// class member that comes first in g.vertices. Edges keep their labels;
/// edges inside a class become loops.
inline Multigraph identify_vertices(const Multigraph& g,
                                    const std::vector<std::vector<std::string>>& classes) {
  std::map<std::string, std::size_t> class_of;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw DomainError("vertex partition has an empty class");
    for (const auto& v : classes[c]) {
      if (std::find(g.vertices.begin(), g.vertices.end(), v) == g.vertices.end()) {
        throw DomainError("vertex '" + v + "' in the partition is not in the graph");
      }
      if (!class_of.emplace(v, c).second) {
        throw DomainError("vertex '" + v + "' appears in more than one class");
      }
    }
  }
  if (class_of.size() != g.vertices.size()) {
    throw DomainError("vertex partition does not cover every vertex");
  }

  std::vector<std::string> representative(classes.size());
  Multigraph out;
  for (const auto& v : g.vertices) {
    auto& rep = representative[class_of.at(v)];
    if (rep.empty()) {
      rep = v;
      out.vertices.push_back(v);
    }
  }
  for (const Edge& e : g.edges) {
    out.edges.push_back({e.label, representative[class_of.at(e.u)], representative[class_of.at(e.v)]});
  }
  return out;
}

}  // namespace tutte3
