#pragma once

// Shared fixtures, brute-force oracles and corpus generators for the test
// suites. Oracles here work from definitions only (enumerating subsets of
// the basis family) and never call the library's derived structures.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tutte3/tutte3.hpp"

namespace tutte3::testing {

// ---------------------------------------------------------------- fixtures

inline GroundSet natural5() { return GroundSet(5); }

inline Multigraph two_triangles_graph() {
  return {{"a", "b", "c", "d"},
          {{1, "a", "b"}, {2, "b", "c"}, {3, "c", "a"}, {4, "c", "d"}, {5, "d", "a"}}};
}

inline Matroid fixture_m(const GroundSet& e = natural5()) {
  return Matroid::from_circuits(e, {{1, 2, 3}, {3, 4, 5}, {1, 2, 4, 5}});
}

inline Matroid fixture_mp(const GroundSet& e = natural5()) {
  return Matroid::from_circuits(e, {{1}, {2, 3}, {3, 4, 5}, {2, 4, 5}});
}

inline Perspective fixture_perspective(const GroundSet& e = natural5()) {
  return Perspective(fixture_m(e), fixture_mp(e));
}

inline Polynomial fixture_polynomial() {
  Polynomial p;
  p.add_term({2, 0, 1});
  p.add_term({2, 0, 0});
  p.add_term({0, 2, 0});
  p.add_term({1, 1, 0});
  p.add_term({1, 0, 1}, 2);
  p.add_term({0, 1, 1});
  p.add_term({1, 0, 0}, 2);
  p.add_term({0, 1, 0}, 2);
  p.add_term({0, 0, 1});
  p.add_term({0, 0, 0});
  return p;
}

inline const char* kFixturePolynomial =
    "x^2*z + x^2 + x*y + 2*x*z + 2*x + y^2 + y*z + 2*y + z + 1";

// ----------------------------------------------------------------- oracles

/// Independent sets: subsets of some basis.
inline bool brute_independent(const Matroid& m, Subset x) {
  return std::any_of(m.bases().begin(), m.bases().end(), [x](Subset b) { return b.includes(x); });
}

/// Rank as the size of a largest independent subset, by enumeration.
inline int brute_rank(const Matroid& m, Subset x) {
  int best = 0;
  for_each_subset(x, [&](Subset s) {
    if (brute_independent(m, s)) best = std::max(best, s.size());
  });
  return best;
}

/// Minimal dependent subsets of the ground set, by enumeration.
inline std::vector<Subset> brute_circuits(const Matroid& m) {
  std::vector<Subset> out;
  for_each_subset(m.ground(), [&](Subset s) {
    if (s.empty() || brute_independent(m, s)) return;
    for (Element e : s.elements()) {
      if (!brute_independent(m, s.without(e))) return;
    }
    out.push_back(s);
  });
  return out;
}

/// Dual bases as complements, independent of the library's dual().
inline std::vector<Subset> brute_dual_bases(const Matroid& m) {
  std::vector<Subset> out;
  for (Subset b : m.bases()) out.push_back(m.ground() - b);
  std::sort(out.begin(), out.end());
  return out;
}

/// Lexicographically least basis by scanning every basis.
inline Subset brute_min_basis(const Matroid& m) {
  Subset best = m.bases().front();
  for (Subset b : m.bases()) {
    if (m.universe().lex_compare(b, best) < 0) best = b;
  }
  return best;
}

/// Literal activity definitions over enumerated circuits.
inline Subset brute_external(const Matroid& m, Subset x) {
  const auto circuits = brute_circuits(m);
  Subset out;
  for (Element e : (m.ground() - x).elements()) {
    for (Subset c : circuits) {
      if (x.with(e).includes(c) && c.contains(e) && m.universe().min_element(c) == e) {
        out = out.with(e);
      }
    }
  }
  return out;
}

inline Subset brute_internal(const Matroid& m, Subset x) {
  const Matroid d = Matroid::from_bases(m.universe(), m.ground(), brute_dual_bases(m));
  const auto cocircuits = brute_circuits(d);
  const Subset rest = m.ground() - x;
  Subset out;
  for (Element e : x.elements()) {
    for (Subset c : cocircuits) {
      if (rest.with(e).includes(c) && c.contains(e) && m.universe().min_element(c) == e) {
        out = out.with(e);
      }
    }
  }
  return out;
}

/// Tutte polynomial from the corank-nullity sum with integer exponents,
/// expanded by hand with binomials instead of polynomial substitution.
inline Polynomial brute_rank_generating(const Matroid& m, const Matroid& mp) {
  auto binom = [](unsigned n, unsigned k) {
    std::int64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  Polynomial out;
  for_each_subset(m.ground(), [&](Subset a) {
    const unsigned i = static_cast<unsigned>(brute_rank(mp, mp.ground()) - brute_rank(mp, a));
    const unsigned j = static_cast<unsigned>(a.size() - brute_rank(m, a));
    const unsigned k = static_cast<unsigned>(brute_rank(m, m.ground()) - brute_rank(mp, mp.ground()) -
                                             (brute_rank(m, a) - brute_rank(mp, a)));
    for (unsigned s = 0; s <= i; ++s) {
      for (unsigned t = 0; t <= j; ++t) {
        const std::int64_t sign = ((i - s) + (j - t)) % 2 == 0 ? 1 : -1;
        out.add_term({s, t, k}, sign * binom(i, s) * binom(j, t));
      }
    }
  });
  return out;
}

// ------------------------------------------------------------------ corpus

struct NamedMatroid {
  std::string name;
  Matroid matroid;
};

struct NamedPerspective {
  std::string name;
  Perspective perspective;
};

inline std::string describe(const Matroid& m) {
  std::string s = "n=" + std::to_string(m.universe().size()) + " bases:";
  for (Subset b : m.bases()) s += ' ' + to_string(b);
  return s;
}

/// Every graphic matroid with at most `max_edges` edges (labels 1..n),
/// deduplicated. Graphs are generated with canonical vertex introduction,
/// which reaches every labeled graphic matroid since connected graphs with
/// n edges have at most n+1 vertices.
inline std::vector<NamedMatroid> all_graphic_matroids(int max_edges) {
  std::vector<NamedMatroid> out;
  std::set<std::pair<int, std::vector<Subset>>> seen;
  for (int n = 0; n <= max_edges; ++n) {
    std::vector<std::pair<int, int>> ends(static_cast<std::size_t>(n));
    auto emit = [&](int vertex_count) {
      Multigraph g;
      for (int v = 0; v < std::max(vertex_count, 1); ++v) g.vertices.push_back("v" + std::to_string(v));
      for (int i = 0; i < n; ++i) {
        g.edges.push_back({i + 1, "v" + std::to_string(ends[static_cast<std::size_t>(i)].first),
                           "v" + std::to_string(ends[static_cast<std::size_t>(i)].second)});
      }
      Matroid m = cycle_matroid(g);
      if (seen.insert({n, m.bases()}).second) out.push_back({"graphic " + describe(m), m});
    };
    auto rec = [&](auto&& self, int i, int vertex_count) -> void {
      if (i == n) {
        emit(vertex_count);
        return;
      }
      for (int u = 0; u <= vertex_count; ++u) {
        const int after_u = std::max(vertex_count, u + 1);
        for (int v = u; v <= after_u; ++v) {
          ends[static_cast<std::size_t>(i)] = {u, v};
          self(self, i + 1, std::max(after_u, v + 1));
        }
      }
    };
    rec(rec, 0, 0);
  }
  return out;
}

/// Matroids from random circuit families on at most `max_n` elements;
/// families failing the circuit axioms are rejected and redrawn.
inline std::vector<NamedMatroid> random_circuit_matroids(std::mt19937_64& rng, int count, int max_n) {
  std::vector<NamedMatroid> out;
  std::set<std::pair<int, std::vector<Subset>>> seen;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count && attempts < 200000) {
    ++attempts;
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n));
    const int k = static_cast<int>(rng() % 5);
    const GroundSet e(n);
    std::vector<Subset> circuits;
    for (int i = 0; i < k; ++i) {
      const Subset c(static_cast<std::uint32_t>(rng()) & e.all().bits());
      if (!c.empty()) circuits.push_back(c);
    }
    try {
      Matroid m = Matroid::from_circuits(e, circuits);
      if (seen.insert({n, m.bases()}).second) out.push_back({"circuits " + describe(m), m});
    } catch (const AxiomViolation&) {
    }
  }
  return out;
}

inline Multigraph random_multigraph(std::mt19937_64& rng, int max_vertices, int max_edges) {
  Multigraph g;
  const int nv = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_vertices));
  const int ne = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_edges));
  for (int v = 0; v < nv; ++v) g.vertices.push_back(std::string(1, static_cast<char>('a' + v)));
  for (int i = 0; i < ne; ++i) {
    g.edges.push_back({i + 1, g.vertices[rng() % static_cast<std::uint64_t>(nv)],
                       g.vertices[rng() % static_cast<std::uint64_t>(nv)]});
  }
  return g;
}

inline std::vector<std::vector<std::string>> random_partition(std::mt19937_64& rng,
                                                              const std::vector<std::string>& vs) {
  std::vector<std::vector<std::string>> classes;
  for (const auto& v : vs) {
    const std::size_t c = rng() % (classes.size() + 1);
    if (c == classes.size()) classes.emplace_back();
    classes[c].push_back(v);
  }
  return classes;
}

/// The truncation: independent sets of size r-1 become the bases.
inline Matroid truncation(const Matroid& m) {
  if (m.rank() == 0) return m;
  std::vector<Subset> bases;
  for_each_subset_of_size(m.ground(), m.rank() - 1, [&](Subset s) {
    if (m.is_independent(s)) bases.push_back(s);
  });
  return Matroid::from_bases(m.universe(), bases);
}

struct Corpus {
  std::vector<NamedMatroid> matroids;
  std::vector<NamedPerspective> perspectives;
};

/// The perspective corpus: (M,M) for every generated matroid, graphic pairs
/// from random vertex identifications, (M, rank 0), (M, truncation of M) and
/// the two-triangle fixture under random element orders.
inline Corpus build_corpus(std::uint64_t seed = 20240601) {
  std::mt19937_64 rng(seed);
  Corpus corpus;
  corpus.matroids = all_graphic_matroids(5);
  for (auto& m : random_circuit_matroids(rng, 120, 5)) corpus.matroids.push_back(std::move(m));

  for (const auto& entry : corpus.matroids) {

    const std::string& name = entry.name;

    const auto& m = entry.matroid;
    corpus.perspectives.push_back({"(M,M) " + name, Perspective::diagonal(m)});
  }
  for (int i = 0; i < 120; ++i) {
    const Multigraph g = random_multigraph(rng, 5, 6);
    const auto classes = random_partition(rng, g.vertices);
    Perspective p(cycle_matroid(g), cycle_matroid(identify_vertices(g, classes)));
    corpus.perspectives.push_back({"graphic pair " + describe(p.m()) + " / " + describe(p.mp()), p});
  }
  for (const auto& entry : corpus.matroids) {
    const std::string& name = entry.name;
    const auto& m = entry.matroid;
    corpus.perspectives.push_back({"(M,0) " + name, Perspective(m, Matroid::zero(m.universe()))});
    corpus.perspectives.push_back({"(M,trunc M) " + name, Perspective(m, truncation(m))});
  }
  corpus.perspectives.push_back({"two-triangle fixture", fixture_perspective()});
  for (int i = 0; i < 10; ++i) {
    const GroundSet e(5, random_order(5, rng));
    corpus.perspectives.push_back({"two-triangle fixture, order " + std::to_string(i), fixture_perspective(e)});
  }
  return corpus;
}

}  // namespace tutte3::testing
