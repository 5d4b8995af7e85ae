#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "tutte3/error.hpp"
#include "tutte3/setcore.hpp"

namespace tutte3 {

/// Whether a constructor re-checks the matroid axioms. Trusted is reserved
/// for families derived from an already valid matroid (duals and minors).
enum class Validation { kFull, kTrusted };

/// A matroid stored canonically as its sorted basis family.
///
/// The matroid lives on `ground()`, a subset of the universe {1..n}.
/// Minors keep the original labels and the universe's order, since
/// activities and minimal bases depend on the global `<`. Circuits and
/// cocircuits are derived once at construction (as fundamental circuits and
/// cocircuits of the bases), so a Matroid is immutable and safe to share.
class Matroid {
 public:
  static Matroid from_bases(const GroundSet& universe, std::vector<Subset> bases,
                            Validation validation = Validation::kFull) {
    return from_bases(universe, universe.all(), std::move(bases), validation);
  }

  /// Matroid on `ground` ⊆ universe with the given bases.
  static Matroid from_bases(const GroundSet& universe, Subset ground, std::vector<Subset> bases,
                            Validation validation = Validation::kFull) {
    universe.require_subset(ground);
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    if (validation == Validation::kFull) validate_bases(ground, bases);
    return Matroid(universe, ground, std::move(bases));
  }

  static Matroid from_circuits(const GroundSet& universe, std::vector<Subset> circuits) {
    std::sort(circuits.begin(), circuits.end());
    circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());
    validate_circuits(universe, circuits);

    const Subset ground = universe.all();
    auto circuit_free = [&circuits](Subset s) {
      return std::none_of(circuits.begin(), circuits.end(),
                          [s](Subset c) { return s.includes(c); });
    };
    Subset greedy;
    for (Element e : universe.order()) {
      if (circuit_free(greedy.with(e))) greedy = greedy.with(e);
    }
    std::vector<Subset> bases;
    for_each_subset_of_size(ground, greedy.size(), [&](Subset s) {
      if (circuit_free(s)) bases.push_back(s);
    });
    return Matroid(universe, ground, std::move(bases));
  }

  /// The free matroid: every element is a coloop.
  static Matroid free(const GroundSet& universe) {
    return Matroid(universe, universe.all(), {universe.all()});
  }

  /// The rank-0 matroid: every element is a loop.
  static Matroid zero(const GroundSet& universe) {
    return Matroid(universe, universe.all(), {Subset()});
  }

  static Matroid uniform(const GroundSet& universe, int rank) {
    if (rank < 0 || rank > universe.size()) {
      throw DomainError("uniform matroid rank " + std::to_string(rank) + " outside 0.." +
                        std::to_string(universe.size()));
    }
    std::vector<Subset> bases;
    for_each_subset_of_size(universe.all(), rank, [&](Subset s) { bases.push_back(s); });
    return Matroid(universe, universe.all(), std::move(bases));
  }

  const GroundSet& universe() const { return universe_; }
  Subset ground() const { return ground_; }
  int rank() const { return bases_.front().size(); }

  const std::vector<Subset>& bases() const { return bases_; }
  const std::vector<Subset>& circuits() const { return circuits_; }
  const std::vector<Subset>& cocircuits() const { return cocircuits_; }

  bool is_basis(Subset x) const { return std::binary_search(bases_.begin(), bases_.end(), x); }

  int rank(Subset x) const {
    require_in_ground(x);
    const int cap = std::min(x.size(), rank());
    int best = 0;
    for (Subset b : bases_) {
      best = std::max(best, (b & x).size());
      if (best == cap) break;
    }
    return best;
  }

  /// Rank of x in the dual matroid.
  int corank(Subset x) const { return x.size() - rank() + rank(ground_ - x); }

  bool is_independent(Subset x) const { return rank(x) == x.size(); }
  bool is_spanning(Subset x) const { return rank(x) == rank(); }

  /// Same bases over a universe with a different element order.
  Matroid with_order(const GroundSet& universe) const {
    if (universe.size() != universe_.size()) {
      throw DomainError("reordering changes the ground set size");
    }
    return Matroid(universe, ground_, bases_);
  }

  void require_in_ground(Subset x) const {
    if (!ground_.includes(x)) {
      throw DomainError("set " + to_string(x) + " is not contained in the matroid's ground set " +
                        to_string(ground_));
    }
  }

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.universe_ == b.universe_ && a.ground_ == b.ground_ && a.bases_ == b.bases_;
  }

 private:
  Matroid(GroundSet universe, Subset ground, std::vector<Subset> bases)
      : universe_(std::move(universe)), ground_(ground), bases_(std::move(bases)) {
    std::sort(bases_.begin(), bases_.end());
    derive_circuits();
  }

  static void validate_bases(Subset ground, const std::vector<Subset>& bases) {
    if (bases.empty()) throw AxiomViolation("basis family is empty");
    const int r = bases.front().size();
    for (Subset b : bases) {
      if (!ground.includes(b)) {
        throw DomainError("basis " + to_string(b) + " is not contained in the ground set " +
                          to_string(ground));
      }
      if (b.size() != r) {
        throw AxiomViolation("bases " + to_string(bases.front()) + " and " + to_string(b) +
                             " have different sizes");
      }
    }
    for (Subset b1 : bases) {
      for (Subset b2 : bases) {
        for (Element e : (b1 - b2).elements()) {
          const Subset rest = b1.without(e);
          bool exchanged = false;
          for (Element f : (b2 - b1).elements()) {
            if (std::binary_search(bases.begin(), bases.end(), rest.with(f))) {
              exchanged = true;
              break;
            }
          }
          if (!exchanged) {
            throw AxiomViolation("basis exchange fails for " + to_string(b1) + " and " +
                                 to_string(b2) + " removing " + std::to_string(e));
          }
        }
      }
    }
  }

  static void validate_circuits(const GroundSet& universe, const std::vector<Subset>& circuits) {
    for (Subset c : circuits) {
      universe.require_subset(c);
      if (c.empty()) throw AxiomViolation("the empty set cannot be a circuit");
    }
    for (Subset c1 : circuits) {
      for (Subset c2 : circuits) {
        if (c1 == c2) continue;
        if (c2.includes(c1)) {
          throw AxiomViolation("circuit " + to_string(c1) + " is contained in circuit " +
                               to_string(c2));
        }
        for (Element e : (c1 & c2).elements()) {
          const Subset pool = (c1 | c2).without(e);
          const bool found = std::any_of(circuits.begin(), circuits.end(),
                                         [pool](Subset c) { return pool.includes(c); });
          if (!found) {
            throw AxiomViolation("circuit elimination fails for " + to_string(c1) + " and " +
                                 to_string(c2) + " at element " + std::to_string(e));
          }
        }
      }
    }
  }

  // Every circuit is the fundamental circuit of some basis and element
  // outside it; dually for cocircuits.
  void derive_circuits() {
    for (Subset b : bases_) {
      for (Element e : (ground_ - b).elements()) {
        Subset c = Subset().with(e);
        for (Element f : b.elements()) {
          if (is_basis(b.without(f).with(e))) c = c.with(f);
        }
        circuits_.push_back(c);
      }
      for (Element f : b.elements()) {
        Subset c = Subset().with(f);
        for (Element e : (ground_ - b).elements()) {
          if (is_basis(b.without(f).with(e))) c = c.with(e);
        }
        cocircuits_.push_back(c);
      }
    }
    for (auto* family : {&circuits_, &cocircuits_}) {
      std::sort(family->begin(), family->end());
      family->erase(std::unique(family->begin(), family->end()), family->end());
    }
  }

  GroundSet universe_;
  Subset ground_;
  std::vector<Subset> bases_;
  std::vector<Subset> circuits_;
  std::vector<Subset> cocircuits_;
};

inline int rank(const Matroid& m, Subset x) { return m.rank(x); }
inline int corank(const Matroid& m, Subset x) { return m.corank(x); }
inline bool is_independent(const Matroid& m, Subset x) { return m.is_independent(x); }
inline bool is_spanning(const Matroid& m, Subset x) { return m.is_spanning(x); }

inline Matroid dual(const Matroid& m) {
  std::vector<Subset> bases;
  bases.reserve(m.bases().size());
  for (Subset b : m.bases()) bases.push_back(m.ground() - b);
  return Matroid::from_bases(m.universe(), m.ground(), std::move(bases), Validation::kTrusted);
}

/// M|X: the matroid on X whose independent sets are M's independent subsets of X.
inline Matroid restrict_to(const Matroid& m, Subset x) {
  const int rx = m.rank(x);
  std::vector<Subset> bases;
  for (Subset b : m.bases()) {
    if ((b & x).size() == rx) bases.push_back(b & x);
  }
  return Matroid::from_bases(m.universe(), x, std::move(bases), Validation::kTrusted);
}

/// M/X: the matroid on E\X with rank r_M(Y ∪ X) - r_M(X).
inline Matroid contract(const Matroid& m, Subset x) {
  const int rx = m.rank(x);
  std::vector<Subset> bases;
  for (Subset b : m.bases()) {
    if ((b & x).size() == rx) bases.push_back(b - x);
  }
  return Matroid::from_bases(m.universe(), m.ground() - x, std::move(bases), Validation::kTrusted);
}

/// The lexicographically least basis under `<`, built greedily.
inline Subset min_basis(const Matroid& m) {
  Subset kept;
  for (Element e : m.universe().order()) {
    if (m.ground().contains(e) && m.is_independent(kept.with(e))) kept = kept.with(e);
  }
  return kept;
}

inline std::vector<Subset> circuits_within(const Matroid& m, Subset x) {
  m.require_in_ground(x);
  std::vector<Subset> out;
  for (Subset c : m.circuits()) {
    if (x.includes(c)) out.push_back(c);
  }
  return out;
}

}  // namespace tutte3
