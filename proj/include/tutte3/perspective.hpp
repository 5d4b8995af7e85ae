#pragma once

#include <optional>
#include <string>
#include <utility>

#include "tutte3/error.hpp"
#include "tutte3/matroid.hpp"

namespace tutte3 {

/// Raised when (M, M') is not a matroid perspective. Carries the M-circuit
/// that is not a union of M'-circuits, when there is one.
class PerspectiveViolation : public Error {
 public:
  PerspectiveViolation(const std::string& what, std::optional<Subset> circuit)
      : Error(what), circuit_(circuit) {}

  std::optional<Subset> circuit() const { return circuit_; }

 private:
  std::optional<Subset> circuit_;
};

namespace detail {

inline void require_same_ground(const Matroid& m, const Matroid& mp) {
  if (!(m.universe() == mp.universe()) || m.ground() != mp.ground()) {
    throw DomainError("matroids of a perspective must share the ground set and its order");
  }
}

}  // namespace detail

/// The first M-circuit (in bitset order) that is not a union of
/// M'-circuits, or nullopt if (M, M') is a perspective.
inline std::optional<Subset> find_perspective_violation(const Matroid& m, const Matroid& mp) {
  detail::require_same_ground(m, mp);
  for (Subset c : m.circuits()) {
    Subset covered;
    for (Subset cp : mp.circuits()) {
      if (c.includes(cp)) covered = covered | cp;
    }
    if (covered != c) return c;
  }
  return std::nullopt;
}

/// True iff every circuit of m is a union of circuits of mp.
inline bool validate_perspective(const Matroid& m, const Matroid& mp) {
  return !find_perspective_violation(m, mp).has_value();
}

/// A validated matroid perspective (M, M').
class Perspective {
 public:
  /// Throws PerspectiveViolation naming the offending M-circuit.
  Perspective(Matroid m, Matroid mp) : m_(std::move(m)), mp_(std::move(mp)) {
    if (auto bad = find_perspective_violation(m_, mp_)) {
      throw PerspectiveViolation("M-circuit " + to_string(*bad) + " is not a union of M'-circuits",
                                 bad);
    }
  }

  /// The perspective (M, M).
  static Perspective diagonal(const Matroid& m) { return Perspective(m, m); }

  const Matroid& m() const { return m_; }
  const Matroid& mp() const { return mp_; }
  const GroundSet& universe() const { return m_.universe(); }
  Subset ground() const { return m_.ground(); }

  Perspective with_order(const GroundSet& universe) const {
    return Perspective(m_.with_order(universe), mp_.with_order(universe));
  }

  friend bool operator==(const Perspective&, const Perspective&) = default;

 private:
  Matroid m_;
  Matroid mp_;
};

/// ((M')^*, M^*).
inline Perspective dual_perspective(const Perspective& p) {
  return Perspective(dual(p.mp()), dual(p.m()));
}

/// r(M) - r(M') - (r_M(X) - r_{M'}(X)).
inline int rank_defect(const Perspective& p, Subset x) {
  const int d = p.m().rank() - p.mp().rank() - (p.m().rank(x) - p.mp().rank(x));
  if (d < 0) {
    throw PerspectiveViolation("negative rank defect at " + to_string(x), std::nullopt);
  }
  return d;
}

}  // namespace tutte3
