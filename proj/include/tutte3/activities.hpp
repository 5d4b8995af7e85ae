#pragma once

#include <vector>

#include "tutte3/matroid.hpp"

namespace tutte3 {

namespace detail {

// {e ∈ candidates : some C in family with C ⊆ base ∪ e, e ∈ C, min(C) = e}
inline Subset active_in(const std::vector<Subset>& family, const GroundSet& universe, Subset base,
                        Subset candidates) {
  Subset active;
  for (Subset c : family) {
    const Subset outside = c - base;
    if (outside.size() != 1 || !candidates.includes(outside)) continue;
    const Element e = outside.elements().front();
    if (universe.min_element(c) == e) active = active.with(e);
  }
  return active;
}

}  // namespace detail

/// Ext_M(X): elements e ∉ X such that X ∪ e contains an M-circuit with
/// minimum e.
inline Subset externally_active(const Matroid& m, Subset x) {
  m.require_in_ground(x);
  return detail::active_in(m.circuits(), m.universe(), x, m.ground() - x);
}

/// Int_M(X): elements e ∈ X such that (E\X) ∪ e contains an M*-circuit
/// with minimum e.
inline Subset internally_active(const Matroid& m, Subset x) {
  m.require_in_ground(x);
  return detail::active_in(m.cocircuits(), m.universe(), m.ground() - x, x);
}

}  // namespace tutte3
