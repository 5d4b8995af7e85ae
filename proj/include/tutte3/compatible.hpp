#pragma once

#include <algorithm>
#include <vector>

#include "tutte3/matroid.hpp"
#include "tutte3/perspective.hpp"

namespace tutte3 {

namespace detail {

inline bool compatible_with(const std::vector<Subset>& circuits, const GroundSet& universe,
                            Subset x) {
  return std::none_of(circuits.begin(), circuits.end(), [&](Subset c) {
    const Subset meet = x & c;
    return meet.size() == 1 && meet.contains(universe.min_element(c));
  });
}

}  // namespace detail

/// (M,<)-compatible: no M-circuit C with X ∩ C = {min(C)}.
inline bool is_compatible(const Matroid& m, Subset x) {
  m.require_in_ground(x);
  return detail::compatible_with(m.circuits(), m.universe(), x);
}

/// X ∈ D(M,M',<): X is ((M')*,<)-compatible and E\X is (M,<)-compatible.
inline bool in_compatible_family(const Perspective& p, Subset x) {
  p.m().require_in_ground(x);
  return detail::compatible_with(p.mp().cocircuits(), p.universe(), x) &&
         detail::compatible_with(p.m().circuits(), p.universe(), p.ground() - x);
}

/// D(M,M',<) by exhaustive enumeration, sorted by bitset value.
inline std::vector<Subset> compatible_family(const Perspective& p) {
  std::vector<Subset> out;
  for_each_subset(p.ground(), [&](Subset x) {
    if (in_compatible_family(p, x)) out.push_back(x);
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// D(M,<) = D(M,M,<).
inline std::vector<Subset> compatible_family_single(const Matroid& m) {
  return compatible_family(Perspective::diagonal(m));
}

}  // namespace tutte3
