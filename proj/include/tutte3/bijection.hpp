#pragma once

#include <algorithm>
#include <vector>

#include "tutte3/activities.hpp"
#include "tutte3/compatible.hpp"
#include "tutte3/matroid.hpp"
#include "tutte3/perspective.hpp"
#include "tutte3/polynomial.hpp"

namespace tutte3 {

/// One row of the activities/compatible-set correspondence.
struct BijectionRow {
  Subset basis;     // B: independent in M, spanning in M'
  Subset internal;  // Int_{M'}(B)
  Subset external;  // Ext_M(B)
  Subset image;     // f(B)
  Exponents monomial;

  friend bool operator==(const BijectionRow&, const BijectionRow&) = default;
};

/// Ascending size, then lexicographic under `<`.
inline bool size_lex_less(const GroundSet& universe, Subset a, Subset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return universe.lex_compare(a, b) < 0;
}

inline void sort_size_lex(const GroundSet& universe, std::vector<Subset>& sets) {
  std::sort(sets.begin(), sets.end(),
            [&universe](Subset a, Subset b) { return size_lex_less(universe, a, b); });
}

inline bool is_independent_spanning(const Perspective& p, Subset b) {
  return p.m().is_independent(b) && p.mp().is_spanning(b);
}

/// Every B independent in M and spanning in M', in bitset order.
inline std::vector<Subset> independent_spanning_sets(const Perspective& p) {
  std::vector<Subset> out;
  for_each_subset(p.ground(), [&](Subset b) {
    if (is_independent_spanning(p, b)) out.push_back(b);
  });
  return out;
}

namespace detail {

inline Subset forward_unchecked(const Perspective& p, Subset b) {
  return (b - internally_active(p.mp(), b)) | externally_active(p.m(), b);
}

inline Subset backward_unchecked(const Perspective& p, Subset x) {
  return (x - min_basis(dual(restrict_to(p.m(), x)))) | min_basis(contract(p.mp(), x));
}

}  // namespace detail

/// f(B) = B \ Int_{M'}(B) ∪ Ext_M(B).
inline Subset forward(const Perspective& p, Subset b) {
  p.m().require_in_ground(b);
  if (!is_independent_spanning(p, b)) {
    throw PreconditionError("forward: " + to_string(b) +
                            " is not independent in M and spanning in M'");
  }
  return detail::forward_unchecked(p, b);
}

/// g(X) = X \ B_min((M|X)*) ∪ B_min(M'/X).
inline Subset backward(const Perspective& p, Subset x) {
  if (!in_compatible_family(p, x)) {
    throw PreconditionError("backward: " + to_string(x) + " is not in D(M,M',<)");
  }
  return detail::backward_unchecked(p, x);
}

inline BijectionRow make_row(const Perspective& p, Subset b) {
  BijectionRow row;
  row.basis = b;
  row.internal = internally_active(p.mp(), b);
  row.external = externally_active(p.m(), b);
  row.image = (b - row.internal) | row.external;
  row.monomial = {static_cast<unsigned>(row.internal.size()),
                  static_cast<unsigned>(row.external.size()),
                  static_cast<unsigned>(rank_defect(p, b))};
  return row;
}

/// One row per B independent in M and spanning in M', ordered by size and
/// then lexicographically.
inline std::vector<BijectionRow> bijection_table(const Perspective& p) {
  std::vector<Subset> sets = independent_spanning_sets(p);
  sort_size_lex(p.universe(), sets);
  std::vector<BijectionRow> rows;
  rows.reserve(sets.size());
  for (Subset b : sets) rows.push_back(make_row(p, b));
  return rows;
}

}  // namespace tutte3
