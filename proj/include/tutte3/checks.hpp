#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "tutte3/bijection.hpp"
#include "tutte3/compatible.hpp"
#include "tutte3/perspective.hpp"
#include "tutte3/tutte.hpp"

namespace tutte3 {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;  // counterexample when failed
};

using SetFormatter = std::function<std::string(Subset)>;

/// Uniform random total order on {1..n}. Fisher-Yates driven directly by the
/// 64-bit Mersenne twister, so a seed gives the same order on every platform.
inline std::vector<Element> random_order(int n, std::mt19937_64& rng) {
  std::vector<Element> order = GroundSet::natural_order(n);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(order[static_cast<std::size_t>(i)], order[j]);
  }
  return order;
}

/// Runs the bijection round trips, the proof-level identities, the
/// interval partition, three-way polynomial agreement and order invariance.
/// Each failure records the first offending set.
inline std::vector<CheckResult> run_property_checks(const Perspective& p, std::uint64_t seed,
                                                    const SetFormatter& fmt = [](Subset s) {
                                                      return to_string(s);
                                                    }) {
  std::vector<CheckResult> results;
  const std::vector<Subset> sets = independent_spanning_sets(p);
  const std::vector<Subset> family = compatible_family(p);
  auto fail = [&](CheckResult& r, const std::string& detail) {
    if (r.passed) {
      r.passed = false;
      r.detail = detail;
    }
  };

  CheckResult into_family{"f maps into D(M,M',<)", true, {}};
  CheckResult left_inverse{"g(f(B)) = B", true, {}};
  CheckResult identities{"Ext = Bmin((M|X)*), Int = Bmin(M'/X), rank defects agree", true, {}};
  for (Subset b : sets) {
    const BijectionRow row = make_row(p, b);
    const Subset x = row.image;
    if (!in_compatible_family(p, x)) fail(into_family, "B=" + fmt(b) + " maps to " + fmt(x));
    if (!in_compatible_family(p, x)) continue;
    if (detail::backward_unchecked(p, x) != b) fail(left_inverse, "B=" + fmt(b));
    const Subset ext_min = min_basis(dual(restrict_to(p.m(), x)));
    const Subset int_min = min_basis(contract(p.mp(), x));
    if (ext_min != row.external || int_min != row.internal ||
        p.m().rank(b) - p.mp().rank(b) != p.m().rank(x) - p.mp().rank(x)) {
      fail(identities, "B=" + fmt(b) + ", X=" + fmt(x));
    }
  }

  CheckResult into_domain{"g maps D(M,M',<) into independent-spanning sets", true, {}};
  CheckResult right_inverse{"f(g(X)) = X", true, {}};
  for (Subset x : family) {
    const Subset b = detail::backward_unchecked(p, x);
    if (!is_independent_spanning(p, b)) {
      fail(into_domain, "X=" + fmt(x) + " maps to " + fmt(b));
      continue;
    }
    if (detail::forward_unchecked(p, b) != x) fail(right_inverse, "X=" + fmt(x));
  }

  CheckResult cardinality{"|D(M,M',<)| = #independent-spanning sets", true, {}};
  if (family.size() != sets.size()) {
    cardinality.passed = false;
    cardinality.detail = std::to_string(family.size()) + " vs " + std::to_string(sets.size());
  }

  CheckResult partition{"intervals [B\\Int, B u Ext] partition 2^E", true, {}};
  {
    std::vector<std::uint8_t> cover(std::size_t{1} << p.universe().size(), 0);
    std::uint64_t weight = 0;
    for (Subset b : sets) {
      const BijectionRow row = make_row(p, b);
      const Subset low = b - row.internal;
      const Subset high = b | row.external;
      if (!(high.includes(row.image) && row.image.includes(low))) {
        fail(partition, "f(B) outside its interval for B=" + fmt(b));
      }
      weight += std::uint64_t{1} << (row.internal.size() + row.external.size());
      const Subset free_part = high - low;
      for_each_subset(free_part, [&](Subset s) {
        auto& c = cover[(low | s).bits()];
        if (c < 2) ++c;
      });
    }
    for_each_subset(p.ground(), [&](Subset s) {
      if (cover[s.bits()] != 1) {
        fail(partition, fmt(s) + (cover[s.bits()] == 0 ? " is not covered" : " is covered twice"));
      }
    });
    if (weight != (std::uint64_t{1} << p.ground().size())) {
      fail(partition, "sum of 2^(|Int|+|Ext|) is " + std::to_string(weight));
    }
  }

  CheckResult agreement{"activities = compatible = rank-generating", true, {}};
  const Polynomial reference = tutte_activities(p);
  {
    const Polynomial compat = tutte_compatible(p);
    const Polynomial rankgen = tutte_rank_generating(p);
    if (compat != reference || rankgen != reference) {
      agreement.passed = false;
      agreement.detail = to_canonical_string(reference) + " / " + to_canonical_string(compat) +
                         " / " + to_canonical_string(rankgen);
    }
  }

  CheckResult invariance{"polynomial invariant under 10 random orders", true, {}};
  {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 10 && invariance.passed; ++i) {
      const std::vector<Element> order = random_order(p.universe().size(), rng);
      const Polynomial t = tutte_activities(p.with_order(GroundSet(p.universe().size(), order)));
      if (t != reference) {
        std::string listed;
        for (Element e : order) listed += (listed.empty() ? "" : " ") + std::to_string(e);
        fail(invariance, "order " + listed + " gives " + to_canonical_string(t));
      }
    }
  }

  for (auto* r : {&into_family, &into_domain, &left_inverse, &right_inverse, &cardinality, &identities, &partition,
                  &agreement, &invariance}) {
    results.push_back(std::move(*r));
  }
  return results;
}

}  // namespace tutte3
