#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

#include "tutte3/activities.hpp"
#include "tutte3/bijection.hpp"
#include "tutte3/compatible.hpp"
#include "tutte3/error.hpp"
#include "tutte3/matroid.hpp"
#include "tutte3/perspective.hpp"
#include "tutte3/polynomial.hpp"

namespace tutte3 {

/// Worker count for the subset sums. 0 picks hardware concurrency once the
/// ground set is large enough to benefit.
struct Execution {
  unsigned threads = 0;
};

namespace detail {

inline constexpr int kParallelThreshold = 14;

/// Sums term(S, acc) over all S ⊆ ground. Each worker folds a contiguous
/// range of subsets; partial sums are merged in range order. Polynomial
/// addition is exact, so the result does not depend on the worker count.
template <typename Term>
Polynomial sum_over_subsets(Subset ground, Term&& term, Execution exec) {
  const int m = ground.size();
  const std::uint64_t total = std::uint64_t{1} << m;
  std::uint64_t workers = exec.threads;
  if (workers == 0) {
    workers = m >= kParallelThreshold ? std::max(1U, std::thread::hardware_concurrency()) : 1;
  }
  workers = std::min(workers, total);

  auto fold = [&](std::uint64_t begin, std::uint64_t end, Polynomial& acc) {
    for (std::uint64_t i = begin; i < end; ++i) term(deposit_bits(i, ground), acc);
  };

  if (workers <= 1) {
    Polynomial acc;
    fold(0, total, acc);
    return acc;
  }

  std::vector<Polynomial> partial(workers);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t begin = total * w / workers;
      const std::uint64_t end = total * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] {
        try {
          fold(begin, end, partial[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  Polynomial out;
  for (std::uint64_t w = 0; w < workers; ++w) {
    if (errors[w]) std::rethrow_exception(errors[w]);
    out += partial[w];
  }
  return out;
}

inline unsigned as_exp(int k) { return static_cast<unsigned>(k); }

}  // namespace detail

/// Activities expansion: sum over B independent in M and spanning in M' of
/// x^|Int_{M'}(B)| y^|Ext_M(B)| z^(rank defect of B).
inline Polynomial tutte_activities(const Perspective& p, Execution exec = {}) {
  return detail::sum_over_subsets(
      p.ground(),
      [&p](Subset b, Polynomial& acc) {
        if (!is_independent_spanning(p, b)) return;
        acc.add_term({detail::as_exp(internally_active(p.mp(), b).size()),
                      detail::as_exp(externally_active(p.m(), b).size()),
                      detail::as_exp(rank_defect(p, b))});
      },
      exec);
}

/// Compatible-sets expansion: sum over X ∈ D(M,M',<) of
/// x^r(M'/X) y^r*(M|X) z^(rank defect of X).
inline Polynomial tutte_compatible(const Perspective& p, Execution exec = {}) {
  return detail::sum_over_subsets(
      p.ground(),
      [&p](Subset x, Polynomial& acc) {
        if (!in_compatible_family(p, x)) return;
        const int rm = p.m().rank(x);
        acc.add_term({detail::as_exp(p.mp().rank() - p.mp().rank(x)),
                      detail::as_exp(x.size() - rm), detail::as_exp(rank_defect(p, x))});
      },
      exec);
}

/// Subset rank-generating expansion, used as an order-free oracle:
/// sum over A ⊆ E of (x-1)^(r(M')-r_{M'}(A)) (y-1)^(|A|-r_M(A)) z^(rank defect of A).
inline Polynomial tutte_rank_generating(const Perspective& p, Execution exec = {}) {
  // Tally exponent triples first, then expand the shifted powers once.
  const Polynomial tally = detail::sum_over_subsets(
      p.ground(),
      [&p](Subset a, Polynomial& acc) {
        acc.add_term({detail::as_exp(p.mp().rank() - p.mp().rank(a)),
                      detail::as_exp(a.size() - p.m().rank(a)), detail::as_exp(rank_defect(p, a))});
      },
      exec);
  const Polynomial one = Polynomial::constant(1);
  return substitute(tally, Polynomial::x() - one, Polynomial::y() - one, Polynomial::z());
}

/// Crapo's bivariate activities formula over the bases of M (z-free).
inline Polynomial tutte_bivariate_crapo(const Matroid& m) {
  Polynomial out;
  for (Subset b : m.bases()) {
    out.add_term({detail::as_exp(internally_active(m, b).size()),
                  detail::as_exp(externally_active(m, b).size()), 0});
  }
  return out;
}

/// Kochol's expansion: sum over X ∈ D(M,<) of x^r(M/X) y^r*(M|X).
inline Polynomial tutte_bivariate_kochol(const Matroid& m) {
  const Perspective p = Perspective::diagonal(m);
  Polynomial out;
  for_each_subset(m.ground(), [&](Subset x) {
    if (!in_compatible_family(p, x)) return;
    const int rx = m.rank(x);
    out.add_term({detail::as_exp(m.rank() - rx), detail::as_exp(x.size() - rx), 0});
  });
  return out;
}

/// Sum over X with E\X (M,<)-compatible of (x-1)^r(M/X) y^r*(M|X), expanded.
inline Polynomial tutte_m0_expansion(const Matroid& m) {
  Polynomial tally;
  for_each_subset(m.ground(), [&](Subset x) {
    if (!is_compatible(m, m.ground() - x)) return;
    const int rx = m.rank(x);
    tally.add_term({detail::as_exp(m.rank() - rx), detail::as_exp(x.size() - rx), 0});
  });
  return substitute(tally, Polynomial::x() - Polynomial::constant(1), Polynomial::y(),
                    Polynomial::z());
}

/// T_{M,0}(x,y,z), computed from the activities expansion of (M, rank 0)
/// and checked against T_M(z+1, y).
inline Polynomial specialize_m0(const Matroid& m) {
  const Matroid zero = Matroid::from_bases(m.universe(), m.ground(), {Subset()}, Validation::kTrusted);
  const Polynomial direct = tutte_activities(Perspective(m, zero));
  const Polynomial shifted = substitute(tutte_bivariate_crapo(m),
                                        Polynomial::z() + Polynomial::constant(1), Polynomial::y(),
                                        Polynomial::z());
  if (direct != shifted) {
    throw ConsistencyError("T_{M,0}(x,y,z) = " + to_canonical_string(direct) +
                           " differs from T_M(z+1,y) = " + to_canonical_string(shifted));
  }
  return direct;
}

}  // namespace tutte3
