#pragma once

#include <cstdint>

#include "occtail/binomial.hpp"
#include "occtail/instance.hpp"
#include "occtail/parallel.hpp"
#include "occtail/rational.hpp"

namespace occtail {

/// Number of ways to pick s positions out of k blocks of n-1 identical
/// positions each so that every block contributes at least once, evaluated by
/// inclusion-exclusion over the empty blocks:
///
///     sum_{j=0}^{k} (-1)^j C(k,j) C((k-j)(n-1), s)
///
/// Equals inner_sum_enumerated(k, s, n, /*from zero*/false) for every k >= 1,
/// s >= 0, n >= 2, and is never negative.
BigInt inner_sum_closed(std::int64_t k, std::int64_t s, std::int64_t n,
                        const BinomialProvider& binom = shared_binomial());

/// The same quantity by direct enumeration of the count vectors
/// (i_1..i_k), sum s, each component in [1, n-1] — or [0, n-1] with
/// components_from_zero set, in which case the result is C(k(n-1), s).
/// Throws BudgetError when the enumeration would exceed the budget.
BigInt inner_sum_enumerated(std::int64_t k, std::int64_t s, std::int64_t n,
                            bool components_from_zero,
                            EnumerationBudget budget = {},
                            const BinomialProvider& binom = shared_binomial());

/// Left-hand side of the multi-factor Vandermonde convolution
///
///     sum_{k_1..k_{f-1} in [0,n]} C(n,k_1) ... C(n,k_{f-1}) C(n, x - sum k_j)
///
/// by direct enumeration (f = factor_count polynomial factors). Must equal
/// C(factor_count * n, x).
BigInt generalized_vandermonde_lhs(std::int64_t n, std::int64_t factor_count,
                                   std::int64_t x,
                                   EnumerationBudget budget = {},
                                   const BinomialProvider& binom = shared_binomial());

/// Number of x-subsets of the n(n-1) positions containing at least z distinct
/// designated types, by the closed formula:
///
///     sum_{k=z}^{min(x,y)} C(y,k) sum_{s=k}^{x} inner_sum_closed(k,s,n)
///                                  * C(pool(mode) * (n-1), x-s)
///
/// Requires 1 <= z <= min(x, y); the z = 0 and z > min(x, y) cases are
/// handled by pvalue_fast directly. Exact only in Corrected mode; in
/// PaperFaithful mode the count can exceed C(n(n-1), x) when x < y.
BigInt favorable_count_fast(const ProblemInstance& inst, RemainderPoolMode mode,
                            Exec exec = Exec::Parallel,
                            const BinomialProvider& binom = shared_binomial());

/// Tail probability P(at least z distinct designated types in the draw),
/// favorable_count_fast / C(n(n-1), x) reduced. Returns 1/1 for z <= 0 and
/// 0/1 for z > min(x, y). In Corrected mode the result is always in [0, 1].
ExactRational pvalue_fast(const ProblemInstance& inst, RemainderPoolMode mode,
                          Exec exec = Exec::Parallel,
                          const BinomialProvider& binom = shared_binomial());

/// Same contract and same value as pvalue_fast, computed the slow way: count
/// vectors are enumerated term by term instead of collapsed. Kept as the
/// independent reference for the closed formula. Cost grows like
/// min(x,y) * (n-1)^min(x,y); the exact step count is checked against the
/// budget up front and BudgetError names both numbers.
ExactRational pvalue_naive(const ProblemInstance& inst, RemainderPoolMode mode,
                           EnumerationBudget budget = {},
                           const BinomialProvider& binom = shared_binomial());

/// Steps pvalue_naive would enumerate: sum_{k=z}^{min(x,y)} C(x, k) complete
/// count vectors. Exposed so callers can budget-check without running.
BigInt naive_step_count(const ProblemInstance& inst,
                        const BinomialProvider& binom = shared_binomial());

} // namespace occtail
