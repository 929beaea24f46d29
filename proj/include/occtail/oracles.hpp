#pragma once

#include <cstdint>

#include "occtail/instance.hpp"
#include "occtail/parallel.hpp"
#include "occtail/rational.hpp"

namespace occtail {

/// Result of a Monte Carlo run. Deterministic per (instance, samples, seed),
/// independent of thread count and execution policy.
struct MonteCarloEstimate {
    ExactRational estimate;   // hits / samples, reduced
    std::uint64_t hits = 0;
    std::uint64_t samples = 0;
    double standard_error = 0.0; // sqrt(p_hat (1 - p_hat) / samples)
    std::uint64_t seed = 0;

    friend bool operator==(const MonteCarloEstimate&, const MonteCarloEstimate&) = default;
};

/// Ground truth by brute force: enumerates every x-subset of the n(n-1)
/// labeled positions (each type owns n-1 of them) and counts those containing
/// at least z distinct designated types. Shares no counting logic with the
/// formula path beyond the binomial denominator. Throws BudgetError when
/// C(n(n-1), x) exceeds the budget.
ExactRational pvalue_exhaustive(const ProblemInstance& inst,
                                EnumerationBudget budget = {},
                                Exec exec = Exec::Parallel);

/// Uniform x-subset sampling. Samples are drawn in fixed-size chunks whose
/// generators are seeded from (seed, chunk index), so the estimate is a pure
/// function of (instance, samples, seed) whether chunks run serially or on
/// OpenMP threads.
MonteCarloEstimate pvalue_montecarlo(const ProblemInstance& inst,
                                     std::uint64_t samples, std::uint64_t seed,
                                     Exec exec = Exec::Parallel);

} // namespace occtail
