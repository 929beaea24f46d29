#include <doctest.h>

#include <algorithm>

#include "occtail/engine.hpp"
#include "occtail/errors.hpp"
#include "occtail/oracles.hpp"

using namespace occtail;

namespace {

// |estimate - exact| <= 4 * sqrt(p_hat (1 - p_hat) / samples), compared in
// exact arithmetic: (diff^2) * samples <= 16 * p_hat * (1 - p_hat).
bool within_four_standard_errors(const MonteCarloEstimate& mc, const ExactRational& exact) {
    const ExactRational diff = (mc.estimate - exact).abs();
    const ExactRational lhs =
        diff * diff * make_rational(static_cast<long>(mc.samples), 1);
    const ExactRational rhs = make_rational(16, 1) * mc.estimate *
                              (rational_one() - mc.estimate);
    return lhs <= rhs;
}

} // namespace

TEST_CASE("pvalue_exhaustive: worked examples") {
    CHECK(pvalue_exhaustive({3, 2, 1, 1}) == make_rational(9, 15));
    CHECK(pvalue_exhaustive({2, 2, 1, 1}) == rational_one());
    CHECK(pvalue_exhaustive({4, 2, 3, 1}) == make_rational(63, 66));
    CHECK(pvalue_exhaustive({3, 0, 2, 1}) == rational_zero());
    CHECK(pvalue_exhaustive({3, 0, 2, 0}) == rational_one());
}

TEST_CASE("pvalue_exhaustive: agrees with the corrected closed formula") {
    for (std::int64_t n = 2; n <= 4; ++n) {
        const std::int64_t x_hi = std::min(n * (n - 1), std::int64_t{8});
        for (std::int64_t x = 0; x <= x_hi; ++x) {
            for (std::int64_t y = 0; y <= n; ++y) {
                for (std::int64_t z = 0; z <= std::min(x, y) + 1; ++z) {
                    const ProblemInstance inst{n, x, y, z};
                    REQUIRE(pvalue_exhaustive(inst) ==
                            pvalue_fast(inst, RemainderPoolMode::Corrected));
                }
            }
        }
    }
}

TEST_CASE("pvalue_exhaustive: serial and parallel agree") {
    for (std::int64_t x = 0; x <= 6; ++x) {
        const ProblemInstance inst{4, x, 3, std::min<std::int64_t>(x, 2)};
        REQUIRE(pvalue_exhaustive(inst, {}, Exec::Serial) ==
                pvalue_exhaustive(inst, {}, Exec::Parallel));
    }
}

TEST_CASE("pvalue_exhaustive: refuses oversized enumerations up front") {
    CHECK_THROWS_WITH_AS(static_cast<void>(pvalue_exhaustive({30, 15, 5, 2})),
                         doctest::Contains("subsets"), BudgetError);
}

TEST_CASE("pvalue_montecarlo: deterministic per (instance, samples, seed)") {
    const ProblemInstance inst{4, 5, 2, 1};
    const MonteCarloEstimate a = pvalue_montecarlo(inst, 20'000, 99);
    const MonteCarloEstimate b = pvalue_montecarlo(inst, 20'000, 99);
    REQUIRE(a == b);

    const MonteCarloEstimate serial = pvalue_montecarlo(inst, 20'000, 99, Exec::Serial);
    REQUIRE(a == serial);

    const MonteCarloEstimate other_seed = pvalue_montecarlo(inst, 20'000, 100);
    CHECK(other_seed.estimate != a.estimate); // overwhelmingly likely for this instance
}

TEST_CASE("pvalue_montecarlo: z = 0 hits on every sample") {
    const MonteCarloEstimate mc = pvalue_montecarlo({5, 3, 2, 0}, 10, 1);
    CHECK(mc.estimate == rational_one());
    CHECK(mc.standard_error == 0.0);
}

TEST_CASE("pvalue_montecarlo: estimates stay near the exact values") {
    const ProblemInstance instances[] = {
        {3, 2, 1, 1}, // exact 3/5
        {3, 1, 1, 1}, // exact 1/3
        {4, 6, 3, 2},
        {6, 10, 4, 2},
    };
    for (const ProblemInstance& inst : instances) {
        const ExactRational exact = pvalue_fast(inst, RemainderPoolMode::Corrected);
        const MonteCarloEstimate mc = pvalue_montecarlo(inst, 100'000, 20080807);
        CAPTURE(inst.n);
        CAPTURE(inst.x);
        REQUIRE(within_four_standard_errors(mc, exact));
    }
}

TEST_CASE("pvalue_montecarlo: sample count below one is rejected") {
    CHECK_THROWS_AS(static_cast<void>(pvalue_montecarlo({3, 2, 1, 1}, 0, 1)), InputError);
}

TEST_CASE("pvalue_montecarlo: impossible thresholds estimate zero") {
    const MonteCarloEstimate mc = pvalue_montecarlo({3, 2, 1, 2}, 5'000, 3);
    CHECK(mc.estimate == rational_zero());
}
