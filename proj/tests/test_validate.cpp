#include <doctest.h>

#include "occtail/errors.hpp"
#include "occtail/validate.hpp"

using namespace occtail;

TEST_CASE("run_validation: clean grid, deterministic across policies") {
    ValidationOptions options;
    options.max_n = 4;
    const ValidationSummary parallel = run_validation(options);
    CHECK(parallel.naive_checks > 0);
    CHECK(parallel.oracle_checks > 0);
    CHECK(parallel.mismatches.empty());

    options.exec = Exec::Serial;
    const ValidationSummary serial = run_validation(options);
    CHECK(serial.naive_checks == parallel.naive_checks);
    CHECK(serial.oracle_checks == parallel.oracle_checks);
    CHECK(serial.mismatches.size() == parallel.mismatches.size());
}

TEST_CASE("run_validation: paper remainder mode disagrees with the oracle") {
    ValidationOptions options;
    options.max_n = 4;
    options.remainder = RemainderPoolMode::PaperFaithful;
    const ValidationSummary summary = run_validation(options);
    REQUIRE_FALSE(summary.mismatches.empty());
    // fast and naive share the pool choice, so only the oracle can disagree
    for (const Mismatch& mismatch : summary.mismatches) {
        CHECK(mismatch.comparison == "fast-vs-exhaustive");
        CHECK(mismatch.instance.x < mismatch.instance.y);
    }
    // mismatch order is grid order, so the first one is stable; the earliest
    // point where the pool choice can matter needs x - s > 0 headroom, hence
    // x = 2 with all three types designated
    CHECK(summary.mismatches.front().instance == ProblemInstance{3, 2, 3, 1});
}

TEST_CASE("run_validation: a tiny budget surfaces as BudgetError") {
    ValidationOptions options;
    options.max_n = 5;
    options.budget = EnumerationBudget{1};
    CHECK_THROWS_AS(static_cast<void>(run_validation(options)), BudgetError);
}
