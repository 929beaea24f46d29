#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "occtail/instance.hpp"
#include "occtail/parallel.hpp"

namespace occtail {

/// Grid limits for cross-checking the closed formula against the slow
/// reference and the exhaustive oracle.
struct ValidationOptions {
    std::int64_t max_n = 8;           // fast-vs-naive grid: 2..max_n
    std::int64_t max_x = 12;          // x capped at min(n(n-1), max_x)
    std::int64_t max_y = 5;           // y capped at min(n, max_y)
    std::int64_t oracle_max_n = 4;    // fast-vs-exhaustive grid: 2..oracle_max_n
    // When set, run only this remainder mode (and compare it against the
    // oracle, which mismatches in PaperFaithful mode for x < y). Default:
    // fast-vs-naive in both modes, fast-vs-exhaustive in Corrected.
    std::optional<RemainderPoolMode> remainder;
    EnumerationBudget budget;
    Exec exec = Exec::Parallel;
};

struct Mismatch {
    ProblemInstance instance;
    RemainderPoolMode remainder = RemainderPoolMode::Corrected;
    std::string comparison; // "fast-vs-naive" or "fast-vs-exhaustive"
    std::string fast_value;
    std::string reference_value;
};

struct ValidationSummary {
    std::uint64_t naive_checks = 0;
    std::uint64_t oracle_checks = 0;
    std::vector<Mismatch> mismatches; // deterministic order (grid order)
};

/// Runs the full grid. Instance results are computed in parallel when
/// requested; mismatch order and counts are independent of thread count.
ValidationSummary run_validation(const ValidationOptions& options);

} // namespace occtail
