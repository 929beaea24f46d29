#pragma once

#include <cstdint>
#include <string>

namespace occtail {

/// Which positions may fill the non-designated remainder of a draw.
///
/// The closed formula multiplies each inner term by C(pool * (n-1), x - s)
/// where pool is the number of element types whose copies are still free.
///   PaperFaithful: pool = n - min(x, y). Overcounts when x < y (designated
///                  types leak into the remainder pool); results can exceed 1.
///   Corrected:     pool = n - y. A true probability for every instance.
/// The two coincide whenever x >= y.
enum class RemainderPoolMode {
    PaperFaithful,
    Corrected,
};

std::string to_string(RemainderPoolMode mode);

/// One query: n element types each occurring n-1 times, x items drawn without
/// replacement, y designated types, threshold z ("z or more distinct
/// designated types appear").
struct ProblemInstance {
    std::int64_t n = 2;
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::int64_t z = 0;

    /// Total number of drawable positions, n*(n-1).
    std::int64_t positions() const { return n * (n - 1); }

    /// Throws InputError naming the violated invariant:
    /// n >= 2, 0 <= x <= n(n-1), 0 <= y <= n, z >= 0.
    void validate() const;

    friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;
};

/// Cap on enumeration steps for the slow paths. Checked up front against the
/// exact number of steps the enumeration would take; exceeding it raises
/// BudgetError naming both numbers.
struct EnumerationBudget {
    std::uint64_t limit = 100'000'000;
};

} // namespace occtail
