#include "occtail/validate.hpp"

#include <algorithm>
#include <exception>

#include "occtail/engine.hpp"
#include "occtail/oracles.hpp"

namespace occtail {
namespace {

struct GridPoint {
    ProblemInstance instance;
    RemainderPoolMode remainder;
    bool against_oracle; // false: fast vs naive
};

std::vector<GridPoint> build_grid(const ValidationOptions& options) {
    std::vector<GridPoint> points;
    std::vector<RemainderPoolMode> naive_modes;
    if (options.remainder.has_value()) {
        naive_modes = {*options.remainder};
    } else {
        naive_modes = {RemainderPoolMode::Corrected, RemainderPoolMode::PaperFaithful};
    }
    const RemainderPoolMode oracle_mode =
        options.remainder.value_or(RemainderPoolMode::Corrected);

    for (std::int64_t n = 2; n <= options.max_n; ++n) {
        const std::int64_t x_hi = std::min(n * (n - 1), options.max_x);
        const std::int64_t y_hi = std::min(n, options.max_y);
        for (std::int64_t x = 0; x <= x_hi; ++x) {
            for (std::int64_t y = 0; y <= y_hi; ++y) {
                for (std::int64_t z = 0; z <= std::min(x, y); ++z) {
                    const ProblemInstance inst{n, x, y, z};
                    for (const RemainderPoolMode mode : naive_modes) {
                        points.push_back({inst, mode, false});
                    }
                    if (n <= options.oracle_max_n) {
                        points.push_back({inst, oracle_mode, true});
                    }
                }
            }
        }
    }
    return points;
}

} // namespace

ValidationSummary run_validation(const ValidationOptions& options) {
    const std::vector<GridPoint> points = build_grid(options);
    std::vector<std::optional<Mismatch>> results(points.size());
    std::vector<std::exception_ptr> errors(points.size());

    // Exceptions (e.g. a user-set budget tripping) must not escape the OpenMP
    // region; capture per point and rethrow the first in grid order.
    const auto check_point = [&](std::size_t index) {
        try {
            const GridPoint& point = points[index];
            const ExactRational fast =
                pvalue_fast(point.instance, point.remainder, Exec::Serial);
            ExactRational reference;
            if (point.against_oracle) {
                reference = pvalue_exhaustive(point.instance, options.budget, Exec::Serial);
            } else {
                reference = pvalue_naive(point.instance, point.remainder, options.budget);
            }
            if (fast != reference) {
                results[index] = Mismatch{
                    point.instance,
                    point.remainder,
                    point.against_oracle ? "fast-vs-exhaustive" : "fast-vs-naive",
                    fast.to_fraction_string(),
                    reference.to_fraction_string(),
                };
            }
        } catch (...) {
            errors[index] = std::current_exception();
        }
    };

    if (options.exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 32)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(points.size()); ++i) {
            check_point(static_cast<std::size_t>(i));
        }
    } else {
        for (std::size_t i = 0; i < points.size(); ++i) {
            check_point(i);
        }
    }
    for (const std::exception_ptr& error : errors) {
        if (error) {
            std::rethrow_exception(error);
        }
    }

    ValidationSummary summary;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].against_oracle) {
            ++summary.oracle_checks;
        } else {
            ++summary.naive_checks;
        }
        if (results[i].has_value()) {
            summary.mismatches.push_back(*results[i]);
        }
    }
    return summary;
}

} // namespace occtail
