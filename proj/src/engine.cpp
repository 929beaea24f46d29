#include "occtail/engine.hpp"

#include <algorithm>
#include <string>

#include "occtail/errors.hpp"

namespace occtail {
namespace {

void check_budget(const BigInt& steps, const EnumerationBudget& budget, const char* what) {
    if (steps > budget.limit) {
        throw BudgetError(std::string("oracle too large: ") + what + " needs " +
                          steps.get_str() + " steps, budget is " +
                          std::to_string(budget.limit));
    }
}

// Types whose copies fill the non-designated remainder of the draw.
std::int64_t remainder_pool_types(const ProblemInstance& inst, RemainderPoolMode mode) {
    const std::int64_t chosen =
        mode == RemainderPoolMode::PaperFaithful ? std::min(inst.x, inst.y) : inst.y;
    return inst.n - chosen;
}

void require(bool ok, const char* message) {
    if (!ok) {
        throw InputError(message);
    }
}

} // namespace

BigInt inner_sum_closed(std::int64_t k, std::int64_t s, std::int64_t n,
                        const BinomialProvider& binom) {
    require(k >= 1, "inner_sum_closed requires k >= 1");
    require(s >= 0, "inner_sum_closed requires s >= 0");
    require(n >= 2, "inner_sum_closed requires n >= 2");
    // Alternating correction over how many of the k blocks stay empty. The
    // j = k term is C(0, s), nonzero only at s = 0, where it is what makes
    // the sum agree with the enumeration (and stay nonnegative).
    BigInt total = 0;
    for (std::int64_t j = 0; j <= k; ++j) {
        BigInt term = binom.binomial(k, j) * binom.binomial((k - j) * (n - 1), s);
        if (j % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

BigInt inner_sum_enumerated(std::int64_t k, std::int64_t s, std::int64_t n,
                            bool components_from_zero, EnumerationBudget budget,
                            const BinomialProvider& binom) {
    require(k >= 1, "inner_sum_enumerated requires k >= 1");
    require(s >= 0, "inner_sum_enumerated requires s >= 0");
    require(n >= 2, "inner_sum_enumerated requires n >= 2");
    const std::int64_t lo = components_from_zero ? 0 : 1;
    // Exact count of complete vectors, ignoring the <= n-1 clamp (which only
    // ever removes vectors): compositions of s into k parts >= lo. There is
    // no positive composition of 0.
    const BigInt steps = components_from_zero ? binom.binomial(s + k - 1, k - 1)
                        : s == 0              ? BigInt(0)
                                              : binom.binomial(s - 1, k - 1);
    check_budget(steps, budget, "count-vector enumeration");

    const std::int64_t cap = n - 1;
    BigInt total = 0;
    // Depth-first over components; prod carries the partial product.
    auto walk = [&](auto&& self, std::int64_t index, std::int64_t remaining,
                    const BigInt& prod) -> void {
        if (index == k - 1) {
            if (remaining >= lo && remaining <= cap) {
                total += prod * binom.binomial(cap, remaining);
            }
            return;
        }
        const std::int64_t slots_left = k - 1 - index;
        const std::int64_t hi = std::min(cap, remaining - lo * slots_left);
        for (std::int64_t i = lo; i <= hi; ++i) {
            self(self, index + 1, remaining - i, prod * binom.binomial(cap, i));
        }
    };
    walk(walk, 0, s, BigInt(1));
    return total;
}

BigInt generalized_vandermonde_lhs(std::int64_t n, std::int64_t factor_count,
                                   std::int64_t x, EnumerationBudget budget,
                                   const BinomialProvider& binom) {
    require(n >= 0, "generalized_vandermonde_lhs requires n >= 0");
    require(factor_count >= 1, "generalized_vandermonde_lhs requires factor_count >= 1");
    require(x >= 0, "generalized_vandermonde_lhs requires x >= 0");
    BigInt steps;
    mpz_ui_pow_ui(steps.get_mpz_t(), static_cast<unsigned long>(n + 1),
                  static_cast<unsigned long>(factor_count - 1));
    check_budget(steps, budget, "convolution enumeration");

    BigInt total = 0;
    // factor_count - 1 free lower indices; the last one is forced to x - sum
    // and vanishes via the out-of-range convention when that is negative or
    // exceeds n.
    auto walk = [&](auto&& self, std::int64_t factor, std::int64_t rest,
                    const BigInt& prod) -> void {
        if (factor == factor_count - 1) {
            total += prod * binom.binomial(n, rest);
            return;
        }
        for (std::int64_t i = 0; i <= n; ++i) {
            self(self, factor + 1, rest - i, prod * binom.binomial(n, i));
        }
    };
    walk(walk, 0, x, BigInt(1));
    return total;
}

BigInt favorable_count_fast(const ProblemInstance& inst, RemainderPoolMode mode,
                            Exec exec, const BinomialProvider& binom) {
    inst.validate();
    const std::int64_t k_max = std::min(inst.x, inst.y);
    require(inst.z >= 1 && inst.z <= k_max,
            "favorable_count_fast requires 1 <= z <= min(x, y)");
    const std::int64_t n = inst.n;
    const std::int64_t x = inst.x;
    const std::int64_t rest_positions = remainder_pool_types(inst, mode) * (n - 1);

    auto term_for_k = [&](std::int64_t k) {
        // s below max(k, x - rest) gives an empty remainder binomial, s above
        // k*(n-1) an empty inner sum; tightening the loop changes nothing.
        const std::int64_t s_lo = std::max(k, x - rest_positions);
        const std::int64_t s_hi = std::min(x, k * (n - 1));
        BigInt inner = 0;
        for (std::int64_t s = s_lo; s <= s_hi; ++s) {
            inner += inner_sum_closed(k, s, n, binom) *
                     binom.binomial(rest_positions, x - s);
        }
        return BigInt(binom.binomial(inst.y, k) * inner);
    };

    BigInt total = 0;
    if (exec == Exec::Parallel) {
#pragma omp parallel
        {
            BigInt local = 0;
#pragma omp for schedule(dynamic) nowait
            for (std::int64_t k = inst.z; k <= k_max; ++k) {
                local += term_for_k(k);
            }
#pragma omp critical
            total += local;
        }
    } else {
        for (std::int64_t k = inst.z; k <= k_max; ++k) {
            total += term_for_k(k);
        }
    }
    return total;
}

ExactRational pvalue_fast(const ProblemInstance& inst, RemainderPoolMode mode,
                          Exec exec, const BinomialProvider& binom) {
    inst.validate();
    if (inst.z <= 0) {
        return rational_one(); // "z or more" with z = 0 is certain
    }
    if (inst.z > std::min(inst.x, inst.y)) {
        return rational_zero();
    }
    return make_rational(favorable_count_fast(inst, mode, exec, binom),
                         binom.binomial(inst.positions(), inst.x));
}

BigInt naive_step_count(const ProblemInstance& inst, const BinomialProvider& binom) {
    inst.validate();
    const std::int64_t k_max = std::min(inst.x, inst.y);
    if (inst.z < 1 || inst.z > k_max) {
        return 0; // shortcut cases enumerate nothing
    }
    BigInt steps = 0;
    // sum over s of the per-(k, s) vector counts telescopes to C(x, k)
    for (std::int64_t k = inst.z; k <= k_max; ++k) {
        steps += binom.binomial(inst.x, k);
    }
    return steps;
}

ExactRational pvalue_naive(const ProblemInstance& inst, RemainderPoolMode mode,
                           EnumerationBudget budget, const BinomialProvider& binom) {
    inst.validate();
    if (inst.z <= 0) {
        return rational_one();
    }
    const std::int64_t k_max = std::min(inst.x, inst.y);
    if (inst.z > k_max) {
        return rational_zero();
    }
    check_budget(naive_step_count(inst, binom), budget, "count-vector enumeration");

    const std::int64_t n = inst.n;
    const std::int64_t rest_positions = remainder_pool_types(inst, mode) * (n - 1);
    BigInt favorable = 0;
    for (std::int64_t k = inst.z; k <= k_max; ++k) {
        BigInt inner = 0;
        for (std::int64_t s = k; s <= inst.x; ++s) {
            inner += inner_sum_enumerated(k, s, n, false, budget, binom) *
                     binom.binomial(rest_positions, inst.x - s);
        }
        favorable += binom.binomial(inst.y, k) * inner;
    }
    return make_rational(favorable, binom.binomial(inst.positions(), inst.x));
}

} // namespace occtail
