#pragma once

#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <unordered_map>

#include "occtail/bigint.hpp"

namespace occtail {

/// Memoizing source of binomial coefficients C(a, b) with the out-of-range
/// convention built in: b < 0 or b > a yields 0.
///
/// The cache is invisible to callers — results are identical to the cache-free
/// function and independent of query order. Safe for concurrent use.
class BinomialProvider {
public:
    BinomialProvider() = default;
    BinomialProvider(const BinomialProvider&) = delete;
    BinomialProvider& operator=(const BinomialProvider&) = delete;

    /// C(a, b) for a >= 0 and any integer b; 0 outside 0 <= b <= a.
    /// Throws InputError for a < 0.
    BigInt binomial(std::int64_t a, std::int64_t b) const;

    std::size_t cache_size() const;

private:
    struct PairHash {
        std::size_t operator()(const std::pair<std::int64_t, std::int64_t>& p) const {
            // splitmix-style mix of the two halves
            std::uint64_t h = static_cast<std::uint64_t>(p.first) * 0x9E3779B97F4A7C15ULL;
            h ^= static_cast<std::uint64_t>(p.second) + 0xBF58476D1CE4E5B9ULL + (h << 6) + (h >> 2);
            return static_cast<std::size_t>(h);
        }
    };

    mutable std::shared_mutex mutex_;
    mutable std::unordered_map<std::pair<std::int64_t, std::int64_t>, BigInt, PairHash> cache_;
};

/// Process-wide provider shared by the formula and oracle paths.
const BinomialProvider& shared_binomial();

/// Convenience forward to shared_binomial().binomial(a, b).
BigInt binomial(std::int64_t a, std::int64_t b);

} // namespace occtail
