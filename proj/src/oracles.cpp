#include "occtail/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "occtail/binomial.hpp"
#include "occtail/errors.hpp"

namespace occtail {
namespace {

// Enumerates every `remaining`-subset of positions [start, total) on top of a
// prefix whose designated-type counts are in `tally`, counting subsets whose
// distinct designated-type count reaches the threshold. Positions p belong to
// type p / (n-1); the designated types are 0 .. y-1.
struct SubsetCounter {
    std::int64_t total_positions;
    std::int64_t copies;     // n - 1
    std::int64_t designated; // y
    std::int64_t threshold;  // z

    std::vector<std::int32_t> tally; // per designated type, along the path
    std::int64_t distinct = 0;
    std::uint64_t hits = 0;

    explicit SubsetCounter(const ProblemInstance& inst)
        : total_positions(inst.positions()),
          copies(inst.n - 1),
          designated(inst.y),
          threshold(inst.z),
          tally(static_cast<std::size_t>(inst.y), 0) {}

    void push(std::int64_t pos) {
        const std::int64_t type = pos / copies;
        if (type < designated && tally[static_cast<std::size_t>(type)]++ == 0) {
            ++distinct;
        }
    }

    void pop(std::int64_t pos) {
        const std::int64_t type = pos / copies;
        if (type < designated && --tally[static_cast<std::size_t>(type)] == 0) {
            --distinct;
        }
    }

    void count(std::int64_t start, std::int64_t remaining) {
        if (remaining == 0) {
            hits += distinct >= threshold ? 1 : 0;
            return;
        }
        for (std::int64_t p = start; p <= total_positions - remaining; ++p) {
            push(p);
            count(p + 1, remaining - 1);
            pop(p);
        }
    }
};

// --- Monte Carlo internals -------------------------------------------------
//
// Samples are grouped into fixed-size chunks; chunk c uses an mt19937_64
// seeded with splitmix64(seed, c). The hit total is therefore a pure function
// of (instance, samples, seed) no matter how chunks are scheduled.

constexpr std::uint64_t kChunkSamples = 4096;

std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t v = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    v = (v ^ (v >> 30)) * 0xBF58476D1CE4E5B9ULL;
    v = (v ^ (v >> 27)) * 0x94D049BB133111EBULL;
    return v ^ (v >> 31);
}

// Unbiased bounded draw by rejection; std::uniform_int_distribution is not
// pinned down by the standard, this is.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t reject_below = (0 - bound) % bound; // 2^64 mod bound
    std::uint64_t v = rng();
    while (v < reject_below) {
        v = rng();
    }
    return v % bound;
}

// Every sample is a partial Fisher-Yates over the identity array of the
// n(n-1) positions: x swaps pick the subset, then the swaps are undone (dense
// pool) or discarded (sparse overlay, for pools too large to materialize).
// Both paths read the same values for the same generator stream, so the hit
// count is a pure function of (instance, chunk seed, count).
constexpr std::int64_t kDensePoolLimit = 1'000'000;

std::uint64_t run_chunk(const ProblemInstance& inst, std::uint64_t chunk_seed,
                        std::uint64_t count) {
    const std::int64_t total = inst.positions();
    const std::int64_t copies = inst.n - 1;
    std::mt19937_64 rng(chunk_seed);
    // distinct-type bookkeeping: stamped array for ordinary y, hash set when
    // y itself is too large to materialize
    const bool dense_types = inst.y <= kDensePoolLimit;
    std::vector<std::uint64_t> stamp(dense_types ? static_cast<std::size_t>(inst.y) : 0, 0);
    std::unordered_set<std::int64_t> seen;
    std::uint64_t hits = 0;

    const bool dense = total <= kDensePoolLimit;
    std::vector<std::int64_t> pool;
    std::vector<std::int64_t> picks;
    std::unordered_map<std::int64_t, std::int64_t> overlay;
    if (dense) {
        pool.resize(static_cast<std::size_t>(total));
        for (std::int64_t i = 0; i < total; ++i) {
            pool[static_cast<std::size_t>(i)] = i;
        }
        picks.resize(static_cast<std::size_t>(inst.x));
    }

    for (std::uint64_t sample = 1; sample <= count; ++sample) {
        std::int64_t distinct = 0;
        if (!dense) {
            overlay.clear();
        }
        if (!dense_types) {
            seen.clear();
        }
        auto read = [&](std::int64_t i) {
            auto it = overlay.find(i);
            return it == overlay.end() ? i : it->second;
        };
        for (std::int64_t j = 0; j < inst.x; ++j) {
            const std::int64_t pick =
                j + static_cast<std::int64_t>(bounded(rng, static_cast<std::uint64_t>(total - j)));
            std::int64_t value;
            if (dense) {
                std::swap(pool[static_cast<std::size_t>(j)], pool[static_cast<std::size_t>(pick)]);
                picks[static_cast<std::size_t>(j)] = pick;
                value = pool[static_cast<std::size_t>(j)];
            } else {
                value = read(pick);
                const std::int64_t displaced = read(j);
                overlay[pick] = displaced;
                overlay[j] = value;
            }
            const std::int64_t type = value / copies;
            if (type < inst.y) {
                bool first_time;
                if (dense_types) {
                    first_time = stamp[static_cast<std::size_t>(type)] != sample;
                    stamp[static_cast<std::size_t>(type)] = sample;
                } else {
                    first_time = seen.insert(type).second;
                }
                distinct += first_time ? 1 : 0;
            }
        }
        if (dense) {
            for (std::int64_t j = inst.x - 1; j >= 0; --j) {
                std::swap(pool[static_cast<std::size_t>(j)],
                          pool[static_cast<std::size_t>(picks[static_cast<std::size_t>(j)])]);
            }
        }
        if (distinct >= inst.z) {
            ++hits;
        }
    }
    return hits;
}

} // namespace

ExactRational pvalue_exhaustive(const ProblemInstance& inst, EnumerationBudget budget,
                                Exec exec) {
    inst.validate();
    const BigInt total = binomial(inst.positions(), inst.x);
    if (total > budget.limit) {
        throw BudgetError("oracle too large: exhaustive enumeration needs " +
                          total.get_str() + " subsets, budget is " +
                          std::to_string(budget.limit));
    }

    std::uint64_t hits = 0;
    if (inst.x == 0) {
        SubsetCounter counter(inst);
        counter.count(0, 0);
        hits = counter.hits;
    } else if (exec == Exec::Parallel) {
        const std::int64_t first_max = inst.positions() - inst.x;
#pragma omp parallel
        {
            SubsetCounter counter(inst);
            std::uint64_t local = 0;
#pragma omp for schedule(dynamic) nowait
            for (std::int64_t first = 0; first <= first_max; ++first) {
                counter.hits = 0;
                counter.push(first);
                counter.count(first + 1, inst.x - 1);
                counter.pop(first);
                local += counter.hits;
            }
#pragma omp critical
            hits += local;
        }
    } else {
        SubsetCounter counter(inst);
        counter.count(0, inst.x);
        hits = counter.hits;
    }
    return make_rational(BigInt(static_cast<unsigned long>(hits)), total);
}

MonteCarloEstimate pvalue_montecarlo(const ProblemInstance& inst, std::uint64_t samples,
                                     std::uint64_t seed, Exec exec) {
    inst.validate();
    if (samples < 1) {
        throw InputError("montecarlo requires at least one sample");
    }

    const std::uint64_t chunks = (samples + kChunkSamples - 1) / kChunkSamples;
    std::uint64_t hits = 0;
    if (exec == Exec::Parallel) {
#pragma omp parallel
        {
            std::uint64_t local = 0;
#pragma omp for schedule(dynamic) nowait
            for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
                const std::uint64_t offset = static_cast<std::uint64_t>(c) * kChunkSamples;
                const std::uint64_t count = std::min(kChunkSamples, samples - offset);
                local += run_chunk(inst, splitmix64(seed, static_cast<std::uint64_t>(c)), count);
            }
#pragma omp critical
            hits += local;
        }
    } else {
        for (std::uint64_t c = 0; c < chunks; ++c) {
            const std::uint64_t offset = c * kChunkSamples;
            const std::uint64_t count = std::min(kChunkSamples, samples - offset);
            hits += run_chunk(inst, splitmix64(seed, c), count);
        }
    }

    MonteCarloEstimate result;
    result.hits = hits;
    result.samples = samples;
    result.seed = seed;
    result.estimate = make_rational(BigInt(static_cast<unsigned long>(hits)),
                                    BigInt(static_cast<unsigned long>(samples)));
    const double p_hat = static_cast<double>(hits) / static_cast<double>(samples);
    result.standard_error = std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(samples));
    return result;
}

} // namespace occtail
