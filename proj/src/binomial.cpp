#include "occtail/binomial.hpp"

#include <mutex>

#include "occtail/errors.hpp"

namespace occtail {

BigInt BinomialProvider::binomial(std::int64_t a, std::int64_t b) const {
    if (a < 0) {
        throw InputError("binomial upper index must be nonnegative, got " + std::to_string(a));
    }
    if (b < 0 || b > a) {
        return 0; // out-of-range lower index vanishes
    }
    // C(a, b) == C(a, a-b); cache under the smaller lower index
    const std::int64_t lower = b <= a - b ? b : a - b;
    const auto key = std::make_pair(a, lower);

    // Lock-free front cache. C(a, b) is a pure function of (a, b), so sharing
    // one memo across providers and threads cannot change any observable
    // value; it only keeps concurrent grid sweeps off the shared mutex.
    thread_local std::unordered_map<std::pair<std::int64_t, std::int64_t>, BigInt, PairHash>
        front;
    if (auto it = front.find(key); it != front.end()) {
        return it->second;
    }

    BigInt value;
    bool computed = false;
    {
        std::shared_lock lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) {
            value = it->second;
            computed = true;
        }
    }
    if (!computed) {
        mpz_bin_uiui(value.get_mpz_t(), static_cast<unsigned long>(a),
                     static_cast<unsigned long>(lower));
        std::unique_lock lock(mutex_);
        cache_.emplace(key, value);
    }
    front.emplace(key, value);
    return value;
}

std::size_t BinomialProvider::cache_size() const {
    std::shared_lock lock(mutex_);
    return cache_.size();
}

const BinomialProvider& shared_binomial() {
    static BinomialProvider provider;
    return provider;
}

BigInt binomial(std::int64_t a, std::int64_t b) {
    return shared_binomial().binomial(a, b);
}

} // namespace occtail
