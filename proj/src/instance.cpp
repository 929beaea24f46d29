#include "occtail/instance.hpp"

#include "occtail/errors.hpp"

namespace occtail {

std::string to_string(RemainderPoolMode mode) {
    return mode == RemainderPoolMode::PaperFaithful ? "paper" : "corrected";
}

void ProblemInstance::validate() const {
    if (n < 2) {
        throw InputError("n must be at least 2, got " + std::to_string(n));
    }
    // n*(n-1) must stay within 64 bits for position bookkeeping
    if (n > 3'000'000'000LL) {
        throw InputError("n too large for this build, got " + std::to_string(n));
    }
    if (x < 0 || x > positions()) {
        throw InputError("x must satisfy 0 <= x <= n*(n-1) = " +
                         std::to_string(positions()) + ", got " + std::to_string(x));
    }
    if (y < 0 || y > n) {
        throw InputError("y must satisfy 0 <= y <= n = " + std::to_string(n) +
                         ", got " + std::to_string(y));
    }
    if (z < 0) {
        throw InputError("z must be nonnegative, got " + std::to_string(z));
    }
}

} // namespace occtail
