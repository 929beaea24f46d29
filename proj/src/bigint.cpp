#include "occtail/bigint.hpp"

#include <cstdlib>

namespace occtail {

int digit_count(const BigInt& v) {
    BigInt a = abs(v);
    if (a == 0) {
        return 1;
    }
    // sizeinbase is exact or one too high for base 10; settle with a compare
    std::size_t est = mpz_sizeinbase(a.get_mpz_t(), 10);
    if (est > 1 && a < pow10(static_cast<unsigned long>(est - 1))) {
        --est;
    }
    return static_cast<int>(est);
}

LeadingDigits leading_digits(const BigInt& v, int max_digits) {
    BigInt a = abs(v);
    const int digits = digit_count(a);
    const int take = digits < max_digits ? digits : max_digits;
    if (digits > take) {
        a /= pow10(static_cast<unsigned long>(digits - take));
    }
    return LeadingDigits{std::strtoull(a.get_str().c_str(), nullptr, 10), take};
}

BigInt pow10(unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

} // namespace occtail
