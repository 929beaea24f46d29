#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace occtail {

// Arbitrary-precision signed integer. GMP's C++ value type already has the
// semantics we need (RAII, deep copies, exact arithmetic); the alias keeps the
// rest of the library independent of the backing library.
using BigInt = mpz_class;

/// Number of decimal digits of |v|; digit_count(0) == 1.
int digit_count(const BigInt& v);

/// The most significant `max_digits` decimal digits of |v| as an integer,
/// together with how many digits were actually taken (fewer for short values).
struct LeadingDigits {
    std::uint64_t value;
    int count;
};
LeadingDigits leading_digits(const BigInt& v, int max_digits = 15);

/// 10^e as a BigInt (e >= 0).
BigInt pow10(unsigned long e);

} // namespace occtail
