#include "occtail/render.hpp"

#include <cassert>
#include <cmath>
#include <cstdio>

#include "occtail/errors.hpp"

namespace occtail {
namespace {

// floor(log10(num/den)) for positive num, den, by digit counts plus one exact
// comparison to settle the boundary.
long floor_log10(const BigInt& num, const BigInt& den) {
    const long cand = digit_count(num) - digit_count(den);
    const bool at_least = cand >= 0 ? num >= den * pow10(static_cast<unsigned long>(cand))
                                    : num * pow10(static_cast<unsigned long>(-cand)) >= den;
    return at_least ? cand : cand - 1;
}

std::string exponent_suffix(long e) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "e%c%02ld", e < 0 ? '-' : '+', e < 0 ? -e : e);
    return buf;
}

} // namespace

std::string render_decimal(const ExactRational& value, int sig_digits) {
    if (sig_digits < 1) {
        throw InputError("decimal precision must be at least 1 significant digit");
    }
    if (value.is_zero()) {
        return "0";
    }
    const bool negative = value < rational_zero();
    const BigInt num = abs(value.numerator());
    const BigInt den = value.denominator();

    long e = floor_log10(num, den);

    // digits = num/den scaled so that exactly sig_digits digits remain, then
    // rounded half away from zero
    const long shift = sig_digits - 1 - e;
    const BigInt scaled_num = shift >= 0 ? BigInt(num * pow10(static_cast<unsigned long>(shift))) : num;
    const BigInt scaled_den = shift >= 0 ? den : BigInt(den * pow10(static_cast<unsigned long>(-shift)));
    BigInt digits, remainder;
    mpz_fdiv_qr(digits.get_mpz_t(), remainder.get_mpz_t(), scaled_num.get_mpz_t(),
                scaled_den.get_mpz_t());
    if (2 * remainder >= scaled_den) {
        ++digits;
    }
    if (digits == pow10(static_cast<unsigned long>(sig_digits))) {
        digits = pow10(static_cast<unsigned long>(sig_digits - 1)); // 999.. rounded up a magnitude
        ++e;
    }
    std::string digit_str = digits.get_str();
    assert(static_cast<int>(digit_str.size()) == sig_digits);

    std::string out = negative ? "-" : "";
    if (e >= 0 && e < sig_digits) {
        out += digit_str.substr(0, static_cast<std::size_t>(e) + 1);
        if (e + 1 < sig_digits) {
            out += ".";
            out += digit_str.substr(static_cast<std::size_t>(e) + 1);
        }
    } else if (e < 0 && e >= -4) {
        out += "0.";
        out.append(static_cast<std::size_t>(-e) - 1, '0');
        out += digit_str;
    } else {
        out += digit_str.substr(0, 1);
        if (sig_digits > 1) {
            out += ".";
            out += digit_str.substr(1);
        }
        out += exponent_suffix(e);
    }
    return out;
}

std::string render_log10(const ExactRational& value) {
    if (value < rational_zero()) {
        throw InputError("log10 of a negative value");
    }
    if (value.is_zero()) {
        return "-inf";
    }
    const BigInt num = value.numerator();
    const BigInt den = value.denominator();
    const LeadingDigits ln = leading_digits(num, 17);
    const LeadingDigits ld = leading_digits(den, 17);
    const double dropped_num = static_cast<double>(digit_count(num) - ln.count);
    const double dropped_den = static_cast<double>(digit_count(den) - ld.count);
    const double result = dropped_num - dropped_den +
                          std::log10(static_cast<double>(ln.value)) -
                          std::log10(static_cast<double>(ld.value));
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", result);
    return buf;
}

} // namespace occtail
