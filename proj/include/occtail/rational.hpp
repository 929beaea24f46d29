#pragma once

#include <string>

#include "occtail/bigint.hpp"

namespace occtail {

/// Exact reduced fraction. Invariants: denominator > 0 and
/// gcd(|numerator|, denominator) == 1 after every operation.
class ExactRational {
public:
    ExactRational() : value_(0) {}
    ExactRational(const BigInt& num, const BigInt& den);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }

    /// "num/den" in lowest terms, e.g. "3/5" or "0/1".
    std::string to_fraction_string() const;

    friend bool operator==(const ExactRational& a, const ExactRational& b) {
        return a.value_ == b.value_;
    }
    friend bool operator!=(const ExactRational& a, const ExactRational& b) {
        return a.value_ != b.value_;
    }
    friend bool operator<(const ExactRational& a, const ExactRational& b) {
        return a.value_ < b.value_;
    }
    friend bool operator<=(const ExactRational& a, const ExactRational& b) {
        return a.value_ <= b.value_;
    }
    friend bool operator>(const ExactRational& a, const ExactRational& b) {
        return a.value_ > b.value_;
    }
    friend bool operator>=(const ExactRational& a, const ExactRational& b) {
        return a.value_ >= b.value_;
    }

    friend ExactRational operator-(const ExactRational& a, const ExactRational& b) {
        return ExactRational(mpq_class(a.value_ - b.value_));
    }
    friend ExactRational operator+(const ExactRational& a, const ExactRational& b) {
        return ExactRational(mpq_class(a.value_ + b.value_));
    }
    friend ExactRational operator*(const ExactRational& a, const ExactRational& b) {
        return ExactRational(mpq_class(a.value_ * b.value_));
    }

    ExactRational abs() const;

private:
    explicit ExactRational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

    mpq_class value_; // kept canonical: positive denominator, lowest terms
};

/// Reduced fraction num/den with positive denominator. Throws InputError when den == 0.
ExactRational make_rational(const BigInt& num, const BigInt& den);

inline ExactRational rational_zero() { return make_rational(0, 1); }
inline ExactRational rational_one() { return make_rational(1, 1); }

} // namespace occtail
