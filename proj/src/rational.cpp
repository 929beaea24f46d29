#include "occtail/rational.hpp"

#include "occtail/errors.hpp"

namespace occtail {

ExactRational::ExactRational(const BigInt& num, const BigInt& den) : value_(num, den) {
    // mpq_class(num, den) does not canonicalize on its own
    value_.canonicalize();
}

std::string ExactRational::to_fraction_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

ExactRational ExactRational::abs() const {
    return ExactRational(mpq_class(::abs(value_)));
}

ExactRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw InputError("rational denominator must be nonzero");
    }
    return ExactRational(num, den);
}

} // namespace occtail
