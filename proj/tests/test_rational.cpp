#include <doctest.h>

#include <random>

#include "occtail/errors.hpp"
#include "occtail/rational.hpp"

using namespace occtail;

TEST_CASE("make_rational: reduction and sign normalization") {
    CHECK(make_rational(9, 15).to_fraction_string() == "3/5");
    CHECK(make_rational(0, 7).to_fraction_string() == "0/1");
    CHECK(make_rational(-2, -4).to_fraction_string() == "1/2");
    CHECK(make_rational(2, -4).to_fraction_string() == "-1/2");
    CHECK(make_rational(6, 3).to_fraction_string() == "2/1");
}

TEST_CASE("make_rational: zero denominator is fatal") {
    CHECK_THROWS_AS(make_rational(1, 0), InputError);
    CHECK_THROWS_AS(make_rational(0, 0), InputError);
}

TEST_CASE("make_rational: re-reducing a reduced fraction is the identity") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        const std::int64_t num = static_cast<std::int64_t>(rng() % 100000) - 50000;
        const std::int64_t den = static_cast<std::int64_t>(rng() % 99999) + 1;
        const ExactRational once = make_rational(num, den);
        const ExactRational twice = make_rational(once.numerator(), once.denominator());
        REQUIRE(once == twice);
        REQUIRE(twice.denominator() > 0);
        REQUIRE(gcd(BigInt(abs(twice.numerator())), BigInt(twice.denominator())) == 1);
    }
}

TEST_CASE("rational: ordering and arithmetic behave like fractions") {
    CHECK(make_rational(1, 3) < make_rational(1, 2));
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(make_rational(1, 2) - make_rational(1, 3) == make_rational(1, 6));
    CHECK(make_rational(1, 2) + make_rational(1, 2) == rational_one());
    CHECK(make_rational(-1, 2).abs() == make_rational(1, 2));
    CHECK(make_rational(2, 3) * make_rational(3, 2) == rational_one());
    CHECK(rational_zero().is_zero());
}
