#include "powersum/rational.hpp"

#include <doctest.h>

using namespace powersum;

TEST_CASE("integer_root exact cases") {
    CHECK(integer_root(27, 3).value() == 3);
    CHECK(integer_root(1024, 10).value() == 2);
    CHECK(!integer_root(28, 3).has_value());
    CHECK(integer_root(0, 5).value() == 0);
    CHECK(integer_root(1, 7).value() == 1);
}

TEST_CASE("rational_root respects parity") {
    CHECK(rational_root(Rational(4, 9), 2).value() == Rational(2, 3));
    CHECK(rational_root(Rational(-8, 27), 3).value() == Rational(-2, 3));
    CHECK(!rational_root(Rational(-4), 2).has_value());
    CHECK(!rational_root(Rational(2), 2).has_value());
    CHECK(rational_root(Rational(1), 1).value() == 1);
    CHECK(is_rational_square(Rational(49, 16)));
    CHECK(!is_rational_square(Rational(2)));
}

TEST_CASE("binomial values") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(3, -1) == 0);
}

TEST_CASE("pow_rational with signed exponents") {
    CHECK(pow_rational(Rational(2, 3), 2) == Rational(4, 9));
    CHECK(pow_rational(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(pow_rational(Rational(5), 0) == 1);
    CHECK(pow_rational(Rational(0), 3) == 0);
    CHECK_THROWS(pow_rational(Rational(0), -1));
}

TEST_CASE("to_string canonical") {
    CHECK(to_string(Rational(1, 2)) == "1/2");
    CHECK(to_string(Rational(-3)) == "-3");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(to_string(Rational(-4, 6)) == "-2/3");
    CHECK(to_string(Rational(4, 6)) == "2/3");
}
