#include <doctest.h>

#include <stdexcept>

#include "littlewood/rational.hpp"
#include "support.hpp"

using namespace littlewood;
using lwtest::R;

TEST_CASE("make_rational reduces and normalises sign") {
    const Rational x = make_rational(Integer(6), Integer(-4));
    CHECK(x.get_num() == -3);
    CHECK(x.get_den() == 2);
    CHECK_THROWS_AS(make_rational(Integer(1), Integer(0)), std::domain_error);
}

TEST_CASE("parse_rational") {
    CHECK(parse_rational("7/6") == R(7, 6));
    CHECK(parse_rational("-14/12") == R(-7, 6));
    CHECK(parse_rational("5") == R(5));
    CHECK(parse_rational("0.25") == R(1, 4));
    CHECK(parse_rational("-1.5") == R(-3, 2));
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("one"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("to_string round-trips exactly") {
    lwtest::Gen gen(11);
    for (int i = 0; i < 200; ++i) {
        const Rational x = gen.rational(R(-1000), R(1000), 100000);
        CHECK(parse_rational(to_string(x)) == x);
    }
    const Rational big = pow(R(643983856759, 212837625), 7);
    CHECK(parse_rational(to_string(big)) == big);
    CHECK(to_string(R(4)) == "4");
    CHECK(to_string(R(-5, 3)) == "-5/3");
}

TEST_CASE("to_decimal uses 12 significant digits") {
    CHECK(to_decimal(R(5, 3)) == "1.66666666667");
    CHECK(to_decimal(R(1)) == "1");
    CHECK(to_decimal(R(-1, 8)) == "-0.125");
}

TEST_CASE("floor, ceil, pow") {
    CHECK(floor(R(-1, 2)) == -1);
    CHECK(ceil(R(-1, 2)) == 0);
    CHECK(floor(R(7, 2)) == 3);
    CHECK(ceil(R(7, 2)) == 4);
    CHECK(floor(R(3)) == 3);
    CHECK(pow(R(-2, 3), 3) == R(-8, 27));
    CHECK(pow(R(5, 7), 0) == R(1));
}
