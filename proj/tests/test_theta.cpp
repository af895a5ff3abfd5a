// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "rootfrac/theta.hpp"

using namespace rootfrac;

TEST_CASE("parses rationals, decimals and symbolic bases") {
    CHECK(parse_theta("3/2").rational_value() == mpq_class(3, 2));
    CHECK(parse_theta("17").rational_value() == 17);
    CHECK(parse_theta("2.5").rational_value() == mpq_class(5, 2));
    CHECK(parse_theta("0.125").rational_value() == mpq_class(1, 8));
    CHECK(parse_theta("1.5e2").rational_value() == 150);
    CHECK(parse_theta("2.50").rational_value() == mpq_class(5, 2));
    CHECK(parse_theta(" 3 / 2 ").rational_value() == mpq_class(3, 2));

    CHECK(parse_theta("pi").kind() == ThetaExpr::Kind::Pi);
    CHECK(parse_theta("e").kind() == ThetaExpr::Kind::ExpRational);
    CHECK(parse_theta("e").exp_num() == 1);
    CHECK(parse_theta("e^3/7").exp_num() == 3);
    CHECK(parse_theta("e^3/7").exp_den() == 7);
    CHECK(parse_theta("e^2").exp_den() == 1);
    // exponent reduced to lowest terms
    CHECK(parse_theta("e^4/6").exp_num() == 2);
    CHECK(parse_theta("e^4/6").exp_den() == 3);
}

TEST_CASE("rejects malformed input with positions") {
    CHECK_THROWS_AS(parse_theta(""), ParseError);
    CHECK_THROWS_AS(parse_theta("bogus"), ParseError);
    CHECK_THROWS_AS(parse_theta("3/0"), Error);
    CHECK_THROWS_AS(parse_theta("e^0/3"), ParseError);
    CHECK_THROWS_AS(parse_theta("e^-1"), ParseError);
    CHECK_THROWS_AS(parse_theta("2..5"), ParseError);
    CHECK_THROWS_AS(parse_theta("2.5x"), ParseError);
    CHECK_THROWS_AS(ThetaExpr::rational(mpq_class(0)), Error);
    CHECK_THROWS_AS(ThetaExpr::rational(mpq_class(-3, 2)), Error);
}

TEST_CASE("base validity and comparisons") {
    CHECK(parse_theta("3/2").greater_than_one());
    CHECK_FALSE(parse_theta("1/2").greater_than_one());
    CHECK(parse_theta("pi").greater_than_one());
    CHECK(parse_theta("e^1/9").greater_than_one());
    CHECK_THROWS_AS(parse_theta("1").require_valid_base(), Error);
    CHECK_NOTHROW(parse_theta("1/2").require_valid_base());
    CHECK(parse_theta("e^3/7").to_string() == "e^3/7");
    CHECK(parse_theta("e").to_string() == "e");
}
