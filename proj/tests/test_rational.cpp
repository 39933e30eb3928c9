#include "gaidec/errors.hpp"
#include "gaidec/rational.hpp"

#include <doctest.h>

using gaidec::BigInt;
using gaidec::Rat;

TEST_CASE("rational parsing and rendering round trip") {
    CHECK(gaidec::rat_str(gaidec::rat_parse("3/4")) == "3/4");
    CHECK(gaidec::rat_str(gaidec::rat_parse("-3/4")) == "-3/4");
    CHECK(gaidec::rat_str(gaidec::rat_parse("7")) == "7");
    CHECK(gaidec::rat_str(gaidec::rat_parse("-7")) == "-7");
    CHECK(gaidec::rat_str(gaidec::rat_parse("0")) == "0");
}

TEST_CASE("parsing canonicalizes") {
    CHECK(gaidec::rat_str(gaidec::rat_parse("2/4")) == "1/2");
    CHECK(gaidec::rat_str(gaidec::rat_parse("6/3")) == "2");
    CHECK(gaidec::rat_parse("10/15") == Rat(2) / 3);
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(gaidec::rat_parse(""), gaidec::ValidationError);
    CHECK_THROWS_AS(gaidec::rat_parse("1/0"), gaidec::ValidationError);
    CHECK_THROWS_AS(gaidec::rat_parse("1.5"), gaidec::ValidationError);
    CHECK_THROWS_AS(gaidec::rat_parse("1/-2"), gaidec::ValidationError);
    CHECK_THROWS_AS(gaidec::rat_parse("a/b"), gaidec::ValidationError);
    CHECK_THROWS_AS(gaidec::rat_parse("1/2/3"), gaidec::ValidationError);
    CHECK_THROWS_AS(gaidec::rat_parse(" 1"), gaidec::ValidationError);
}

TEST_CASE("decimal rendering rounds half away from zero") {
    CHECK(gaidec::rat_decimal(Rat(1) / 3, 4) == "0.3333");
    CHECK(gaidec::rat_decimal(Rat(2) / 3, 4) == "0.6667");
    CHECK(gaidec::rat_decimal(Rat(1) / 2, 0) == "1");
    CHECK(gaidec::rat_decimal(Rat(-1) / 2, 0) == "-1");
    CHECK(gaidec::rat_decimal(Rat(-1) / 3, 2) == "-0.33");
    CHECK(gaidec::rat_decimal(Rat(5), 2) == "5.00");
    CHECK(gaidec::rat_decimal(Rat(1) / 8, 3) == "0.125");
    CHECK(gaidec::rat_decimal(Rat(1) / 8, 2) == "0.13");
}

TEST_CASE("binomial coefficients") {
    CHECK(gaidec::binomial(0, 0) == 1);
    CHECK(gaidec::binomial(4, 2) == 6);
    CHECK(gaidec::binomial(10, 5) == 252);
    CHECK(gaidec::binomial(3, 5) == 0);
    CHECK(gaidec::binomial(60, 30) == BigInt("118264581564861424"));
}
