#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binform/errors.hpp"
#include "binform/rational.hpp"

using namespace binform;

TEST_CASE("canonical representation") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-2, -4) == Rat(1, 2));
    CHECK(Rat(2, -4) == Rat(-1, 2));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(0).to_string() == "0");
    CHECK(Rat(-3, 6).to_string() == "-1/2");
    CHECK(Rat(14, 7).to_string() == "2");
}

TEST_CASE("arithmetic and comparisons") {
    Rat a(1, 3), b(1, 6);
    CHECK(a + b == Rat(1, 2));
    CHECK(a - b == Rat(1, 6));
    CHECK(a * b == Rat(1, 18));
    CHECK(a / b == Rat(2));
    CHECK(a > b);
    CHECK(Rat(-5, 3) < Rat(0));
    CHECK_THROWS_AS(a / Rat(0), domain_error);
    CHECK_THROWS_AS(Rat(1, 0), domain_error);
}

TEST_CASE("pow handles negative exponents") {
    CHECK(Rat(2, 3).pow(3) == Rat(8, 27));
    CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
    CHECK(Rat(5).pow(0) == Rat(1));
    CHECK_THROWS_AS(Rat(0).pow(-1), domain_error);
}

TEST_CASE("parse round-trips to_string") {
    for (const char* s : {"0", "5", "-5", "1/2", "-22/7", "123456789123456789"}) {
        Rat r = Rat::parse(s);
        CHECK(Rat::parse(r.to_string()) == r);
    }
    CHECK(Rat::parse("4/6") == Rat(2, 3));
    CHECK_THROWS_AS(Rat::parse("1/0"), domain_error);
    CHECK_THROWS_AS(Rat::parse("x"), parse_error);
    CHECK_THROWS_AS(Rat::parse("1/-2"), parse_error);
    CHECK_THROWS_AS(Rat::parse(""), parse_error);
}

TEST_CASE("big values stay exact") {
    Rat big = Rat(10).pow(40) + Rat(1);
    CHECK(big - Rat(10).pow(40) == Rat(1));
    CHECK(factorial(20) * Rat(21) == factorial(21));
    CHECK(binomial(52, 5) == Rat(2598960));
    CHECK(falling_factorial(7, 3) == Rat(210));
    CHECK(falling_factorial(3, 5) == Rat(0));
}
