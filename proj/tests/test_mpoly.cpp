#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binform/errors.hpp"
#include "binform/mpoly.hpp"
#include "testutil.hpp"

using namespace binform;
using binform::test::av;

namespace {
MPoly x() { return MPoly::variable("x"); }
MPoly t() { return MPoly::variable("t"); }
} // namespace

TEST_CASE("difference of squares") {
    MPoly lhs = (x() + MPoly(1)) * (x() - MPoly(1));
    CHECK(lhs == x() * x() - MPoly(1));
    CHECK(lhs.to_string() == "x^2 - 1");
}

TEST_CASE("partial derivative of the quadratic discriminant") {
    MPoly disc = av(1) * av(1) - MPoly(4) * av(0) * av(2);
    CHECK(disc.derivative(coeff_name(0, 1)) == MPoly(2) * av(1));
    CHECK(disc.derivative(coeff_name(0, 0)) == MPoly(-4) * av(2));
    CHECK(disc.derivative("unused").is_zero());
}

TEST_CASE("substitute x -> x + t expands binomially") {
    MPoly shifted = (x() * x()).substitute("x", x() + t());
    CHECK(shifted == x() * x() + MPoly(2) * t() * x() + t() * t());
}

TEST_CASE("simultaneous substitution does not capture") {
    // x -> y, y -> x must swap, not collapse.
    MPoly p = MPoly::variable("x") + MPoly(2) * MPoly::variable("y");
    MPoly q = p.substitute({{"x", MPoly::variable("y")}, {"y", MPoly::variable("x")}});
    CHECK(q == MPoly::variable("y") + MPoly(2) * MPoly::variable("x"));
}

TEST_CASE("evaluate requires a complete assignment") {
    MPoly p = x() * av(0);
    CHECK(p.evaluate({{"x", Rat(3)}, {coeff_name(0, 0), Rat(2)}}) == Rat(6));
    CHECK_THROWS_AS(p.evaluate({{"x", Rat(3)}}), domain_error);
}

TEST_CASE("ring axioms on seeded random triples") {
    test::Rng rng(20260810);
    const std::vector<std::string> vars{"x", "y", "z"};
    for (int iter = 0; iter < 40; ++iter) {
        MPoly a = test::random_mpoly(rng, vars, 3, 4);
        MPoly b = test::random_mpoly(rng, vars, 3, 4);
        MPoly c = test::random_mpoly(rng, vars, 3, 4);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a - a == MPoly());
    }
}

TEST_CASE("mixed partials commute") {
    test::Rng rng(7);
    const std::vector<std::string> vars{"u", "v", "w"};
    for (int iter = 0; iter < 25; ++iter) {
        MPoly p = test::random_mpoly(rng, vars, 4, 5);
        CHECK(p.derivative("u").derivative("v") == p.derivative("v").derivative("u"));
    }
}

TEST_CASE("powers") {
    MPoly p = x() + MPoly(1);
    CHECK(p.pow(0) == MPoly(1));
    CHECK(p.pow(3) == p * p * p);
    CHECK(MPoly().pow(0) == MPoly(1));
    CHECK_THROWS_AS(p.pow(-1), domain_error);
}

TEST_CASE("exact division") {
    MPoly num = x() * x() - MPoly(1);
    CHECK(num.divide_exact(x() - MPoly(1)) == x() + MPoly(1));
    CHECK_THROWS_AS(num.divide_exact(x() + MPoly(2)), domain_error);
    CHECK_THROWS_AS(num.divide_exact(MPoly()), domain_error);

    test::Rng rng(99);
    const std::vector<std::string> vars{"x", "y"};
    for (int iter = 0; iter < 25; ++iter) {
        MPoly a = test::random_mpoly(rng, vars, 3, 4);
        MPoly b = test::random_mpoly(rng, vars, 3, 4);
        if (b.is_zero()) continue;
        CHECK((a * b).divide_exact(b) == a);
    }
}

TEST_CASE("canonical form drops unused variables") {
    MPoly p = x() + t() - t();
    CHECK(p == x());
    CHECK(p.vars() == std::vector<std::string>{"x"});
    CHECK(p.term_count() == 1);
}

TEST_CASE("coefficient views") {
    MPoly p = MPoly(3) * x().pow(2) * t() + x() * av(0) + MPoly(7);
    auto byx = p.coefficients_in("x");
    CHECK(byx.at(2) == MPoly(3) * t());
    CHECK(byx.at(1) == av(0));
    CHECK(byx.at(0) == MPoly(7));
    CHECK(p.coefficient_of("x", 5).is_zero());
    CHECK(p.degree_in("x") == 2);
    CHECK(p.total_degree() == 3);
}

TEST_CASE("term budget guard interrupts oversized products") {
    MPoly big(1);
    for (int i = 0; i < 6; ++i) big *= (MPoly::variable("v" + std::to_string(i)) + MPoly(1));
    CHECK(big.term_count() == 64);
    {
        MPoly::TermBudgetGuard guard(20);
        CHECK_THROWS_AS(
            [] {
                MPoly b(1);
                for (int i = 0; i < 6; ++i)
                    b *= (MPoly::variable("v" + std::to_string(i)) + MPoly(1));
                return b;
            }(),
            term_budget_exceeded);
    }
    // Guard restored: the same product succeeds again.
    MPoly again(1);
    for (int i = 0; i < 6; ++i) again *= (MPoly::variable("v" + std::to_string(i)) + MPoly(1));
    CHECK(again == big);
}

TEST_CASE("deterministic printing") {
    MPoly p = av(2) * av(0) * MPoly(-4) + av(1) * av(1);
    CHECK(p.to_string() == "-4*a0_0*a0_2 + a0_1^2");
    CHECK(MPoly().to_string() == "0");
    CHECK((-x()).to_string() == "-x");
    CHECK((x() * x() - MPoly(1)).to_string() == "x^2 - 1");
}
