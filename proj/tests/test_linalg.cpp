#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binform/errors.hpp"
#include "binform/linalg.hpp"
#include "testutil.hpp"

using namespace binform;
using binform::test::av;

TEST_CASE("identity determinant") {
    PolyMatrix id3(3, std::vector<MPoly>(3));
    for (int i = 0; i < 3; ++i) id3[i][i] = MPoly(1);
    CHECK(det_fraction_free(id3) == MPoly(1));
}

TEST_CASE("symbolic 2x2") {
    MPoly a = MPoly::variable("a"), b = MPoly::variable("b");
    MPoly c = MPoly::variable("c"), d = MPoly::variable("d");
    CHECK(det_fraction_free(PolyMatrix{{a, b}, {c, d}}) == a * d - b * c);
}

TEST_CASE("hankel matrix of the generic quadratic") {
    MPoly half = MPoly(Rat(1, 2));
    PolyMatrix h{{av(0), half * av(1)}, {half * av(1), av(2)}};
    CHECK(det_fraction_free(h) == av(0) * av(2) - MPoly(Rat(1, 4)) * av(1) * av(1));
}

TEST_CASE("non-square input throws") {
    CHECK_THROWS_AS(det_fraction_free(PolyMatrix{{MPoly(1), MPoly(2)}}), domain_error);
}

TEST_CASE("agrees with cofactor expansion up to 4x4") {
    test::Rng rng(42);
    for (std::size_t n = 1; n <= 4; ++n) {
        for (int iter = 0; iter < 30; ++iter) {
            RatMatrix m(n, std::vector<Rat>(n));
            for (auto& row : m)
                for (auto& e : row) e = test::random_int(rng, -9, 9);
            CHECK(det_fraction_free(m) == test::cofactor_det(m));
        }
    }
    // And with symbolic entries.
    for (int iter = 0; iter < 5; ++iter) {
        PolyMatrix m(3, std::vector<MPoly>(3));
        for (auto& row : m)
            for (auto& e : row) e = test::random_mpoly(rng, {"x", "y"}, 1, 2);
        CHECK(det_fraction_free(m) == test::cofactor_det(m));
    }
}

TEST_CASE("nullspace dimensions") {
    RatMatrix zero23(2, std::vector<Rat>(3, Rat(0)));
    CHECK(nullspace_dim(zero23, 3) == 3);

    RatMatrix id4(4, std::vector<Rat>(4, Rat(0)));
    for (int i = 0; i < 4; ++i) id4[i][i] = Rat(1);
    CHECK(nullspace_dim(id4, 4) == 0);

    RatMatrix rank1{{Rat(1), Rat(1)}, {Rat(2), Rat(2)}};
    CHECK(nullspace_dim(rank1, 2) == 1);

    RatMatrix empty;
    CHECK(nullspace_dim(empty, 5) == 5);
}

TEST_CASE("rank-nullity on random matrices") {
    test::Rng rng(1234);
    std::uniform_int_distribution<int> dims(1, 6);
    for (int iter = 0; iter < 40; ++iter) {
        std::size_t rows = static_cast<std::size_t>(dims(rng));
        std::size_t cols = static_cast<std::size_t>(dims(rng));
        RatMatrix m(rows, std::vector<Rat>(cols));
        for (auto& row : m)
            for (auto& e : row) e = test::random_int(rng, -3, 3);
        CHECK(nullspace_dim(m, cols) + rank(m, cols) == static_cast<int>(cols));
    }
}

TEST_CASE("linear solve") {
    RatMatrix a{{Rat(1), Rat(2)}, {Rat(3), Rat(4)}};
    auto x = solve_linear(a, {Rat(5), Rat(11)}, 2);
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rat(1));
    CHECK((*x)[1] == Rat(2));

    RatMatrix inconsistent{{Rat(1), Rat(1)}, {Rat(1), Rat(1)}};
    CHECK(!solve_linear(inconsistent, {Rat(0), Rat(1)}, 2).has_value());

    // Underdetermined systems still produce a solution.
    RatMatrix under{{Rat(1), Rat(1), Rat(1)}};
    auto y = solve_linear(under, {Rat(6)}, 3);
    REQUIRE(y.has_value());
    CHECK((*y)[0] + (*y)[1] + (*y)[2] == Rat(6));
}
