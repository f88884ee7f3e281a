#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binform/covariant.hpp"
#include "binform/errors.hpp"
#include "covariant_fixtures.hpp"
#include "testutil.hpp"

using namespace binform;
namespace fx = binform::fixtures;

namespace {

// Independent route for the apolar covariant: m! g(-d/dy, d/dx) f on the
// homogenized form.
Form apolar_cov_operator_route(const Form& f, const Form& g) {
    const int n = f.degree(), m = g.degree();
    MPoly fh = f.to_homogeneous();
    MPoly sum;
    for (int j = 0; j <= m; ++j) {
        MPoly term = fh;
        for (int d = 0; d < m - j; ++d) term = term.derivative("y");
        for (int d = 0; d < j; ++d) term = term.derivative("x");
        sum += MPoly(Rat(parity_sign(m - j))) * g.coeff(j) * term;
    }
    sum *= MPoly(factorial(m));
    // sum is homogeneous of degree n - m in x, y.
    std::vector<MPoly> c(static_cast<std::size_t>(n - m) + 1);
    for (auto& [xp, coef] : sum.coefficients_in("x"))
        for (auto& [yp, inner] : coef.coefficients_in("y"))
            c[static_cast<std::size_t>(yp)] += inner;
    return Form(std::move(c));
}

} // namespace

TEST_CASE("transvectant basics") {
    Form f = Form::generic(3, 0);
    Form g = Form::generic(2, 1);

    CHECK(transvectant(f, g, 0) == f * g);
    CHECK(transvectant(f, g, 1) == jacobian(f, g));
    CHECK(transvectant(f, f, 2) == hessian(f).scale(MPoly(2)));
    CHECK(transvectant(f, f, 3).is_zero());            // odd k on equal forms
    CHECK(transvectant(f, g, 3).is_zero());            // k > min degree
    CHECK_THROWS_AS(transvectant(f, g, -1), domain_error);
}

TEST_CASE("transvectant symmetry <f,g>_k = (-1)^k <g,f>_k") {
    test::Rng rng(31);
    for (int iter = 0; iter < 10; ++iter) {
        Form f = test::random_numeric_form(rng, 3, false);
        Form g = test::random_numeric_form(rng, 4, false);
        for (int k = 0; k <= 3; ++k) {
            Form lhs = transvectant(f, g, k);
            Form rhs = transvectant(g, f, k);
            CHECK(lhs == (k % 2 == 0 ? rhs : -rhs));
        }
    }
}

TEST_CASE("full transvectant is n! times the apolar invariant") {
    for (int n = 1; n <= 4; ++n) {
        Form f = Form::generic(n, 0);
        Form g = Form::generic(n, 1);
        Form t = transvectant(f, g, n);
        REQUIRE(t.degree() == 0);
        CHECK(t.coeff(0) == MPoly(factorial(n)) * apolar(f, g));
    }
}

TEST_CASE("apolar invariant closed forms") {
    Form f2 = Form::generic(2);
    CHECK(apolar(f2, f2) == MPoly(4) * fx::a(0) * fx::a(2) - fx::a(1) * fx::a(1));
    CHECK(apolar(f2, f2) == -fx::delta2());

    Form f3 = Form::generic(3);
    CHECK(apolar(f3, f3).is_zero());  // odd degree

    Form f4 = Form::generic(4);
    CHECK(apolar(f4, f4) == MPoly(4) * fx::i4());

    Form g4 = Form::generic(4, 1);
    CHECK(apolar(g4, f4) == apolar(f4, g4));  // even n: symmetric
    Form g3 = Form::generic(3, 1);
    CHECK(apolar(g3, f3) == -apolar(f3, g3));  // odd n: antisymmetric
    CHECK_THROWS_AS(apolar(f3, f4), domain_error);
}

TEST_CASE("apolar covariant agrees with the differential-operator route") {
    test::Rng rng(67);
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {4, 2}, {4, 4}, {3, 0}}) {
        Form f = Form::generic(n, 0);
        Form g = Form::generic(m, 1);
        CHECK(apolar_cov(f, g) == apolar_cov_operator_route(f, g));
    }
    // x^2 against x: both defining formulas agree (the Jacobian of x^2 and
    // x vanishes since they share their only root).
    Form x2 = Form::from_rats({Rat(1), Rat(0), Rat(0)});
    Form x1 = Form::from_rats({Rat(1), Rat(0)});
    CHECK(apolar_cov(x2, x1) == apolar_cov_operator_route(x2, x1));
    CHECK(apolar_cov(x2, x1).is_zero());

    // m = 0 reduces to scaling, m = n to the apolar invariant.
    Form f4 = Form::generic(4, 0);
    Form c = Form({fx::b(0)});
    CHECK(apolar_cov(f4, c) == f4.scale(fx::b(0)));
    Form g4 = Form::generic(4, 1);
    Form full = apolar_cov(f4, g4);
    REQUIRE(full.degree() == 0);
    CHECK(full.coeff(0) == MPoly(factorial(4)) * apolar(f4, g4));
    CHECK_THROWS_AS(apolar_cov(Form::generic(2), Form::generic(3, 1)), domain_error);
}

TEST_CASE("jacobian") {
    Form f = Form::generic(4, 0);
    CHECK(jacobian(f, f).is_zero());

    Form g = Form::generic(3, 1);
    Form j = jacobian(f, g);
    CHECK(j.degree() == 4 + 3 - 2);
    // Source n1 a0 b1 - n2 b0 a1.
    CHECK(source(j) == MPoly(4) * fx::a(0) * fx::b(1) - MPoly(3) * fx::b(0) * fx::a(1));
    CHECK(jacobian(g, f) == -j);
    CHECK_THROWS_AS(jacobian(f, Form({fx::b(0)})), domain_error);
}

TEST_CASE("hessian closed forms") {
    Form f2 = Form::generic(2);
    Form h2 = hessian(f2);
    REQUIRE(h2.degree() == 0);
    CHECK(h2.coeff(0) == -fx::delta2());

    Form f3 = Form::generic(3);
    CHECK(hessian(f3) == fx::h3());
    CHECK(source(hessian(f3)) == MPoly(4) * fx::p3());

    Form f4 = Form::generic(4);
    CHECK(hessian(f4) == fx::th4().scale(MPoly(3)));
    CHECK(source(hessian(f4)) == MPoly(3) * fx::p4());

    CHECK_THROWS_AS(hessian(Form::generic(1)), domain_error);
}

TEST_CASE("H(f) = (n-1) J(f', f)") {
    // J(f', f) has declared order 2n-3 with a vanishing top coefficient;
    // compare against H embedded at that order.
    for (int n = 2; n <= 4; ++n) {
        Form f = Form::generic(n);
        CHECK(restrict_degree(hessian(f), 2 * n - 3) ==
              jacobian(derivative(f), f).scale(MPoly(Rat(n - 1))));
    }
}

TEST_CASE("gundelfinger covariants") {
    Form f3 = Form::generic(3);
    CHECK(gundelfinger(f3, 0) == f3);
    CHECK(gundelfinger(f3, 1) == hessian(f3));
    CHECK(gundelfinger(f3, 2).is_zero());  // k > n/2

    Form f4 = Form::generic(4);
    CHECK(gundelfinger(f4, 1) == hessian(f4));
    Form g2 = gundelfinger(f4, 2);
    REQUIRE(g2.degree() == 0);
    CHECK(g2.coeff(0) == MPoly(32) * fx::j4());

    // Source formula: g_k = ((n)_2k)^(k+1) |a_{i+j}/C(n,i+j)|.
    for (int n = 2; n <= 4; ++n) {
        Form f = Form::generic(n);
        for (int k = 0; 2 * k <= n; ++k) {
            PolyMatrix m(static_cast<std::size_t>(k) + 1,
                         std::vector<MPoly>(static_cast<std::size_t>(k) + 1));
            for (int i = 0; i <= k; ++i)
                for (int j = 0; j <= k; ++j)
                    m[i][j] = f.coeff(i + j) * MPoly(binomial(n, i + j).inverse());
            MPoly expected =
                MPoly(falling_factorial(n, 2 * k).pow(k + 1)) * det_fraction_free(m);
            CHECK(source(gundelfinger(f, k)) == expected);
        }
    }
}

TEST_CASE("hankel determinant") {
    Form f2 = Form::generic(2);
    CHECK(hankel(f2) == fx::a(0) * fx::a(2) - MPoly(Rat(1, 4)) * fx::a(1) * fx::a(1));
    CHECK(MPoly(-4) * hankel(f2) == fx::delta2());

    Form f4 = Form::generic(4);
    CHECK(MPoly(432) * hankel(f4) == fx::j4());

    Form x4m1 = Form::from_rats({Rat(1), Rat(0), Rat(0), Rat(0), Rat(-1)});
    CHECK(hankel(x4m1).is_zero());

    CHECK_THROWS_AS(hankel(Form::generic(3)), domain_error);
}

TEST_CASE("transvectant source formula") {
    // tau_k(f,g) = n1! n2! / ((n1-k)! (n2-k)!) sum (-1)^i C(k,i) hat a_i hat b_{k-i}
    for (int n1 = 1; n1 <= 4; ++n1)
        for (int n2 = 1; n2 <= 4; ++n2)
            for (int k = 0; k <= std::min(n1, n2); ++k) {
                Form f = Form::generic(n1, 0);
                Form g = Form::generic(n2, 1);
                MPoly sum;
                for (int i = 0; i <= k; ++i)
                    sum += MPoly(binomial(k, i) * Rat(parity_sign(i)) *
                                 binomial(n1, i).inverse() * binomial(n2, k - i).inverse()) *
                           fx::a(i) * fx::b(k - i);
                MPoly expected = MPoly(factorial(n1) * factorial(n2) /
                                       (factorial(n1 - k) * factorial(n2 - k))) *
                                 sum;
                CHECK(source(transvectant(f, g, k)) == expected);
            }
}

TEST_CASE("source and reconstruction round-trip") {
    Form f3 = Form::generic(3);
    CHECK(reconstruct_covariant(fx::a(0), 3, 3) == f3);
    CHECK(reconstruct_covariant(fx::p4(), 4, 4) == fx::th4());
    CHECK(reconstruct_covariant(fx::q3(), 3, 3) == fx::g3());
    CHECK(reconstruct_covariant(fx::q4(), 4, 6) == fx::tjh4());

    CHECK_THROWS_AS(reconstruct_covariant(fx::a(1), 3, 1), domain_error);  // not a seminvariant
    CHECK_THROWS_AS(reconstruct_covariant(fx::p3(), 3, 5), domain_error);  // wrong order
}

TEST_CASE("resultant") {
    Form f = Form::from_rats({Rat(1), Rat(-1)});  // x - 1
    Form g = Form::from_rats({Rat(1), Rat(1)});   // x + 1
    CHECK(resultant(f, g).constant_value() == Rat(2));

    // R(g,f) = (-1)^{nm} R(f,g) on random numeric pairs.
    test::Rng rng(404);
    for (int iter = 0; iter < 12; ++iter) {
        Form u = test::random_numeric_form(rng, 3);
        Form v = test::random_numeric_form(rng, 2);
        Rat lhs = resultant(v, u).constant_value();
        Rat rhs = resultant(u, v).constant_value() * Rat(parity_sign(3 * 2));
        CHECK(lhs == rhs);
    }
    CHECK_THROWS_AS(resultant(f, Form({fx::a(0)})), domain_error);
}

TEST_CASE("discriminants match the classical expansions") {
    CHECK(generic_discriminant(2) == fx::delta2());
    CHECK(generic_discriminant(3) == fx::delta3());
    CHECK(generic_discriminant(4) == fx::delta4());

    CHECK(discriminant_general(Form::generic(3)) == fx::delta3());
    Form x3mx = Form::from_rats({Rat(1), Rat(0), Rat(-1), Rat(0)});
    CHECK(discriminant_general(x3mx).constant_value() == Rat(4));

    // Forms with a_0 = 0 restrict per Delta_n = a0'^2 Delta_{n-1}.
    Form emb = Form::from_rats({Rat(0), Rat(2), Rat(3), Rat(5)});
    Form low = Form::from_rats({Rat(2), Rat(3), Rat(5)});
    CHECK(discriminant_general(emb).constant_value() ==
          Rat(4) * discriminant_general(low).constant_value());
}

TEST_CASE("weight bookkeeping n*nu = m + 2w for produced covariants") {
    // transvectant: nu1 = nu2 = 1, w = k, m = n1 + n2 - 2k.
    for (int n1 = 1; n1 <= 4; ++n1)
        for (int n2 = 1; n2 <= 4; ++n2)
            for (int k = 0; k <= std::min(n1, n2); ++k)
                CHECK(n1 * 1 + n2 * 1 == (n1 + n2 - 2 * k) + 2 * k);
    // hessian: nu = 2, w = 2, m = 2n - 4; gundelfinger: nu = k+1, w = k(k+1).
    for (int n = 2; n <= 6; ++n) {
        CHECK(n * 2 == (2 * n - 4) + 2 * 2);
        for (int k = 0; 2 * k <= n; ++k)
            CHECK(n * (k + 1) == (k + 1) * (n - 2 * k) + 2 * k * (k + 1));
    }
}

TEST_CASE("invariance under random integer transforms") {
    test::Rng rng(555);
    for (int iter = 0; iter < 10; ++iter) {
        Form f = test::random_numeric_form(rng, 4, false);
        Mat2 t(test::random_int(rng, -4, 4), test::random_int(rng, -4, 4),
               test::random_int(rng, -4, 4), test::random_int(rng, -4, 4));
        Rat det = t.det().constant_value();
        Form tf = gl2_act(t, f);

        // Invariants: I with weight 4, apolar A = 4I; hankel with weight 6.
        Rat i_f = (MPoly(Rat(1, 4)) * apolar(f, f)).constant_value();
        Rat i_tf = (MPoly(Rat(1, 4)) * apolar(tf, tf)).constant_value();
        CHECK(i_tf == det.pow(4) * i_f);
        CHECK(hankel(tf).constant_value() == det.pow(6) * hankel(f).constant_value());

        // Covariant law for the Hessian: H(Tf; x T^{-1}) = det^2 H(f; x).
        if (det.is_zero()) continue;
        Form h = hessian(f), th = hessian(tf);
        Rat x0 = test::random_rat(rng), y0 = test::random_rat(rng);
        // (x0, y0) T^{-1} = (d x0 - c y0, -b x0 + a y0) / det
        Rat a = t.a.constant_value(), b = t.b.constant_value();
        Rat c = t.c.constant_value(), d = t.d.constant_value();
        Rat xs = (d * x0 - c * y0) / det;
        Rat ys = (-b * x0 + a * y0) / det;
        CHECK(th.eval_homogeneous(xs, ys) == det.pow(2) * h.eval_homogeneous(x0, y0));
    }
}
