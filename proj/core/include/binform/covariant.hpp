#ifndef BINFORM_COVARIANT_HPP
#define BINFORM_COVARIANT_HPP

#include "binform/form.hpp"
#include "binform/mpoly.hpp"

namespace binform {

// (degree in the coefficients, weight, order in x) of a covariant,
// tied together by n*nu = m + 2w.
struct CovariantMeta {
    int nu = 0;
    int weight = 0;
    int order = 0;
};

// k-th transvectant <f,g>_k: the k-fold Omega-process pairing, computed on
// the homogenized forms and read back as a form of order n1 + n2 - 2k.
// Vanishes when k > min(n1, n2).
Form transvectant(const Form& f, const Form& g, int k);

// Apolar invariant A(f,g) = sum (-1)^i i! (n-i)! a_i b_{n-i} of two forms of
// the same degree n. Satisfies n! A(f,g) = <f,g>_n.
MPoly apolar(const Form& f, const Form& g);

// Apolar covariant <f,g> := <f,g>_m for deg f = n >= m = deg g.
Form apolar_cov(const Form& f, const Form& g);

// J(f,g) = n2 f' g - n1 f g', order n1 + n2 - 2, weight 1. Antisymmetric.
Form jacobian(const Form& f, const Form& g);

// H(f) = n(n-1) f f'' - (n-1)^2 (f')^2, order 2n - 4, degree 2, weight 2.
Form hessian(const Form& f);

// k-th Gundelfinger covariant: the (k+1)x(k+1) derivative determinant
// |(n-i-j)!/(n-2k)! * f^(i+j)|. G_0 = f, G_1 = H(f); zero when 2k > n.
Form gundelfinger(const Form& f, int k);

// Hankel determinant (catalecticant) det |a_{i+j} / C(n, i+j)| for even n.
MPoly hankel(const Form& f);

// Source (leading coefficient) of a covariant.
MPoly source(const Form& covariant);

// Rebuild the covariant of order m from its source via
// Psi = sum_j (Omega*)^j(Phi) / j! * x^(m-j). Checks that Phi is a genuine
// seminvariant with order m of forms of degree n.
Form reconstruct_covariant(const MPoly& phi, int n, int m);

// Resultant via the Sylvester determinant; equals
// a_0^m b_0^n prod (xi_i - eta_j) on the root side.
MPoly resultant(const Form& f, const Form& g);

// Discriminant for any degree n >= 2 as a polynomial in the coefficients,
// from (+-) R(f, f') / a_0 computed once on the generic form of degree n.
MPoly discriminant_general(const Form& f);
// The generic discriminant polynomial itself, in slot-0 symbols.
const MPoly& generic_discriminant(int n);

} // namespace binform

#endif
