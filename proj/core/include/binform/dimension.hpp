#ifndef BINFORM_DIMENSION_HPP
#define BINFORM_DIMENSION_HPP

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace binform {

// Dense univariate polynomial in q with integer coefficients; trailing
// zeros trimmed.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<mpz_class> coeffs);
    static QPoly one();
    static QPoly one_minus_q_pow(int i);  // 1 - q^i

    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    mpz_class coefficient(int k) const;
    bool is_zero() const { return coeffs_.empty(); }

    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    // Exact division; throws domain_error when the remainder is nonzero.
    QPoly divide_exact(const QPoly& d) const;
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<mpz_class> coeffs_;
    void trim();
};

// Gaussian polynomial [n, k]_q; exact polynomial division of the defining
// product ratio. Symmetric in k <-> n-k.
QPoly gauss_poly(int n, int k);

// Cayley's dimension formula, N(n, nu, w): the number of linearly
// independent covariants (equivalently seminvariants) of degree nu and
// weight w for forms of degree n. Zero when 2w > n*nu, otherwise the q^w
// coefficient of (1-q) [n+nu, n]_q.
long cayley_sylvester_N(int n, int nu, int w);

// The number of weight-w monomials in symbols of weights 2..n (the
// generating function of Corollary-style stability); used as an
// independent cross-check for nu >= w.
long isobaric_monomial_count(int n, int w);

// Linear-algebra oracle: dimension of ker Omega restricted to the span of
// degree-nu weight-w monomials in a_0..a_n. Throws resource_error when the
// monomial count exceeds `monomial_bound`.
long brute_force_N(int n, int nu, int w, std::size_t monomial_bound = 200000);

// grid[nu][w] = cayley_sylvester_N(n, nu, w) for nu in [0, nu_max],
// w in [0, w_max].
std::vector<std::vector<long>> basis_table(int n, int nu_max, int w_max);

} // namespace binform

#endif
