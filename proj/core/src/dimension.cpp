#include "binform/dimension.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "binform/errors.hpp"
#include "binform/linalg.hpp"

namespace binform {

QPoly::QPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::one() { return QPoly({mpz_class(1)}); }

QPoly QPoly::one_minus_q_pow(int i) {
    if (i <= 0) throw domain_error("1 - q^i needs i >= 1");
    std::vector<mpz_class> c(static_cast<std::size_t>(i) + 1, mpz_class(0));
    c[0] = 1;
    c[static_cast<std::size_t>(i)] = -1;
    return QPoly(std::move(c));
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class QPoly::coefficient(int k) const {
    if (k < 0 || k > degree()) return mpz_class(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return QPoly(std::move(c));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
    std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return QPoly(std::move(c));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return QPoly(std::move(c));
}

QPoly QPoly::divide_exact(const QPoly& d) const {
    if (d.is_zero()) throw domain_error("q-polynomial division by zero");
    std::vector<mpz_class> rem = coeffs_;
    std::vector<mpz_class> quot(rem.size(), mpz_class(0));
    const auto dd = static_cast<std::size_t>(d.degree());
    while (true) {
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (rem.empty()) break;
        if (rem.size() < dd + 1) throw domain_error("q-polynomial division is not exact");
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.back().get_mpz_t(),
                    d.coeffs_.back().get_mpz_t());
        if (r != 0) throw domain_error("q-polynomial division is not exact");
        std::size_t shift = rem.size() - 1 - dd;
        quot[shift] = q;
        for (std::size_t i = 0; i <= dd; ++i) rem[shift + i] -= q * d.coeffs_[i];
    }
    return QPoly(std::move(quot));
}

QPoly gauss_poly(int n, int k) {
    if (k < 0 || k > n) throw domain_error("gauss_poly needs 0 <= k <= n");
    // prod_{i=n-k+1..n} (1-q^i) / prod_{i=1..k} (1-q^i)
    QPoly num = QPoly::one();
    for (int i = n - k + 1; i <= n; ++i) num = num * QPoly::one_minus_q_pow(i);
    QPoly den = QPoly::one();
    for (int i = 1; i <= k; ++i) den = den * QPoly::one_minus_q_pow(i);
    return num.divide_exact(den);
}

long cayley_sylvester_N(int n, int nu, int w) {
    if (n < 1 || nu < 0 || w < 0) throw domain_error("cayley_sylvester_N argument out of range");
    if (2L * w > static_cast<long>(n) * nu) return 0;
    QPoly p = QPoly::one_minus_q_pow(1) * gauss_poly(n + nu, n);
    mpz_class c = p.coefficient(w);
    return static_cast<long>(c.get_si());
}

long isobaric_monomial_count(int n, int w) {
    // Partitions of w into parts from {2, ..., n}.
    std::vector<long> ways(static_cast<std::size_t>(w) + 1, 0);
    ways[0] = 1;
    for (int part = 2; part <= n; ++part)
        for (int s = part; s <= w; ++s)
            ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - part)];
    return ways[static_cast<std::size_t>(w)];
}

namespace {

// All exponent vectors (e_0..e_n) with sum e_i = nu and sum i*e_i = w, in
// lexicographic order. `nu` and `w` are the degree and weight still to be
// distributed over positions current.size()..n.
void enumerate_monomials(int n, int nu, int w, std::vector<int>& current,
                         std::vector<std::vector<int>>& out) {
    const int pos = static_cast<int>(current.size());
    if (pos == n) {
        // The last variable a_n carries weight n per unit.
        if (w == nu * n) {
            current.push_back(nu);
            out.push_back(current);
            current.pop_back();
        }
        return;
    }
    for (int e = 0; e <= nu; ++e) {
        int wrem = w - e * pos;
        if (wrem < 0) break;
        if (wrem > (nu - e) * n) continue;  // unreachable even with all a_n
        current.push_back(e);
        enumerate_monomials(n, nu - e, wrem, current, out);
        current.pop_back();
    }
}

} // namespace

long brute_force_N(int n, int nu, int w, std::size_t monomial_bound) {
    if (n < 1 || nu < 0 || w < 0) throw domain_error("brute_force_N argument out of range");
    std::vector<std::vector<int>> monos;
    std::vector<int> cur;
    enumerate_monomials(n, nu, w, cur, monos);
    if (monos.size() > monomial_bound)
        throw resource_error("brute_force_N: monomial count " + std::to_string(monos.size()) +
                             " exceeds bound " + std::to_string(monomial_bound));
    if (monos.empty()) return 0;

    std::vector<std::vector<int>> lower;
    std::vector<int> cur2;
    if (w >= 1) enumerate_monomials(n, nu, w - 1, cur2, lower);
    std::map<std::vector<int>, std::size_t> lower_index;
    for (std::size_t i = 0; i < lower.size(); ++i) lower_index.emplace(lower[i], i);

    // Matrix of Omega from the weight-w span to the weight-(w-1) span.
    RatMatrix m(lower.size(), std::vector<Rat>(monos.size(), Rat(0)));
    for (std::size_t col = 0; col < monos.size(); ++col) {
        const auto& e = monos[col];
        // Omega(prod a_i^{e_i}) = sum_{i>=1, e_i>0} (n-i+1) e_i
        //   a_{i-1} a_i^{e_i-1} prod_{j != i} a_j^{e_j}
        for (int i = 1; i <= n; ++i) {
            if (e[static_cast<std::size_t>(i)] == 0) continue;
            std::vector<int> img = e;
            img[static_cast<std::size_t>(i)] -= 1;
            img[static_cast<std::size_t>(i - 1)] += 1;
            Rat coef = Rat(n - i + 1) * Rat(e[static_cast<std::size_t>(i)]);
            auto it = lower_index.find(img);
            if (it == lower_index.end()) throw std::logic_error("Omega image misses the span");
            m[it->second][col] += coef;
        }
    }
    return nullspace_dim(m, monos.size());
}

std::vector<std::vector<long>> basis_table(int n, int nu_max, int w_max) {
    std::vector<std::vector<long>> grid(static_cast<std::size_t>(nu_max) + 1,
                                        std::vector<long>(static_cast<std::size_t>(w_max) + 1, 0));
    for (int nu = 0; nu <= nu_max; ++nu)
        for (int w = 0; w <= w_max; ++w)
            grid[static_cast<std::size_t>(nu)][static_cast<std::size_t>(w)] =
                cayley_sylvester_N(n, nu, w);
    return grid;
}

} // namespace binform
