#include "binform/covariant.hpp"

#include <map>
#include <mutex>

#include "binform/errors.hpp"
#include "binform/linalg.hpp"
#include "binform/seminvariant.hpp"

namespace binform {

namespace {

// Mixed partial d^(px+py) F / dx^px dy^py.
MPoly mixed_partial(const MPoly& hom, int px, int py) {
    MPoly out = hom;
    for (int i = 0; i < px; ++i) out = out.derivative("x");
    for (int i = 0; i < py; ++i) out = out.derivative("y");
    return out;
}

Form collect_binary(const MPoly& p, int order) {
    // p is homogeneous of degree `order` in x, y; read off the coefficients.
    std::vector<MPoly> c(static_cast<std::size_t>(order) + 1);
    for (auto& [xpow, coef] : p.coefficients_in("x"))
        for (auto& [ypow, inner] : coef.coefficients_in("y")) {
            if (xpow + ypow != order)
                throw domain_error("expected a homogeneous binary polynomial");
            c[static_cast<std::size_t>(ypow)] += inner;
        }
    return Form(std::move(c));
}

} // namespace

Form transvectant(const Form& f, const Form& g, int k) {
    if (k < 0) throw domain_error("transvectant index must be >= 0");
    const int n1 = f.degree(), n2 = g.degree();
    const int order = n1 + n2 - 2 * k;
    if (k > std::min(n1, n2)) return Form::zero(order < 0 ? 0 : order);
    MPoly fh = f.to_homogeneous(), gh = g.to_homogeneous();
    MPoly sum;
    for (int i = 0; i <= k; ++i) {
        MPoly term = mixed_partial(fh, k - i, i) * mixed_partial(gh, i, k - i);
        sum += MPoly(binomial(k, i) * Rat(parity_sign(i))) * term;
    }
    return collect_binary(sum, order);
}

MPoly apolar(const Form& f, const Form& g) {
    const int n = f.degree();
    if (g.degree() != n) throw domain_error("apolar invariant needs equal degrees");
    MPoly out;
    for (int i = 0; i <= n; ++i)
        out += MPoly(factorial(i) * factorial(n - i) * Rat(parity_sign(i))) * f.coeff(i) *
               g.coeff(n - i);
    return out;
}

Form apolar_cov(const Form& f, const Form& g) {
    if (f.degree() < g.degree())
        throw domain_error("apolar covariant needs deg f >= deg g");
    return transvectant(f, g, g.degree());
}

Form jacobian(const Form& f, const Form& g) {
    const int n1 = f.degree(), n2 = g.degree();
    if (n1 < 1 || n2 < 1) throw domain_error("jacobian needs degrees >= 1");
    Form raw = derivative(f).scale(MPoly(Rat(n2))) * g - f * derivative(g).scale(MPoly(Rat(n1)));
    // Declared degree n1 + n2 - 1; the top coefficient cancels identically.
    return raw.drop_leading(1);
}

Form hessian(const Form& f) {
    const int n = f.degree();
    if (n < 2) throw domain_error("hessian needs degree >= 2");
    Form raw = (f * derivative(f, 2)).scale(MPoly(Rat(n * (n - 1)))) -
               derivative(f).pow(2).scale(MPoly(Rat((n - 1) * (n - 1))));
    // Order 2n - 4: the top two coefficients cancel identically.
    return raw.drop_leading(2);
}

Form gundelfinger(const Form& f, int k) {
    const int n = f.degree();
    if (k < 0) throw domain_error("gundelfinger index must be >= 0");
    const int order = (k + 1) * (n - 2 * k);
    if (2 * k > n) return Form::zero(order < 0 ? 0 : order);
    PolyMatrix m(static_cast<std::size_t>(k) + 1,
                 std::vector<MPoly>(static_cast<std::size_t>(k) + 1));
    std::vector<MPoly> deriv{f.to_poly("x")};
    for (int d = 1; d <= 2 * k; ++d) deriv.push_back(deriv.back().derivative("x"));
    // Entry (i,j) is (n-i-j)!/(n-2k)! * f^(i+j); the prefactor is the
    // falling factorial (n-i-j) falling (2k-i-j), always an integer.
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= k; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                MPoly(falling_factorial(n - i - j, 2 * k - i - j)) *
                deriv[static_cast<std::size_t>(i + j)];
    return Form::from_poly(det_fraction_free(m), order);
}

MPoly hankel(const Form& f) {
    const int n = f.degree();
    if (n % 2 != 0) throw domain_error("hankel determinant needs even degree");
    const int q = n / 2;
    PolyMatrix m(static_cast<std::size_t>(q) + 1,
                 std::vector<MPoly>(static_cast<std::size_t>(q) + 1));
    for (int i = 0; i <= q; ++i)
        for (int j = 0; j <= q; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                f.coeff(i + j) * MPoly(binomial(n, i + j).inverse());
    return det_fraction_free(m);
}

MPoly source(const Form& covariant) { return covariant.coeff(0); }

Form reconstruct_covariant(const MPoly& phi, int n, int m) {
    auto cls = classify(phi, {{0, n}});
    if (cls.kind == Classification::NotSeminvariant)
        throw domain_error("reconstruct_covariant: source is not a seminvariant");
    if (cls.order != m)
        throw domain_error("reconstruct_covariant: declared order disagrees with n*nu - 2w");
    if (m < 0) throw domain_error("reconstruct_covariant: negative order");
    std::vector<MPoly> c(static_cast<std::size_t>(m) + 1);
    MPoly cur = phi;
    Rat fact(1);
    for (int j = 0; j <= m; ++j) {
        if (j > 0) fact *= Rat(j);
        c[static_cast<std::size_t>(j)] = cur * MPoly(fact.inverse());
        cur = omega_star(cur, {{0, n}});
    }
    if (!cur.is_zero())
        throw domain_error("reconstruct_covariant: (Omega*)^(m+1) did not annihilate the source");
    return Form(std::move(c));
}

MPoly resultant(const Form& f, const Form& g) {
    const int n = f.degree(), m = g.degree();
    if (n < 1 || m < 1) throw domain_error("resultant needs degrees >= 1");
    const std::size_t size = static_cast<std::size_t>(n + m);
    PolyMatrix s(size, std::vector<MPoly>(size));
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = f.coeff(i);
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i)
            s[static_cast<std::size_t>(m + r)][static_cast<std::size_t>(r + i)] = g.coeff(i);
    return det_fraction_free(s);
}

const MPoly& generic_discriminant(int n) {
    if (n < 1) throw domain_error("discriminant needs degree >= 1");
    static std::map<int, MPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    MPoly value;
    if (n == 1) {
        value = MPoly(Rat(1));
    } else {
        Form f = Form::generic(n, 0);
        MPoly res = resultant(f, derivative(f));
        MPoly signed_res = MPoly(Rat(parity_sign(static_cast<long>(n) * (n - 1) / 2))) * res;
        value = signed_res.divide_exact(MPoly::variable(coeff_name(0, 0)));
    }
    return cache.emplace(n, std::move(value)).first->second;
}

MPoly discriminant_general(const Form& f) {
    const int n = f.degree();
    if (n < 2) throw domain_error("discriminant_general needs degree >= 2");
    const MPoly& generic = generic_discriminant(n);
    std::map<std::string, MPoly> sub;
    for (int i = 0; i <= n; ++i) sub.emplace(coeff_name(0, i), f.coeff(i));
    return generic.substitute(sub);
}

} // namespace binform
