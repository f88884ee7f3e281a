#include "binform/rootside.hpp"

#include <map>

#include "binform/errors.hpp"
#include "binform/named.hpp"

namespace binform {

namespace {

Rat sum_squared_differences(const std::vector<Rat>& xi) {
    Rat s(0);
    for (std::size_t i = 0; i < xi.size(); ++i)
        for (std::size_t j = i + 1; j < xi.size(); ++j) {
            Rat d = xi[i] - xi[j];
            s += d * d;
        }
    return s;
}

Rat delta_from_roots(const RootList& rl) {
    const int n = rl.degree();
    Rat prod(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rat d = rl.roots[static_cast<std::size_t>(i)] - rl.roots[static_cast<std::size_t>(j)];
            prod *= d * d;
        }
    return rl.a0.pow(2 * n - 2) * prod;
}

Rat q3_from_roots(const RootList& rl) {
    const auto& x = rl.roots;
    Rat t1 = Rat(2) * x[0] - x[1] - x[2];
    Rat t2 = Rat(2) * x[1] - x[0] - x[2];
    Rat t3 = Rat(2) * x[2] - x[0] - x[1];
    return -rl.a0.pow(3) * t1 * t2 * t3;
}

Rat q4_from_roots(const RootList& rl) {
    const auto& x = rl.roots;
    Rat t1 = x[0] + x[1] - x[2] - x[3];
    Rat t2 = x[0] - x[1] + x[2] - x[3];
    Rat t3 = x[0] - x[1] - x[2] + x[3];
    return -rl.a0.pow(3) * t1 * t2 * t3;
}

Rat i4_from_roots(const RootList& rl) {
    const auto& x = rl.roots;
    Rat ssq(0);  // sum over pairs of xi_i^2 xi_j^2 (6 terms)
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) ssq += x[i].pow(2) * x[j].pow(2);
    Rat smix(0);  // xi_i^2 xi_j xi_k over i not in {j < k} (12 terms)
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k) {
                if (i == j || i == k) continue;
                smix += x[i].pow(2) * x[j] * x[k];
            }
    Rat sall = Rat(6) * x[0] * x[1] * x[2] * x[3];
    return rl.a0.pow(2) * (ssq - smix + sall);
}

Rat j4_from_roots(const RootList& rl) {
    const auto& x = rl.roots;
    Rat b1 = (x[0] - x[2]) * (x[1] - x[3]) + (x[0] - x[3]) * (x[1] - x[2]);
    Rat b2 = (x[0] - x[1]) * (x[2] - x[3]) + (x[0] - x[3]) * (x[2] - x[1]);
    Rat b3 = (x[0] - x[1]) * (x[3] - x[2]) + (x[0] - x[2]) * (x[3] - x[1]);
    return -rl.a0.pow(3) * b1 * b2 * b3;
}

} // namespace

Rat seminvariant_from_roots(const std::string& name, const RootList& rl) {
    const int n = rl.degree();
    if (n < 1) throw domain_error("root list is empty");
    if (name == "Delta") return delta_from_roots(rl);
    if (name == "H0") {
        if (n < 2) throw domain_error("H0 needs degree >= 2");
        return -Rat(n - 1) * rl.a0.pow(2) * sum_squared_differences(rl.roots);
    }
    if (name == "P" && n == 3) return -rl.a0.pow(2) * sum_squared_differences(rl.roots) / Rat(2);
    if (name == "P" && n == 4) return -rl.a0.pow(2) * sum_squared_differences(rl.roots);
    if (name == "Q" && n == 3) return q3_from_roots(rl);
    if (name == "Q" && n == 4) return q4_from_roots(rl);
    if (name == "I" && n == 4) return i4_from_roots(rl);
    if (name == "J" && n == 4) return j4_from_roots(rl);
    if (name == "R" && n == 4) {
        Rat i = i4_from_roots(rl);
        Rat p = seminvariant_from_roots("P", rl);
        return (Rat(64) * rl.a0.pow(2) * i - p * p) / Rat(3);
    }
    throw domain_error("no root-side formula registered for '" + name + "' at degree " +
                       std::to_string(n));
}

namespace {

// E_j = a_0^j e_j(centered roots) = (-1)^j * reduced numerator rho_j.
MPoly centered_elementary(int n, int j) {
    if (j > n) return MPoly();
    return MPoly(Rat(parity_sign(j))) * reduced_numerator(n, j, 0);
}

} // namespace

MPoly power_sum_seminvariant(int n, int k) {
    if (k < 2) throw domain_error("power sums are registered for k >= 2");
    if (n < 1) throw domain_error("power sums need degree >= 1");
    // Newton: k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} S_i, homogenized by
    // a_0 powers; S_1 = 0 starts the recurrence.
    std::vector<MPoly> shat(static_cast<std::size_t>(k) + 1);
    shat[1] = MPoly();
    for (int kk = 2; kk <= k; ++kk) {
        MPoly acc = MPoly(Rat(kk)) * centered_elementary(n, kk);
        for (int i = 1; i <= kk - 1; ++i)
            acc -= MPoly(Rat(parity_sign(i - 1))) * centered_elementary(n, kk - i) *
                   shat[static_cast<std::size_t>(i)];
        shat[static_cast<std::size_t>(kk)] = MPoly(Rat(parity_sign(kk - 1))) * acc;
    }
    return shat[static_cast<std::size_t>(k)];
}

MPoly cumulant_seminvariant(int n, int k) {
    if (k < 2) throw domain_error("cumulants are registered for k >= 2");
    // chi_k = m_k - sum_{j=1..k-1} C(k-1, j-1) chi_j m_{k-j} with moments
    // m_k = S_k / n; chi_1 = m_1 = 0.
    std::vector<MPoly> mhat(static_cast<std::size_t>(k) + 1);  // a_0^k m_k
    mhat[1] = MPoly();
    for (int i = 2; i <= k; ++i)
        mhat[static_cast<std::size_t>(i)] =
            power_sum_seminvariant(n, i) * MPoly(Rat(1, n));
    std::vector<MPoly> chi(static_cast<std::size_t>(k) + 1);
    chi[1] = MPoly();
    for (int kk = 2; kk <= k; ++kk) {
        MPoly acc = mhat[static_cast<std::size_t>(kk)];
        for (int j = 2; j <= kk - 2; ++j)
            acc -= MPoly(binomial(kk - 1, j - 1)) * chi[static_cast<std::size_t>(j)] *
                   mhat[static_cast<std::size_t>(kk - j)];
        chi[static_cast<std::size_t>(kk)] = acc;
    }
    return chi[static_cast<std::size_t>(k)];
}

Rat covariant_from_roots(const std::string& source_name, const RootList& rl, const Rat& x) {
    const int n = rl.degree();
    const auto& xi = rl.roots;
    auto prod_except = [&](int skip1, int skip2) {
        Rat p(1);
        for (int k = 0; k < n; ++k) {
            if (k == skip1 || k == skip2) continue;
            p *= x - xi[static_cast<std::size_t>(k)];
        }
        return p;
    };
    if (source_name == "f") {
        return rl.a0 * prod_except(-1, -1);
    }
    if (source_name == "H") {
        if (n < 2) throw domain_error("H needs degree >= 2");
        Rat sum(0);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Rat d = xi[static_cast<std::size_t>(i)] - xi[static_cast<std::size_t>(j)];
                Rat pk = prod_except(i, j);
                sum += d * d * pk * pk;
            }
        return -Rat(n - 1) * rl.a0.pow(2) * sum;
    }
    if (source_name == "G" && n == 3) {
        Rat u0 = x - xi[0], u1 = x - xi[1], u2 = x - xi[2];
        Rat b1 = u1 * (xi[0] - xi[2]) + u2 * (xi[0] - xi[1]);
        Rat b2 = u0 * (xi[1] - xi[2]) + u2 * (xi[1] - xi[0]);
        Rat b3 = u0 * (xi[2] - xi[1]) + u1 * (xi[2] - xi[0]);
        return -rl.a0.pow(3) * b1 * b2 * b3;
    }
    throw domain_error("no root-side covariant formula registered for '" + source_name + "'");
}

MPoly limit_leading_zero(const std::string& name, int n) {
    const NamedObject& obj = named(name, n);
    std::map<std::string, MPoly> sub;
    sub.emplace(coeff_name(0, 0), MPoly());
    for (int i = 1; i <= n; ++i)
        sub.emplace(coeff_name(0, i), MPoly::variable(coeff_name(0, i - 1)));
    return obj.defining.substitute(sub);
}

Rat resultant_from_roots(const RootList& f, const RootList& g) {
    if (f.a0.is_zero() || g.a0.is_zero())
        throw domain_error("resultant_from_roots needs nonzero leading coefficients");
    Rat prod(1);
    for (const Rat& xi : f.roots)
        for (const Rat& eta : g.roots) prod *= xi - eta;
    return f.a0.pow(g.degree()) * g.a0.pow(f.degree()) * prod;
}

} // namespace binform
