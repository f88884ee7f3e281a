#include "binform/form.hpp"

#include <sstream>

#include "binform/errors.hpp"

namespace binform {

std::string coeff_name(int slot, int i) {
    return "a" + std::to_string(slot) + "_" + std::to_string(i);
}

std::optional<std::pair<int, int>> parse_coeff_name(const std::string& name) {
    if (name.size() < 4 || name[0] != 'a') return std::nullopt;
    std::size_t us = name.find('_');
    if (us == std::string::npos || us == 1 || us + 1 == name.size()) return std::nullopt;
    for (std::size_t i = 1; i < name.size(); ++i)
        if (i != us && !std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    return std::make_pair(std::stoi(name.substr(1, us - 1)), std::stoi(name.substr(us + 1)));
}

Mat2 Mat2::mul(const Mat2& o) const {
    return Mat2(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d);
}

std::optional<Mat2> Mat2::inverse_times_det() const {
    return Mat2(d, MPoly() - b, MPoly() - c, a);
}

Form::Form(std::vector<MPoly> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw domain_error("form needs at least one coefficient");
}

Form Form::zero(int n) {
    if (n < 0) throw domain_error("negative form degree");
    return Form(std::vector<MPoly>(static_cast<std::size_t>(n) + 1));
}

Form Form::generic(int n, int slot) {
    std::vector<MPoly> c;
    c.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c.push_back(MPoly::variable(coeff_name(slot, i)));
    return Form(std::move(c));
}

Form Form::from_rats(const std::vector<Rat>& coeffs) {
    std::vector<MPoly> c(coeffs.begin(), coeffs.end());
    return Form(std::move(c));
}

bool Form::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool Form::is_numeric() const {
    for (const auto& c : coeffs_)
        if (!c.is_constant()) return false;
    return true;
}

std::vector<Rat> Form::numeric_coeffs() const {
    std::vector<Rat> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.constant_value());
    return out;
}

MPoly Form::to_poly(const std::string& var) const {
    const int n = degree();
    MPoly x = MPoly::variable(var);
    MPoly out;
    for (int i = 0; i <= n; ++i) {
        if (coeffs_[static_cast<std::size_t>(i)].is_zero()) continue;
        if (coeffs_[static_cast<std::size_t>(i)].depends_on(var))
            throw domain_error("form coefficient already depends on '" + var + "'");
        out += coeffs_[static_cast<std::size_t>(i)] * x.pow(n - i);
    }
    return out;
}

MPoly Form::to_homogeneous(const std::string& x, const std::string& y) const {
    const int n = degree();
    MPoly vx = MPoly::variable(x), vy = MPoly::variable(y);
    MPoly out;
    for (int i = 0; i <= n; ++i) {
        const auto& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (c.depends_on(x) || c.depends_on(y))
            throw domain_error("form coefficient depends on a point variable");
        out += c * vx.pow(n - i) * vy.pow(i);
    }
    return out;
}

Form Form::from_poly(const MPoly& p, int degree, const std::string& var) {
    if (p.degree_in(var) > degree)
        throw domain_error("polynomial degree exceeds declared form degree");
    auto by_power = p.coefficients_in(var);
    std::vector<MPoly> c(static_cast<std::size_t>(degree) + 1);
    for (auto& [pw, coef] : by_power) c[static_cast<std::size_t>(degree - pw)] = coef;
    return Form(std::move(c));
}

Rat Form::eval(const Rat& x) const { return eval_homogeneous(x, Rat(1)); }

Rat Form::eval_homogeneous(const Rat& x, const Rat& y) const {
    const int n = degree();
    Rat out(0);
    for (int i = 0; i <= n; ++i)
        out += coeffs_[static_cast<std::size_t>(i)].constant_value() * x.pow(n - i) * y.pow(i);
    return out;
}

Form Form::operator-() const {
    std::vector<MPoly> c;
    c.reserve(coeffs_.size());
    for (const auto& a : coeffs_) c.push_back(-a);
    return Form(std::move(c));
}

Form operator+(const Form& f, const Form& g) {
    if (f.degree() != g.degree()) throw domain_error("form addition with mismatched degrees");
    std::vector<MPoly> c;
    c.reserve(f.coeffs_.size());
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) c.push_back(f.coeffs_[i] + g.coeffs_[i]);
    return Form(std::move(c));
}

Form operator-(const Form& f, const Form& g) { return f + (-g); }

Form operator*(const Form& f, const Form& g) {
    const int n = f.degree() + g.degree();
    std::vector<MPoly> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= f.degree(); ++i)
        for (int j = 0; j <= g.degree(); ++j)
            c[static_cast<std::size_t>(i + j)] += f.coeffs_[static_cast<std::size_t>(i)] *
                                                  g.coeffs_[static_cast<std::size_t>(j)];
    return Form(std::move(c));
}

Form Form::scale(const MPoly& k) const {
    std::vector<MPoly> c;
    c.reserve(coeffs_.size());
    for (const auto& a : coeffs_) c.push_back(a * k);
    return Form(std::move(c));
}

Form Form::pow(int e) const {
    if (e < 0) throw domain_error("negative form power");
    Form out = Form::from_rats({Rat(1)});
    Form base = *this;
    while (true) {
        if (e & 1) out = out * base;
        if (!(e >>= 1)) break;
        base = base * base;
    }
    return out;
}

bool operator==(const Form& f, const Form& g) {
    return f.coeffs_ == g.coeffs_;
}

Form Form::drop_leading(int k) const {
    if (k < 0 || k > degree()) throw domain_error("drop_leading out of range");
    for (int i = 0; i < k; ++i)
        if (!coeffs_[static_cast<std::size_t>(i)].is_zero())
            throw domain_error("drop_leading: leading coefficient is not zero");
    return Form(std::vector<MPoly>(coeffs_.begin() + k, coeffs_.end()));
}

std::string Form::to_string(const std::string& var) const {
    return to_poly(var).to_string();
}

Form gl2_act(const Mat2& t, const Form& f) {
    const int n = f.degree();
    for (const MPoly* e : {&t.a, &t.b, &t.c, &t.d})
        if (e->depends_on("x") || e->depends_on("y"))
            throw domain_error("matrix entries may not involve the point variables");
    // Substitute x -> a x + c y, y -> b x + d y simultaneously in the
    // homogeneous view, then collect coefficients of x^(n-i) y^i.
    MPoly hom = f.to_homogeneous("x", "y");
    MPoly x = MPoly::variable("x"), y = MPoly::variable("y");
    MPoly image = hom.substitute({{"x", t.a * x + t.c * y}, {"y", t.b * x + t.d * y}});
    std::vector<MPoly> c(static_cast<std::size_t>(n) + 1);
    for (auto& [xpow, coef] : image.coefficients_in("x"))
        for (auto& [ypow, inner] : coef.coefficients_in("y")) {
            if (xpow + ypow != n) throw domain_error("inhomogeneous action image");
            c[static_cast<std::size_t>(ypow)] += inner;
        }
    return Form(std::move(c));
}

Form translate(const Form& f, const MPoly& t) {
    return gl2_act(Mat2::translation(t), f);
}

Form reflect(const Form& f) {
    std::vector<MPoly> c(f.coeffs().rbegin(), f.coeffs().rend());
    return Form(std::move(c));
}

Form derivative(const Form& f) {
    const int n = f.degree();
    if (n < 1) throw domain_error("derivative of a degree-0 form");
    std::vector<MPoly> c;
    c.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i <= n - 1; ++i) c.push_back(f.coeff(i) * Rat(n - i));
    return Form(std::move(c));
}

Form derivative(const Form& f, int times) {
    Form out = f;
    for (int i = 0; i < times; ++i) out = derivative(out);
    return out;
}

Form restrict_degree(const Form& f, int n) {
    const int m = f.degree();
    if (n < m) throw domain_error("restrict_degree target below current degree");
    std::vector<MPoly> c(static_cast<std::size_t>(n - m));
    c.insert(c.end(), f.coeffs().begin(), f.coeffs().end());
    return Form(std::move(c));
}

Form from_roots(const Rat& a0, const std::vector<Rat>& roots) {
    if (a0.is_zero()) throw domain_error("from_roots with zero leading coefficient");
    std::vector<Rat> c{a0};
    for (const Rat& r : roots) {
        // Multiply by (x - r).
        std::vector<Rat> next(c.size() + 1, Rat(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i] += c[i];
            next[i + 1] -= c[i] * r;
        }
        c = std::move(next);
    }
    return Form::from_rats(c);
}

MPoly reduced_numerator(int n, int i, int slot) {
    if (i < 0 || i > n) throw domain_error("reduced numerator index out of range");
    // a_0^(i-1) * ǎ_i with ǎ_i = sum_j a_j C(n-j, n-i) (-a_1/(n a_0))^(i-j).
    // Every a_0 power cancels: the j = 0 term loses its a_0 factor entirely,
    // the j >= 1 terms keep a_0^(j-1). Index 0 gives the constant 1 and
    // index 1 gives 0.
    MPoly a0 = MPoly::variable(coeff_name(slot, 0));
    MPoly a1 = MPoly::variable(coeff_name(slot, 1));
    MPoly out;
    for (int j = 0; j <= i; ++j) {
        Rat scalar = binomial(n - j, n - i) * Rat(parity_sign(i - j)) / Rat(n).pow(i - j);
        MPoly term = MPoly(scalar) * a1.pow(i - j);
        if (j >= 1) term *= MPoly::variable(coeff_name(slot, j)) * a0.pow(j - 1);
        out += term;
    }
    return out;
}

ReducedForm reduced_form(const Form& f) {
    const int n = f.degree();
    if (n < 1) throw domain_error("reduced form needs degree >= 1");
    ReducedForm out;
    out.numerators.reserve(static_cast<std::size_t>(n) + 1);

    if (f.is_numeric()) {
        auto a = f.numeric_coeffs();
        if (a[0].is_zero()) throw domain_error("reduced form with zero leading coefficient");
        Rat shift = a[1] / (Rat(n) * a[0]);
        Form base = translate(f, MPoly(-shift));
        for (int i = 0; i <= n; ++i)
            out.numerators.push_back(MPoly(a[0].pow(i - 1) * base.coeff(i).constant_value()));
        out.base = std::move(base);
        out.shift = shift;
        return out;
    }

    // Generic form: emit the polynomial numerators only.
    auto slot_of = [&]() -> int {
        for (const auto& v : f.coeff(0).vars())
            if (auto sc = parse_coeff_name(v)) return sc->first;
        return 0;
    };
    const int slot = slot_of();
    for (int i = 0; i <= n; ++i) out.numerators.push_back(reduced_numerator(n, i, slot));
    return out;
}

} // namespace binform
