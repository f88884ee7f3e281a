#include "binform/named.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "binform/covariant.hpp"
#include "binform/errors.hpp"

namespace binform {

namespace {

MPoly a(int i) { return MPoly::variable(coeff_name(0, i)); }
MPoly c(long k) { return MPoly(Rat(k)); }

MPoly delta2_poly() { return a(1) * a(1) - c(4) * a(0) * a(2); }

MPoly delta3_poly() {
    return a(1).pow(2) * a(2).pow(2) - c(4) * a(1).pow(3) * a(3) - c(4) * a(0) * a(2).pow(3) +
           c(18) * a(0) * a(1) * a(2) * a(3) - c(27) * a(0).pow(2) * a(3).pow(2);
}

MPoly p3_poly() { return c(3) * a(0) * a(2) - a(1) * a(1); }
MPoly q3_poly() {
    return c(2) * a(1).pow(3) + c(27) * a(0).pow(2) * a(3) - c(9) * a(0) * a(1) * a(2);
}

MPoly p4_poly() { return c(8) * a(0) * a(2) - c(3) * a(1) * a(1); }
MPoly q4_poly() {
    return c(8) * a(0).pow(2) * a(3) - c(4) * a(0) * a(1) * a(2) + a(1).pow(3);
}
MPoly r4_poly() {
    return c(256) * a(0).pow(3) * a(4) - c(64) * a(0).pow(2) * a(1) * a(3) +
           c(16) * a(0) * a(1).pow(2) * a(2) - c(3) * a(1).pow(4);
}
MPoly i4_poly() { return c(12) * a(0) * a(4) - c(3) * a(1) * a(3) + a(2) * a(2); }
MPoly j4_poly() {
    return c(72) * a(0) * a(2) * a(4) - c(27) * a(0) * a(3).pow(2) - c(27) * a(1).pow(2) * a(4) +
           c(9) * a(1) * a(2) * a(3) - c(2) * a(2).pow(3);
}

MPoly h0_poly(int n) {
    return c(2L * n * (n - 1)) * a(0) * a(2) - c(1L * (n - 1) * (n - 1)) * a(1) * a(1);
}

void check_meta(const NamedObject& obj, Classification::Kind kind, int nu, int w, long m) {
    if (obj.meta.kind != kind || obj.meta.total_degree() != nu || obj.meta.weight != w ||
        obj.meta.order != m)
        throw std::logic_error("named registry: '" + obj.name + "' (n=" + std::to_string(obj.n) +
                               ") does not classify to its documented grade");
}

const NamedObject* named_lookup(const std::vector<NamedObject>& reg, const std::string& name,
                                int n) {
    for (const auto& obj : reg)
        if (obj.name == name && obj.n == n) return &obj;
    return nullptr;
}

std::vector<NamedObject> build_registry() {
    struct Spec {
        std::string name;
        int n;
        MPoly poly;
        Classification::Kind kind;
        int nu, w;
        long m;
    };
    std::vector<Spec> specs;
    specs.push_back({"Delta", 2, delta2_poly(), Classification::Invariant, 2, 2, 0});
    specs.push_back({"Delta", 3, delta3_poly(), Classification::Invariant, 4, 6, 0});
    specs.push_back({"Delta", 4, generic_discriminant(4), Classification::Invariant, 6, 12, 0});
    specs.push_back({"Delta", 5, generic_discriminant(5), Classification::Invariant, 8, 20, 0});
    specs.push_back({"Delta", 6, generic_discriminant(6), Classification::Invariant, 10, 30, 0});
    specs.push_back({"P", 3, p3_poly(), Classification::Seminvariant, 2, 2, 2});
    specs.push_back({"Q", 3, q3_poly(), Classification::Seminvariant, 3, 3, 3});
    specs.push_back({"P", 4, p4_poly(), Classification::Seminvariant, 2, 2, 4});
    specs.push_back({"Q", 4, q4_poly(), Classification::Seminvariant, 3, 3, 6});
    specs.push_back({"R", 4, r4_poly(), Classification::Seminvariant, 4, 4, 8});
    specs.push_back({"I", 4, i4_poly(), Classification::Invariant, 2, 4, 0});
    specs.push_back({"J", 4, j4_poly(), Classification::Invariant, 3, 6, 0});
    // H0 has order 2n - 4, which makes it an invariant exactly when n = 2.
    for (int n = 2; n <= 4; ++n)
        specs.push_back({"H0", n, h0_poly(n),
                         n == 2 ? Classification::Invariant : Classification::Seminvariant, 2, 2,
                         2L * n - 4});

    std::vector<NamedObject> out;
    out.reserve(specs.size());
    for (auto& s : specs) {
        Classification cls = classify(s.poly, {{0, s.n}});
        NamedObject obj{s.name, s.n, std::move(s.poly), std::move(cls)};
        check_meta(obj, s.kind, s.nu, s.w, s.m);
        out.push_back(std::move(obj));
    }

    // Cross-checks between independent routes.
    if (named_lookup(out, "Delta", 2)->defining != generic_discriminant(2) ||
        named_lookup(out, "Delta", 3)->defining != generic_discriminant(3))
        throw std::logic_error("named registry: explicit discriminants disagree with R(f,f')/a0");
    return out;
}

} // namespace

const std::vector<NamedObject>& named_registry() {
    static const std::vector<NamedObject> reg = build_registry();
    return reg;
}

bool has_named(const std::string& name, int n) {
    return named_lookup(named_registry(), name, n) != nullptr;
}

const NamedObject& named(const std::string& name, int n) {
    const NamedObject* obj = named_lookup(named_registry(), name, n);
    if (!obj)
        throw domain_error("no registered object '" + name + "' for degree " + std::to_string(n));
    return *obj;
}

MPoly apply_named(const std::string& name, int n, const Form& g) {
    if (g.degree() != n)
        throw domain_error("apply_named: form degree " + std::to_string(g.degree()) +
                           " does not match " + std::to_string(n));
    const NamedObject& obj = named(name, n);
    std::map<std::string, MPoly> sub;
    for (int i = 0; i <= n; ++i) sub.emplace(coeff_name(0, i), g.coeff(i));
    return obj.defining.substitute(sub);
}

Rat named_eval(const std::string& name, const Form& g) {
    return apply_named(name, g.degree(), g).constant_value();
}

namespace {

Form h3_form() {
    return Form({c(12) * a(0) * a(2) - c(4) * a(1) * a(1),
                 c(36) * a(0) * a(3) - c(4) * a(1) * a(2),
                 c(12) * a(1) * a(3) - c(4) * a(2) * a(2)});
}

Form h4_form() {
    return Form({c(24) * a(0) * a(2) - c(9) * a(1) * a(1),
                 c(72) * a(0) * a(3) - c(12) * a(1) * a(2),
                 c(144) * a(0) * a(4) + c(18) * a(1) * a(3) - c(12) * a(2) * a(2),
                 c(72) * a(1) * a(4) - c(12) * a(2) * a(3),
                 c(24) * a(2) * a(4) - c(9) * a(3) * a(3)});
}

Form g3_form() {
    return Form({c(27) * a(0).pow(2) * a(3) - c(9) * a(0) * a(1) * a(2) + c(2) * a(1).pow(3),
                 c(27) * a(0) * a(1) * a(3) - c(18) * a(0) * a(2).pow(2) +
                     c(3) * a(1).pow(2) * a(2),
                 c(-27) * a(0) * a(2) * a(3) + c(18) * a(1).pow(2) * a(3) -
                     c(3) * a(1) * a(2).pow(2),
                 c(9) * a(1) * a(2) * a(3) - c(2) * a(2).pow(3) - c(27) * a(0) * a(3).pow(2)});
}

Form jh4_form() {
    return Form(
        {c(288) * a(0).pow(2) * a(3) - c(144) * a(0) * a(1) * a(2) + c(36) * a(1).pow(3),
         c(1152) * a(0).pow(2) * a(4) + c(144) * a(0) * a(1) * a(3) - c(288) * a(0) * a(2).pow(2) +
             c(72) * a(1).pow(2) * a(2),
         c(1440) * a(0) * a(1) * a(4) - c(720) * a(0) * a(2) * a(3) + c(180) * a(1).pow(2) * a(3),
         c(-720) * a(0) * a(3).pow(2) + c(720) * a(1).pow(2) * a(4),
         c(-1440) * a(0) * a(3) * a(4) + c(720) * a(1) * a(2) * a(4) - c(180) * a(1) * a(3).pow(2),
         c(-1152) * a(0) * a(4).pow(2) - c(144) * a(1) * a(3) * a(4) + c(288) * a(2).pow(2) * a(4) -
             c(72) * a(2) * a(3).pow(2),
         c(144) * a(2) * a(3) * a(4) - c(36) * a(3).pow(3) - c(288) * a(1) * a(4).pow(2)});
}

std::map<std::pair<std::string, int>, Form> build_covariant_registry() {
    std::map<std::pair<std::string, int>, Form> reg;
    Form f2 = Form::generic(2), f3 = Form::generic(3), f4 = Form::generic(4);

    Form h2 = hessian(f2);
    Form h3 = h3_form(), h4 = h4_form(), g3 = g3_form(), jh4 = jh4_form();
    if (h3 != hessian(f3) || h4 != hessian(f4))
        throw std::logic_error("covariant registry: explicit Hessians disagree with n(n-1)ff''-(n-1)^2 f'^2");
    if (g3.scale(MPoly(Rat(4))) != jacobian(f3, h3))
        throw std::logic_error("covariant registry: G disagrees with J(f,H)/4");
    if (jh4 != jacobian(f4, h4))
        throw std::logic_error("covariant registry: JH disagrees with J(f,H)");

    reg.emplace(std::make_pair("H", 2), h2);
    reg.emplace(std::make_pair("H", 3), h3);
    reg.emplace(std::make_pair("tH", 3), h3.scale(MPoly(Rat(1, 4))));
    reg.emplace(std::make_pair("G", 3), g3);
    reg.emplace(std::make_pair("H", 4), h4);
    reg.emplace(std::make_pair("tH", 4), h4.scale(MPoly(Rat(1, 3))));
    reg.emplace(std::make_pair("JH", 4), jh4);
    reg.emplace(std::make_pair("tJH", 4), jh4.scale(MPoly(Rat(1, 36))));
    return reg;
}

const std::map<std::pair<std::string, int>, Form>& covariant_registry() {
    static const auto reg = build_covariant_registry();
    return reg;
}

} // namespace

const Form& named_covariant(const std::string& name, int n) {
    auto it = covariant_registry().find({name, n});
    if (it == covariant_registry().end())
        throw domain_error("no registered covariant '" + name + "' for degree " +
                           std::to_string(n));
    return it->second;
}

Form apply_named_covariant(const std::string& name, int n, const Form& g) {
    if (g.degree() != n)
        throw domain_error("apply_named_covariant: degree mismatch");
    const Form& cov = named_covariant(name, n);
    std::map<std::string, MPoly> sub;
    for (int i = 0; i <= n; ++i) sub.emplace(coeff_name(0, i), g.coeff(i));
    std::vector<MPoly> coeffs;
    coeffs.reserve(cov.coeffs().size());
    for (const auto& cc : cov.coeffs()) coeffs.push_back(cc.substitute(sub));
    return Form(std::move(coeffs));
}

} // namespace binform
