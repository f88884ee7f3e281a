#include "binform/seminvariant.hpp"

#include <stdexcept>

#include "binform/errors.hpp"
#include "binform/form.hpp"

namespace binform {

namespace {

// Slot/index for every variable of phi; throws on non-coefficient symbols.
std::vector<std::pair<int, int>> coeff_vars(const MPoly& phi, const SlotDegrees& degrees) {
    std::vector<std::pair<int, int>> out;
    out.reserve(phi.vars().size());
    for (const auto& v : phi.vars()) {
        auto parsed = parse_coeff_name(v);
        if (!parsed) throw domain_error("'" + v + "' is not a coefficient symbol");
        auto deg = degrees.find(parsed->first);
        if (deg == degrees.end())
            throw domain_error("no declared degree for symbol slot " +
                               std::to_string(parsed->first));
        if (parsed->second < 0 || parsed->second > deg->second)
            throw domain_error("coefficient index out of range for '" + v + "'");
        out.push_back(*parsed);
    }
    return out;
}

} // namespace

GradeReport grade(const MPoly& phi, const SlotDegrees& degrees) {
    GradeReport rep;
    auto vars = coeff_vars(phi, degrees);
    if (phi.is_zero()) {
        // The zero polynomial grades trivially.
        rep.homogeneous = rep.isobaric = true;
        rep.weight = 0;
        rep.order = 0;
        return rep;
    }
    bool first = true;
    std::map<int, int> slot_degree;
    int weight = 0;
    for (const auto& [exps, coef] : phi.terms()) {
        std::map<int, int> d;
        for (auto& [slot, n] : degrees) d[slot] = 0;
        int w = 0;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            d[vars[i].first] += exps[i];
            w += exps[i] * vars[i].second;
        }
        if (first) {
            slot_degree = d;
            weight = w;
            first = false;
            rep.homogeneous = rep.isobaric = true;
            continue;
        }
        if (d != slot_degree) rep.homogeneous = false;
        if (w != weight) rep.isobaric = false;
    }
    if (rep.homogeneous) rep.degree_per_slot = slot_degree;
    if (rep.isobaric) rep.weight = weight;
    if (rep.homogeneous && rep.isobaric) {
        long m = -2L * weight;
        for (auto& [slot, nu] : slot_degree) {
            auto n = degrees.find(slot);
            m += static_cast<long>(n->second) * nu;
        }
        rep.order = m;
    }
    return rep;
}

namespace {

MPoly apply_ladder(const MPoly& phi, const SlotDegrees& degrees, bool dual) {
    coeff_vars(phi, degrees);  // validate symbols
    MPoly out;
    for (const auto& [slot, n] : degrees) {
        if (dual) {
            for (int i = 0; i <= n - 1; ++i) {
                MPoly d = phi.derivative(coeff_name(slot, i));
                if (d.is_zero()) continue;
                out += MPoly(Rat(i + 1)) * MPoly::variable(coeff_name(slot, i + 1)) * d;
            }
        } else {
            for (int i = 1; i <= n; ++i) {
                MPoly d = phi.derivative(coeff_name(slot, i));
                if (d.is_zero()) continue;
                out += MPoly(Rat(n - i + 1)) * MPoly::variable(coeff_name(slot, i - 1)) * d;
            }
        }
    }
    return out;
}

} // namespace

MPoly omega(const MPoly& phi, const SlotDegrees& degrees) {
    return apply_ladder(phi, degrees, false);
}

MPoly omega_star(const MPoly& phi, const SlotDegrees& degrees) {
    return apply_ladder(phi, degrees, true);
}

Classification classify(const MPoly& phi, const SlotDegrees& degrees) {
    Classification cls;
    GradeReport rep = grade(phi, degrees);
    if (!rep.homogeneous || !rep.isobaric) return cls;
    if (!omega(phi, degrees).is_zero()) return cls;

    cls.degrees = rep.degree_per_slot;
    cls.weight = rep.weight;
    cls.order = rep.order;

    bool dual_zero = omega_star(phi, degrees).is_zero();
    bool order_zero = rep.order == 0;
    if (dual_zero != order_zero)
        throw std::logic_error("classify: Omega* and order-0 criteria disagree");
    if (!dual_zero) {
        cls.kind = Classification::Seminvariant;
        return cls;
    }

    // Reflection law for invariants: Phi(a_n..a_0) = (-1)^w Phi(a_0..a_n).
    std::map<std::string, MPoly> reversal;
    for (const auto& [slot, n] : degrees)
        for (int i = 0; i <= n; ++i)
            reversal.emplace(coeff_name(slot, i), MPoly::variable(coeff_name(slot, n - i)));
    MPoly reflected = phi.substitute(reversal);
    MPoly expected = MPoly(Rat(parity_sign(rep.weight))) * phi;
    if (reflected != expected)
        throw std::logic_error("classify: invariant fails the reflection law");

    cls.kind = Classification::Invariant;
    return cls;
}

} // namespace binform
