#ifndef BINFORM_SEMINVARIANT_HPP
#define BINFORM_SEMINVARIANT_HPP

#include <map>
#include <optional>

#include "binform/mpoly.hpp"

namespace binform {

// Declared form degree per symbol slot: slot -> n.
using SlotDegrees = std::map<int, int>;

// Homogeneity / isobarity analysis of a polynomial in coefficient symbols.
// The weight of a_i is i regardless of slot; the order is
// m = sum_j n_j nu_j - 2w.
struct GradeReport {
    bool homogeneous = false;
    std::map<int, int> degree_per_slot;  // nu_j, only meaningful when homogeneous
    bool isobaric = false;
    int weight = 0;                      // only meaningful when isobaric
    long order = 0;                      // only meaningful when both hold
};

GradeReport grade(const MPoly& phi, const SlotDegrees& degrees);

// Cayley-Aronhold operator: sum over slots of
// sum_{i=1..n} (n-i+1) a_{i-1} dPhi/da_i.
MPoly omega(const MPoly& phi, const SlotDegrees& degrees);

// Dual operator: sum over slots of sum_{i=0..n-1} (i+1) a_{i+1} dPhi/da_i.
MPoly omega_star(const MPoly& phi, const SlotDegrees& degrees);

struct Classification {
    enum Kind { NotSeminvariant, Seminvariant, Invariant } kind = NotSeminvariant;
    std::map<int, int> degrees;  // nu per slot
    int weight = 0;
    long order = 0;              // 0 for invariants

    int total_degree() const {
        int s = 0;
        for (auto& [slot, nu] : degrees) s += nu;
        return s;
    }
};

// Seminvariant iff homogeneous, isobaric and annihilated by Omega;
// additionally an invariant iff annihilated by Omega* (equivalently, order
// 0). For invariants the reflection law Phi(a reversed) = (-1)^w Phi(a) is
// cross-checked and a failure is an internal error.
Classification classify(const MPoly& phi, const SlotDegrees& degrees);

} // namespace binform

#endif
