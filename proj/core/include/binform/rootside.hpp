#ifndef BINFORM_ROOTSIDE_HPP
#define BINFORM_ROOTSIDE_HPP

#include <string>
#include <vector>

#include "binform/form.hpp"
#include "binform/mpoly.hpp"
#include "binform/rational.hpp"

namespace binform {

// A polynomial presented by leading coefficient and rational roots.
struct RootList {
    Rat a0;
    std::vector<Rat> roots;

    int degree() const { return static_cast<int>(roots.size()); }
    Form to_form() const { return from_roots(a0, roots); }
};

// Evaluate a registered seminvariant directly from the roots:
// Delta (any n), H0 (any n), P/Q (n = 3, 4), I/J/R (n = 4).
// Equals named_eval(name, rl.to_form()) exactly.
Rat seminvariant_from_roots(const std::string& name, const RootList& rl);

// The seminvariant a_0^k S_k, where S_k is the k-th power sum of the
// centered roots, as a polynomial in a_0..a_n (Newton recurrence over the
// reduced-form numerators).
MPoly power_sum_seminvariant(int n, int k);

// The seminvariant a_0^k chi_k (cumulants of a uniformly random root).
MPoly cumulant_seminvariant(int n, int k);

// Evaluate a registered covariant at the point x from the root side with
// denominators cleared, so x may equal a root: "f", "H" (any n), "G" (n=3).
Rat covariant_from_roots(const std::string& source_name, const RootList& rl, const Rat& x);

// Restriction of a named seminvariant to degree n-1 (set a_0 = 0 and shift
// coefficient symbols down); the a_0 -> 0 limit on the root side.
MPoly limit_leading_zero(const std::string& name, int n);

// a_0^m b_0^n prod (xi_i - eta_j): the root-product resultant, an exact
// oracle for the Sylvester route.
Rat resultant_from_roots(const RootList& f, const RootList& g);

} // namespace binform

#endif
