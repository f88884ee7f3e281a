#ifndef BINFORM_NAMED_HPP
#define BINFORM_NAMED_HPP

#include <string>
#include <vector>

#include "binform/form.hpp"
#include "binform/mpoly.hpp"
#include "binform/seminvariant.hpp"

namespace binform {

// A named seminvariant/invariant of forms of degree n, with its defining
// polynomial in the slot-0 coefficient symbols and its verified grade.
struct NamedObject {
    std::string name;
    int n = 0;
    MPoly defining;
    Classification meta;
};

// Scalar registry: Delta (n = 2..6), H0 (n = 2..4), P, Q (n = 3, 4),
// R, I, J (n = 4). Each entry's grade is recomputed and checked once at
// registry construction.
const std::vector<NamedObject>& named_registry();
bool has_named(const std::string& name, int n);
const NamedObject& named(const std::string& name, int n);

// Substitute the coefficients of g (degree n, possibly symbolic) into the
// named polynomial.
MPoly apply_named(const std::string& name, int n, const Form& g);
// Numeric evaluation.
Rat named_eval(const std::string& name, const Form& g);

// Covariant registry: H (n = 2..4), tH (n = 3, 4), G (n = 3), JH and tJH
// (n = 4), each stored with generic slot-0 coefficients and verified at
// construction against its operational definition (Hessian/Jacobian).
const Form& named_covariant(const std::string& name, int n);
// Substitute the coefficients of g into every coefficient of the covariant.
Form apply_named_covariant(const std::string& name, int n, const Form& g);

} // namespace binform

#endif
