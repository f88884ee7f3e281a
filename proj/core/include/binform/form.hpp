#ifndef BINFORM_FORM_HPP
#define BINFORM_FORM_HPP

#include <optional>
#include <string>
#include <vector>

#include "binform/mpoly.hpp"
#include "binform/rational.hpp"

namespace binform {

// Coefficient symbol for slot `slot`, index `i`: "a<slot>_<i>". Slot 0 is
// the default single-form slot.
std::string coeff_name(int slot, int i);
// Inverse of coeff_name; nullopt when the name is not a coefficient symbol.
std::optional<std::pair<int, int>> parse_coeff_name(const std::string& name);

// 2x2 matrix acting on binary forms. Entries are polynomials so that
// symbolic translations (e.g. x -> x + t with t a variable) share the same
// action code path as numeric ones. Singular matrices are allowed.
struct Mat2 {
    MPoly a, b, c, d;  // [[a, b], [c, d]]

    Mat2(MPoly a_, MPoly b_, MPoly c_, MPoly d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}
    Mat2(const Rat& a_, const Rat& b_, const Rat& c_, const Rat& d_)
        : a(a_), b(b_), c(c_), d(d_) {}

    MPoly det() const { return a * d - b * c; }
    static Mat2 identity() { return Mat2(Rat(1), Rat(0), Rat(0), Rat(1)); }
    static Mat2 translation(const MPoly& t) { return Mat2(MPoly(Rat(1)), MPoly(), t, MPoly(Rat(1))); }
    Mat2 mul(const Mat2& o) const;
    std::optional<Mat2> inverse_times_det() const;  // adjugate
};

// Binary form / univariate polynomial of declared degree n:
// f(x, y) = sum a_i x^(n-i) y^i, kept as the coefficient vector [a_0..a_n].
// The degree is declared, not inferred: a_0 = 0 is legal and meaningful
// (a projective root at infinity).
class Form {
public:
    explicit Form(std::vector<MPoly> coeffs);
    static Form zero(int n);
    static Form generic(int n, int slot = 0);
    static Form from_rats(const std::vector<Rat>& coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const MPoly& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    const std::vector<MPoly>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_numeric() const;
    std::vector<Rat> numeric_coeffs() const;  // throws if symbolic

    // Dehomogenized view sum a_i x^(n-i) as an MPoly in `var`.
    MPoly to_poly(const std::string& var = "x") const;
    // Homogeneous view sum a_i x^(n-i) y^i.
    MPoly to_homogeneous(const std::string& x = "x", const std::string& y = "y") const;
    static Form from_poly(const MPoly& p, int degree, const std::string& var = "x");

    Rat eval(const Rat& x) const;                    // numeric forms
    Rat eval_homogeneous(const Rat& x, const Rat& y) const;

    Form operator-() const;
    friend Form operator+(const Form& f, const Form& g);
    friend Form operator-(const Form& f, const Form& g);
    friend Form operator*(const Form& f, const Form& g);  // degrees add
    Form scale(const MPoly& c) const;
    Form pow(int e) const;
    friend bool operator==(const Form& f, const Form& g);
    friend bool operator!=(const Form& f, const Form& g) { return !(f == g); }

    // Re-declare at degree n - k after checking the k leading coefficients
    // vanish (used where a construction provably cancels leading terms).
    Form drop_leading(int k) const;

    std::string to_string(const std::string& var = "x") const;

private:
    std::vector<MPoly> coeffs_;
};

// --- The GL(2) / affine action and elementary constructions ---

// (Tf)(x) := f(xT) with x a row vector: coefficients of
// f(a x + c y, b x + d y). Degree is preserved; singular T allowed.
Form gl2_act(const Mat2& t, const Form& f);

// f(x + t) for polynomial t; gl2_act with the matrix [[1,0],[t,1]].
Form translate(const Form& f, const MPoly& t);

// Coefficient reversal (a_n, ..., a_0): the reflected form f(y, x).
Form reflect(const Form& f);

// d/dx of the polynomial view: a_i(f') = (n-i) a_i(f). Requires n >= 1.
Form derivative(const Form& f);
Form derivative(const Form& f, int times);

// Zero-padded embedding of a degree-m polynomial into degree n >= m.
Form restrict_degree(const Form& f, int n);

// a_i = (-1)^i a_0 e_i(roots); requires a_0 != 0.
Form from_roots(const Rat& a0, const std::vector<Rat>& roots);

// Reduced form f(x - a_1/(n a_0)). For numeric forms `base` and `shift` are
// exact; for symbolic forms only the polynomial numerators a_0^(i-1)*ǎ_i are
// produced (they are honest polynomials, homogeneous and isobaric of
// degree/weight i). Index 0 is the constant 1 and index 1 is 0.
struct ReducedForm {
    std::optional<Form> base;
    std::optional<Rat> shift;
    std::vector<MPoly> numerators;  // numerators[i] = a_0^(i-1) * ǎ_i
};
ReducedForm reduced_form(const Form& f);

// The numerator polynomial a_0^(i-1)*ǎ_i for a generic form of degree n.
MPoly reduced_numerator(int n, int i, int slot = 0);

} // namespace binform

#endif
