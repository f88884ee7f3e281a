#ifndef BINFORM_MPOLY_HPP
#define BINFORM_MPOLY_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "binform/rational.hpp"

namespace binform {

// Sparse multivariate polynomial over Rat.
//
// Representation is canonical: the variable list is sorted by name, no
// variable is unused, no stored coefficient is zero, every exponent vector
// has length |vars|. Two MPoly compare equal iff their canonical forms do.
// Values are immutable in spirit: all operations return fresh polynomials.
class MPoly {
public:
    using Exponents = std::vector<std::int32_t>;
    using TermMap = std::map<Exponents, Rat>;

    MPoly() = default;                       // zero polynomial
    MPoly(const Rat& c);                     // NOLINT: constant polynomial
    MPoly(int c) : MPoly(Rat(c)) {}          // NOLINT
    static MPoly variable(const std::string& name);
    static MPoly monomial(const Rat& c, const std::vector<std::pair<std::string, int>>& powers);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents(vars_.size(), 0)); }
    // Throws domain_error if not constant.
    Rat constant_value() const;

    std::size_t term_count() const { return terms_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool depends_on(const std::string& var) const;

    long total_degree() const;               // zero polynomial -> -1
    long degree_in(const std::string& var) const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly pow(long e) const;

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly derivative(const std::string& var) const;

    // Single-variable substitution; one simultaneous pass, so occurrences of
    // `var` inside `value` are not re-substituted.
    MPoly substitute(const std::string& var, const MPoly& value) const;
    // Simultaneous substitution of several variables.
    MPoly substitute(const std::map<std::string, MPoly>& values) const;

    // Total evaluation. Every variable must be assigned.
    Rat evaluate(const std::map<std::string, Rat>& assignment) const;

    // View as a polynomial in `var`: exponent -> coefficient (free of `var`).
    std::map<int, MPoly> coefficients_in(const std::string& var) const;
    MPoly coefficient_of(const std::string& var, int power) const;

    // Exact division; throws domain_error when the division is not exact.
    MPoly divide_exact(const MPoly& divisor) const;

    // Deterministic rendering: monomials in descending lexicographic order
    // of the exponent vector over the sorted variable list.
    std::string to_string() const;

    // Optional global cap on term counts, used while trying identities
    // symbolically. 0 disables the cap.
    class TermBudgetGuard {
    public:
        explicit TermBudgetGuard(std::size_t limit);
        ~TermBudgetGuard();
        TermBudgetGuard(const TermBudgetGuard&) = delete;
        TermBudgetGuard& operator=(const TermBudgetGuard&) = delete;

    private:
        std::size_t previous_;
    };

private:
    std::vector<std::string> vars_;  // sorted, all used
    TermMap terms_;

    void normalize();
    static void align(MPoly& a, MPoly& b);
    MPoly with_vars(const std::vector<std::string>& vars) const;
    void check_budget() const;

    friend struct MPolyTestAccess;
};

std::ostream& operator<<(std::ostream& os, const MPoly& p);

} // namespace binform

#endif
