#include "binform/mpoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "binform/errors.hpp"

namespace binform {

namespace {
thread_local std::size_t g_term_budget = 0;  // 0 = unlimited
}

MPoly::TermBudgetGuard::TermBudgetGuard(std::size_t limit) : previous_(g_term_budget) {
    g_term_budget = limit;
}
MPoly::TermBudgetGuard::~TermBudgetGuard() { g_term_budget = previous_; }

void MPoly::check_budget() const {
    if (g_term_budget && terms_.size() > g_term_budget) throw term_budget_exceeded();
}

MPoly::MPoly(const Rat& c) {
    if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

MPoly MPoly::variable(const std::string& name) {
    if (name.empty()) throw domain_error("empty variable name");
    MPoly p;
    p.vars_ = {name};
    p.terms_.emplace(Exponents{1}, Rat(1));
    return p;
}

MPoly MPoly::monomial(const Rat& c, const std::vector<std::pair<std::string, int>>& powers) {
    MPoly p(c);
    for (const auto& [name, e] : powers) {
        if (e < 0) throw domain_error("negative exponent in monomial");
        p *= variable(name).pow(e);
    }
    return p;
}

Rat MPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw domain_error("polynomial is not constant: " + to_string());
    return terms_.begin()->second;
}

bool MPoly::depends_on(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    return it != vars_.end() && *it == var;
}

long MPoly::total_degree() const {
    long best = -1;
    for (const auto& [e, c] : terms_) {
        long d = 0;
        for (auto x : e) d += x;
        best = std::max(best, d);
    }
    return best;
}

long MPoly::degree_in(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return is_zero() ? -1 : 0;
    std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    long best = -1;
    for (const auto& [e, c] : terms_) best = std::max(best, static_cast<long>(e[idx]));
    return best;
}

void MPoly::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    // Drop variables that no term uses.
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) {
        check_budget();
        return;
    }
    std::vector<std::string> kept;
    std::vector<std::size_t> keep_idx;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) {
            kept.push_back(vars_[i]);
            keep_idx.push_back(i);
        }
    TermMap fresh;
    for (const auto& [e, c] : terms_) {
        Exponents ne(keep_idx.size());
        for (std::size_t i = 0; i < keep_idx.size(); ++i) ne[i] = e[keep_idx[i]];
        fresh.emplace(std::move(ne), c);
    }
    vars_ = std::move(kept);
    terms_ = std::move(fresh);
    check_budget();
}

MPoly MPoly::with_vars(const std::vector<std::string>& vars) const {
    // `vars` must be a sorted superset of vars_.
    std::vector<int> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::lower_bound(vars.begin(), vars.end(), vars_[i]);
        pos[i] = static_cast<int>(it - vars.begin());
    }
    MPoly out;
    out.vars_ = vars;
    for (const auto& [e, c] : terms_) {
        Exponents ne(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

void MPoly::align(MPoly& a, MPoly& b) {
    if (a.vars_ == b.vars_) return;
    std::vector<std::string> merged;
    std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                   std::back_inserter(merged));
    if (merged != a.vars_) a = a.with_vars(merged);
    if (merged != b.vars_) b = b.with_vars(merged);
}

MPoly MPoly::operator-() const {
    MPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    MPoly rhs = o;
    align(*this, rhs);
    for (auto& [e, c] : rhs.terms_) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) it->second += c;
    }
    normalize();
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return MPoly();
    MPoly lhs = a, rhs = b;
    MPoly::align(lhs, rhs);
    MPoly out;
    out.vars_ = lhs.vars_;
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            MPoly::Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto [it, inserted] = out.terms_.emplace(std::move(e), ca * cb);
            if (!inserted) it->second += ca * cb;
        }
        out.check_budget();
    }
    out.normalize();
    return out;
}

MPoly MPoly::pow(long e) const {
    if (e < 0) throw domain_error("negative polynomial power");
    MPoly result(Rat(1));
    MPoly base = *this;
    while (e) {
        if (e & 1) result *= base;
        if (e >>= 1) base *= base;
    }
    return result;
}

MPoly MPoly::derivative(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return MPoly();
    std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    MPoly out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[idx] == 0) continue;
        Exponents ne = e;
        ne[idx] -= 1;
        out.terms_.emplace(std::move(ne), c * Rat(e[idx]));
    }
    out.normalize();
    return out;
}

MPoly MPoly::substitute(const std::string& var, const MPoly& value) const {
    return substitute(std::map<std::string, MPoly>{{var, value}});
}

MPoly MPoly::substitute(const std::map<std::string, MPoly>& values) const {
    std::vector<int> target(vars_.size(), -1);
    std::vector<const MPoly*> repl;
    bool any = false;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = values.find(vars_[i]);
        if (it != values.end()) {
            target[i] = static_cast<int>(repl.size());
            repl.push_back(&it->second);
            any = true;
        }
    }
    if (!any) return *this;

    // Cache powers of each replacement as they are needed.
    std::vector<std::vector<MPoly>> powers(repl.size(), std::vector<MPoly>{MPoly(Rat(1))});
    auto power_of = [&](std::size_t which, int e) -> const MPoly& {
        auto& cache = powers[which];
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * *repl[which]);
        return cache[e];
    };

    MPoly out;
    for (const auto& [e, c] : terms_) {
        MPoly term(c);
        // Untouched part of the monomial first.
        for (std::size_t i = 0; i < e.size(); ++i)
            if (target[i] < 0 && e[i] > 0) term *= variable(vars_[i]).pow(e[i]);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (target[i] >= 0 && e[i] > 0) term *= power_of(static_cast<std::size_t>(target[i]), e[i]);
        out += term;
    }
    return out;
}

Rat MPoly::evaluate(const std::map<std::string, Rat>& assignment) const {
    std::vector<Rat> vals;
    vals.reserve(vars_.size());
    for (const auto& v : vars_) {
        auto it = assignment.find(v);
        if (it == assignment.end())
            throw domain_error("evaluate: no value assigned to variable '" + v + "'");
        vals.push_back(it->second);
    }
    Rat total(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) t *= vals[i].pow(e[i]);
        total += t;
    }
    return total;
}

std::map<int, MPoly> MPoly::coefficients_in(const std::string& var) const {
    std::map<int, MPoly> out;
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) {
        if (!is_zero()) out.emplace(0, *this);
        return out;
    }
    std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    for (const auto& [e, c] : terms_) {
        int p = e[idx];
        Exponents ne = e;
        ne[idx] = 0;
        MPoly piece;
        piece.vars_ = vars_;
        piece.terms_.emplace(std::move(ne), c);
        piece.normalize();
        auto [slot, inserted] = out.emplace(p, piece);
        if (!inserted) slot->second += piece;
    }
    return out;
}

MPoly MPoly::coefficient_of(const std::string& var, int power) const {
    auto m = coefficients_in(var);
    auto it = m.find(power);
    return it == m.end() ? MPoly() : it->second;
}

MPoly MPoly::divide_exact(const MPoly& divisor) const {
    if (divisor.is_zero()) throw domain_error("exact division by zero polynomial");
    if (divisor.is_constant()) {
        Rat c = divisor.constant_value();
        MPoly out = *this;
        for (auto& [e, coef] : out.terms_) coef /= c;
        return out;
    }
    // Greedy leading-term cancellation under the lex monomial order. For an
    // exact division the leading monomial of the remainder is always
    // divisible by the divisor's leading monomial, so this terminates with
    // remainder zero; anything else is reported as non-exact.
    MPoly quot, rem = *this;
    while (!rem.is_zero()) {
        MPoly r = rem, d = divisor;
        align(r, d);
        const auto& [re, rc] = *std::prev(r.terms_.end());
        const auto& [de, dc] = *std::prev(d.terms_.end());
        Exponents q(re.size());
        for (std::size_t i = 0; i < q.size(); ++i) {
            q[i] = re[i] - de[i];
            if (q[i] < 0) throw domain_error("polynomial division is not exact");
        }
        MPoly qmon;
        qmon.vars_ = r.vars_;
        qmon.terms_.emplace(std::move(q), rc / dc);
        qmon.normalize();
        quot += qmon;
        rem -= qmon * divisor;
    }
    return quot;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool any_var = std::any_of(e.begin(), e.end(), [](int x) { return x > 0; });
        if (!any_var || a != Rat(1)) {
            os << a.to_string();
            if (any_var) os << "*";
        }
        bool started = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (started) os << "*";
            started = true;
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.to_string(); }

} // namespace binform
