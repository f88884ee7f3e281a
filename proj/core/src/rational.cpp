#include "binform/rational.hpp"

#include <ostream>

#include "binform/errors.hpp"

namespace binform {

Rat::Rat(long long n) : v_(mpz_class(std::to_string(n))) {}

Rat::Rat(long num, long den) : v_(num, den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::parse(const std::string& text) {
    auto bad = [&](std::size_t at) { return parse_error("invalid rational '" + text + "'", at); };
    if (text.empty()) throw bad(0);
    std::size_t slash = text.find('/');
    auto check_int = [&](const std::string& s, std::size_t base, bool allow_sign) {
        if (s.empty()) throw bad(base);
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) throw bad(base + i);
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') throw bad(base + i);
    };
    if (slash == std::string::npos) {
        check_int(text, 0, true);
        return Rat(mpq_class(mpz_class(text)));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    check_int(num, 0, true);
    check_int(den, slash + 1, false);
    mpz_class d(den);
    if (d == 0) throw domain_error("rational with zero denominator");
    mpq_class q(mpz_class(num), d);
    q.canonicalize();
    return Rat(q);
}

Rat Rat::inverse() const {
    if (is_zero()) throw domain_error("inverse of zero");
    return Rat(mpq_class(1) / v_);
}

Rat Rat::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpq_class r(1);
    mpq_class base = v_;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return Rat(r);
}

std::string Rat::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.to_string();
}

Rat factorial(long n) {
    if (n < 0) throw domain_error("factorial of negative number");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(r);
}

Rat binomial(long n, long k) {
    if (k < 0 || k > n) return Rat(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return Rat(r);
}

Rat falling_factorial(long n, long k) {
    if (k < 0) throw domain_error("falling factorial with negative length");
    mpz_class r(1);
    for (long i = 0; i < k; ++i) r *= (n - i);
    return Rat(r);
}

int parity_sign(long k) { return (k % 2 == 0) ? 1 : -1; }

} // namespace binform
