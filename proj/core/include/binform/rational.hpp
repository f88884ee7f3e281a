#ifndef BINFORM_RATIONAL_HPP
#define BINFORM_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace binform {

// Arbitrary-precision rational. Always canonical: gcd(|num|, den) = 1,
// den > 0, zero is 0/1 (gmp maintains this after canonicalize()).
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}                       // NOLINT: implicit by design
    Rat(long n) : v_(static_cast<signed long>(n)) {}
    Rat(long long n);
    Rat(long num, long den);
    explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }
    explicit Rat(const mpz_class& v) : v_(v) {}

    // Accepts "p", "-p", "p/q"; throws binform::parse_error on junk.
    static Rat parse(const std::string& text);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat abs() const { return Rat(mpq_class(::abs(v_))); }
    Rat inverse() const;
    Rat pow(long e) const;  // e may be negative for nonzero values

    // "p" when the denominator is 1, otherwise "p/q".
    std::string to_string() const;

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

// Small exact combinatorics used all over the covariant formulas.
Rat factorial(long n);
Rat binomial(long n, long k);
Rat falling_factorial(long n, long k);  // (n)_k = n(n-1)...(n-k+1)
int parity_sign(long k);                // (-1)^k

} // namespace binform

#endif
