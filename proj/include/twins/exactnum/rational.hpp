#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace twins {

// Arbitrary-precision rational in canonical form (reduced, positive denominator).
class Rational {
public:
    Rational() = default;
    Rational(int v) : q_(v) {}
    Rational(long v) : q_(v) {}
    Rational(long long v) : q_(static_cast<long>(v)) {}
    Rational(const mpz_class& v) : q_(v) {}
    Rational(const mpq_class& v) : q_(v) { q_.canonicalize(); }
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);

    // Accepts "p", "p/q", "-p/q" and finite decimals such as "0.25" or "-1.5e-3".
    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    double to_double() const { return q_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational inverse() const;
    Rational pow(int e) const;

    // "p/q" or "p".
    std::string str() const;
    // Decimal rounded half away from zero to `digits` places after the point.
    std::string decimal(int digits) const;

    mpz_class floor() const;
    mpz_class ceil() const;

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational rational_from_double(double v);

// Rational square root if r is the square of a rational, otherwise false.
bool rational_sqrt(const Rational& r, Rational& root);

}  // namespace twins
