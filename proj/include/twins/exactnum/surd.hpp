#pragma once

#include "twins/exactnum/rational.hpp"

#include <string>

namespace twins {

class Interval;

// a + b*sqrt(d) with rational a, b and d a square-free positive integer (d = 0 when b = 0).
// Binary operations require a common radicand; mixing incompatible radicands throws.
class QuadraticSurd {
public:
    QuadraticSurd() = default;
    QuadraticSurd(int v) : a_(v) {}
    QuadraticSurd(const Rational& a) : a_(a) {}
    QuadraticSurd(const Rational& a, const Rational& b, const Rational& d);

    static QuadraticSurd sqrt(const Rational& d);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& d() const { return d_; }
    bool is_rational() const { return b_.is_zero(); }

    int sign() const;
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    QuadraticSurd operator-() const { return QuadraticSurd(-a_, -b_, d_, raw_tag{}); }
    QuadraticSurd& operator+=(const QuadraticSurd& o);
    QuadraticSurd& operator-=(const QuadraticSurd& o) { return *this += -o; }
    QuadraticSurd& operator*=(const QuadraticSurd& o);
    QuadraticSurd& operator/=(const QuadraticSurd& o) { return *this *= o.inverse(); }
    friend QuadraticSurd operator+(QuadraticSurd a, const QuadraticSurd& b) { return a += b; }
    friend QuadraticSurd operator-(QuadraticSurd a, const QuadraticSurd& b) { return a -= b; }
    friend QuadraticSurd operator*(QuadraticSurd a, const QuadraticSurd& b) { return a *= b; }
    friend QuadraticSurd operator/(QuadraticSurd a, const QuadraticSurd& b) { return a /= b; }
    // Comparisons also accept different radicands: 1, sqrt(d), sqrt(d') are independent over Q.
    friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) { return compare(x, y) == 0; }
    friend bool operator<(const QuadraticSurd& x, const QuadraticSurd& y) { return compare(x, y) < 0; }
    friend bool operator>(const QuadraticSurd& x, const QuadraticSurd& y) { return y < x; }
    friend bool operator<=(const QuadraticSurd& x, const QuadraticSurd& y) { return !(y < x); }
    friend bool operator>=(const QuadraticSurd& x, const QuadraticSurd& y) { return !(x < y); }

    static int compare(const QuadraticSurd& x, const QuadraticSurd& y);
    bool compatible(const QuadraticSurd& o) const { return is_rational() || o.is_rational() || d_ == o.d_; }

    QuadraticSurd inverse() const;
    QuadraticSurd conjugate() const { return QuadraticSurd(a_, -b_, d_, raw_tag{}); }
    // Minimal polynomial coefficients (c0, c1, c2) of c2*t^2 + c1*t + c0; degree 1 when rational.
    void min_poly(Rational& c0, Rational& c1, Rational& c2) const;

    // Rational enclosure of width at most `width`.
    Interval enclose(const Rational& width) const;

    // "a+b*sqrt(d)" in lowest terms.
    std::string str() const;

private:
    struct raw_tag {};
    QuadraticSurd(const Rational& a, const Rational& b, const Rational& d, raw_tag)
        : a_(a), b_(b), d_(b.is_zero() ? Rational(0) : d) {}
    void unify(QuadraticSurd& o);

    Rational a_, b_, d_;
};

// Enclosure of sqrt(r) for r >= 0 with width at most `width`.
Interval sqrt_enclosure(const Rational& r, const Rational& width);

}  // namespace twins
