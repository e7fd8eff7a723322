#pragma once

#include "twins/exactnum/rational.hpp"

#include <stdexcept>
#include <string>

namespace twins {

// Thrown when a sign or zero test on an interval cannot be decided.
struct UndecidedSign : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Closed interval with rational endpoints; arithmetic returns certified enclosures.
class Interval {
public:
    Interval() = default;
    Interval(int v) : lo_(v), hi_(v) {}
    Interval(const Rational& v) : lo_(v), hi_(v) {}
    Interval(const Rational& lo, const Rational& hi);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational mid() const { return (lo_ + hi_) / 2; }
    bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
    bool is_point() const { return lo_ == hi_; }

    // -1, 0, +1; throws UndecidedSign when the interval straddles zero.
    int sign() const;
    bool is_zero() const;
    // True when every point lies strictly inside (-eps, eps).
    bool within(const Rational& eps) const { return -eps < lo_ && hi_ < eps; }

    Interval operator-() const { return Interval(-hi_, -lo_); }
    Interval& operator+=(const Interval& o) { lo_ += o.lo_; hi_ += o.hi_; return *this; }
    Interval& operator-=(const Interval& o) { return *this += -o; }
    Interval& operator*=(const Interval& o);
    Interval& operator/=(const Interval& o);
    friend Interval operator+(Interval a, const Interval& b) { return a += b; }
    friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
    friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
    friend Interval operator/(Interval a, const Interval& b) { return a /= b; }

    Interval inverse() const { return Interval(1) / *this; }
    Interval hull(const Interval& o) const;

    std::string str() const { return "[" + lo_.str() + ", " + hi_.str() + "]"; }

private:
    Rational lo_, hi_;
};

}  // namespace twins
