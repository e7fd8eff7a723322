#pragma once

#include "twins/exactnum/roots.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twins {

// Width used when algebraic values are certified or rendered.
Rational certification_width();

// A real algebraic number: an isolating interval of a rational polynomial, plus
// its closed form when the number is rational or quadratic.
class RealAlgebraic {
public:
    RealAlgebraic(const Rational& v);
    RealAlgebraic(const QuadraticSurd& v);
    explicit RealAlgebraic(const RootInterval& r);

    const RootInterval& root() const { return root_; }
    const std::optional<QuadraticSurd>& closed_form() const { return exact_; }
    bool is_rational() const { return exact_ && exact_->is_rational(); }
    // Rational value; throws when irrational.
    Rational rational() const;

    // Certified enclosure of width <= `width`.
    Interval enclose(const Rational& width) const;
    int sign() const { return root_.sign_of(RPoly::var()); }
    // Sign of q at this number, decided exactly.
    int sign_of(const RPoly& q) const { return root_.sign_of(q); }
    int compare(const Rational& v) const { return root_.compare(v); }
    // -1, 0, +1, decided exactly.
    int compare(const RealAlgebraic& o) const;
    friend bool operator==(const RealAlgebraic& a, const RealAlgebraic& b) { return a.compare(b) == 0; }

    // (p*v + q) / (r*v + t); throws when the denominator vanishes at v.
    RealAlgebraic mobius(const Rational& p, const Rational& q, const Rational& r, const Rational& t) const;

    // "exact:p/q" or "interval:mid±hw" with `digits` fractional digits.
    std::string tagged(int digits) const;

private:
    RootInterval root_;
    std::optional<QuadraticSurd> exact_;
};

// Real roots of a polynomial of degree 1 or 2, ascending, without repetition.
std::vector<QuadraticSurd> real_quadratic_roots(const RPoly& p);

// Tagged decimal for an enclosure: "interval:mid±hw", hw rounded up to one significant digit.
std::string tagged_interval(const Interval& iv, int digits);
// "exact:p/q".
std::string tagged_exact(const Rational& v);

}  // namespace twins
