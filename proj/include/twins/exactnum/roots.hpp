#pragma once

#include "twins/exactnum/polynomial.hpp"

#include <optional>
#include <vector>

namespace twins {

using RPoly = Poly<Rational>;

// An endpoint of an isolation domain; nullopt stands for -inf (low end) or +inf (high end).
using Bound = std::optional<Rational>;

// Sturm chain of a polynomial over Q.
class SturmChain {
public:
    explicit SturmChain(const RPoly& p);
    // Sign variations at a finite point.
    int variations(const Rational& at) const;
    // Sign variations at -inf (dir < 0) or +inf (dir > 0).
    int variations_at_infinity(int dir) const;
    // Distinct roots in the open interval (lo, hi); endpoints may be infinite.
    int count_open(const Bound& lo, const Bound& hi) const;
    const RPoly& base() const { return seq_.front(); }

private:
    std::vector<RPoly> seq_;
};

// Isolating interval for one real root of `poly`: either the degenerate [r, r]
// for a rational root r, or an open interval (lo, hi) holding exactly one root.
class RootInterval {
public:
    RootInterval(RPoly poly, Rational lo, Rational hi);

    const RPoly& poly() const { return poly_; }
    const RPoly& squarefree() const { return sqf_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    bool is_exact() const { return lo_ == hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational mid() const { return (lo_ + hi_) / 2; }
    // True when the root has multiplicity > 1 in the defining polynomial.
    bool multiple() const;

    // Interval narrowed to width <= tol that still holds the root.
    RootInterval refine(const Rational& tol) const;
    // Exact sign of q at the root.
    int sign_of(const RPoly& q) const;
    // q(root) == 0, decided exactly.
    bool is_root_of(const RPoly& q) const { return sign_of(q) == 0; }
    // Comparison of the root against a rational: -1, 0, +1.
    int compare(const Rational& v) const;

    // Exact value when the root is rational or quadratic over Q.
    std::optional<QuadraticSurd> exact_form() const;

private:
    RPoly poly_, sqf_;
    Rational lo_, hi_;
};

// All real roots of p in the open domain (lo, hi), sorted ascending. Throws on the zero polynomial.
std::vector<RootInterval> isolate_real_roots(const RPoly& p, const Bound& lo = std::nullopt,
                                             const Bound& hi = std::nullopt);

// Bound B with every real root strictly inside (-B, B).
Rational cauchy_bound(const RPoly& p);

// Scales p to a primitive polynomial with integer coefficients and positive leading coefficient.
RPoly primitive_integer(const RPoly& p);

// Rational roots of p (exact), ascending.
std::vector<Rational> rational_roots(const RPoly& p);

}  // namespace twins
