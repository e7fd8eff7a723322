#pragma once

// Twin searches on Hirzebruch and ruled surfaces at rational class parameter x.

#include "twins/exactnum/algebraic.hpp"
#include "twins/hirzebruch/admissible.hpp"

#include <optional>
#include <vector>

namespace twins {

// Roots of the EM condition inside (-1, 1), ascending, with repeated values merged.
std::vector<RealAlgebraic> em_roots(const Rational& s, const Rational& x);

struct CscsRoot {
    RealAlgebraic c;
    RealAlgebraic c_hat;   // the positive root of q
    int positive_roots = 0;  // root count of q on (0, inf)
};

// Unique c in (-1, 1) solving the cscS cubic, certified through q(c-hat).
CscsRoot cscs_root(const Rational& s, const Rational& x);

// Twin pair with an algebraic potential parameter.
struct AlgebraicTwin {
    RealAlgebraic a, b;
    bool bifurcation = false;
    Interval residual;  // twin-equation residual on certified enclosures of a and b
};

// Twin of an algebraic a at rational x; none when the denominator vanishes or b is outside (-1, 1).
std::optional<AlgebraicTwin> twin_of_algebraic(const Rational& s, const Rational& x, const RealAlgebraic& a);

// cscS root followed by its twin; none when the twin coincides with the root or leaves (-1, 1).
std::optional<AlgebraicTwin> cscs_twin(const Rational& s, const Rational& x);

struct GenusTwin {
    Rational a, b;  // a = x
    bool in_range = false;
    bool b_profile_positive = false;  // P_{x,b} > 0 on (-1, 1); meaningful when in range
    Rational residual;
};

// Twin of a = x: b = x(2 - s x)/(3x^2 - s x - 1). Throws when the denominator vanishes.
GenusTwin genus_twin(const Rational& s, const Rational& x);

struct JoinData {
    long w1 = 0, w2 = 0, l1 = 0, l2 = 1;
    long n = 0;
    Rational x;
    bool twisted = false;
};

// n = l1 (w1 - w2), x = (w1 - w2)/(w1 + w2); twisted iff n is odd.
JoinData join_params(long w1, long w2, long l1);

// A certified point of the twin conic on an open segment of the square.
struct ExistenceWitness {
    Rational a0, b0, a1, b1;  // segment endpoints
    Rational g0, g1;          // twin residual at the endpoints
    std::optional<RealAlgebraic> t;  // root parameter in (0, 1)
    bool off_diagonal = false;
};

// Sign-change witness on (-1,0)-(0,1) for s in {1, 2}, or on (-1,-1)-(1,0) for 0 < x <= s <= 2/3.
std::optional<ExistenceWitness> existence_witness(const Rational& s, const Rational& x);

// Numerator in x of the first EM factor evaluated at the twin of a = 0, for fixed s.
RPoly calabi_twin_em_numerator(const Rational& s);

// Factor of that numerator left after removing x, x - 1 and x + 1; primitive with integer coefficients.
RPoly page_class_polynomial(const Rational& s);

// Closed forms of the x values in (0, 1) where the twin conic degenerates.
std::vector<QuadraticSurd> conic_degenerate_x(const Rational& s);

}  // namespace twins
