#include "twins/hirzebruch/twins.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace twins {

SurfaceClass SurfaceClass::from_topology(int genus, int twist) {
    if (genus < 0) throw std::domain_error("genus must be non-negative");
    if (twist < 1) throw std::domain_error("twist must be positive");
    return {genus, twist, Rational(2 * (1 - genus), twist)};
}

SurfaceClass SurfaceClass::from_s(const Rational& s) {
    if (s > Rational(2)) throw std::domain_error("s must not exceed 2");
    return {0, 0, s};
}

std::vector<RealAlgebraic> em_roots(const Rational& s, const Rational& x) {
    auto [f1, f2] = em_factors(s, x);
    std::vector<QuadraticSurd> all;
    for (const RPoly& f : {f1, f2}) {
        if (f.degree() < 1) continue;
        for (const auto& r : real_quadratic_roots(f))
            if (QuadraticSurd(-1) < r && r < QuadraticSurd(1)) all.push_back(r);
    }
    std::sort(all.begin(), all.end(), [](const QuadraticSurd& a, const QuadraticSurd& b) { return a < b; });
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return {all.begin(), all.end()};
}

CscsRoot cscs_root(const Rational& s, const Rational& x) {
    if (s > Rational(2)) throw std::domain_error("s must not exceed 2");
    if (x.sign() <= 0 || x >= Rational(1)) throw std::domain_error("class parameter x must lie in (0, 1)");
    auto roots = isolate_real_roots(cscs_qhat(s, x), Rational(0), std::nullopt);
    if (roots.size() != 1)
        throw std::logic_error("q has " + std::to_string(roots.size()) + " positive roots; expected exactly one");
    RealAlgebraic c_hat(roots[0]);
    // c = (1 - c_hat)/(1 + c_hat)
    RealAlgebraic c = c_hat.mobius(Rational(-1), Rational(1), Rational(1), Rational(1));
    if (c.sign_of(cscs_cubic(s, x)) != 0) throw std::logic_error("cscS root does not satisfy the cubic");
    return {c, c_hat, static_cast<int>(roots.size())};
}

std::optional<AlgebraicTwin> twin_of_algebraic(const Rational& s, const Rational& x, const RealAlgebraic& a) {
    TwinCoeffs<Rational> t = twin_coeffs(s, x);
    if (a.sign_of(RPoly{t.D, t.B}) == 0) return std::nullopt;
    std::optional<RealAlgebraic> b;
    if ((t.D * t.D - t.B * t.F).is_zero()) {
        // Degenerate conic: b is the constant -D/B off the pole.
        b = RealAlgebraic(-t.D / t.B);
    } else {
        b = a.mobius(-t.D, -t.F, t.B, t.D);
    }
    if (b->compare(Rational(1)) >= 0 || b->compare(Rational(-1)) <= 0) return std::nullopt;
    // Shrink the enclosures until the residual interval itself fits the certification width.
    Rational w = certification_width();
    Interval res = twin_residual<Interval>(s, Interval(x), a.enclose(w), b->enclose(w));
    for (int i = 0; i < 64 && !res.within(certification_width()); ++i) {
        w /= 16;
        res = twin_residual<Interval>(s, Interval(x), a.enclose(w), b->enclose(w));
    }
    return AlgebraicTwin{a, *b, a.compare(*b) == 0, res};
}

std::optional<AlgebraicTwin> cscs_twin(const Rational& s, const Rational& x) {
    CscsRoot r = cscs_root(s, x);
    auto t = twin_of_algebraic(s, x, r.c);
    if (!t || t->bifurcation) return std::nullopt;
    return t;
}

GenusTwin genus_twin(const Rational& s, const Rational& x) {
    if (x.sign() <= 0 || x >= Rational(1)) throw std::domain_error("class parameter x must lie in (0, 1)");
    Rational den = 3 * x * x - s * x - 1;
    if (den.is_zero()) throw std::domain_error("genus twin denominator 3x^2 - s x - 1 vanishes");
    GenusTwin out;
    out.a = x;
    out.b = x * (2 - s * x) / den;
    out.residual = twin_residual(s, x, out.a, out.b);
    out.in_range = Rational(-1) < out.b && out.b < Rational(1);
    if (out.in_range) {
        RPoly p = profile_quadratic(s, x, out.b);
        bool by_minimum = quadratic_positivity(p).positive;
        bool by_isolation = isolate_real_roots(p, Rational(-1), Rational(1)).empty() && p(Rational(0)).sign() > 0;
        if (by_minimum != by_isolation) throw std::logic_error("positivity routes disagree");
        out.b_profile_positive = by_minimum;
    }
    return out;
}

JoinData join_params(long w1, long w2, long l1) {
    if (w2 < 1 || w1 <= w2) throw std::domain_error("join weights need w1 > w2 >= 1");
    if (l1 < 1) throw std::domain_error("l1 must be positive");
    if (std::gcd(w1, w2) != 1) throw std::domain_error("join weights must be coprime");
    JoinData j;
    j.w1 = w1;
    j.w2 = w2;
    j.l1 = l1;
    j.n = l1 * (w1 - w2);
    j.x = Rational(w1 - w2, w1 + w2);
    j.twisted = j.n % 2 == 1;
    return j;
}

std::optional<ExistenceWitness> existence_witness(const Rational& s, const Rational& x) {
    ExistenceWitness w;
    if (s == Rational(1) || s == Rational(2)) {
        w.a0 = -1, w.b0 = 0, w.a1 = 0, w.b1 = 1;
    } else if (x.sign() > 0 && x <= s && s <= Rational(2, 3)) {
        w.a0 = -1, w.b0 = -1, w.a1 = 1, w.b1 = 0;
    } else {
        return std::nullopt;
    }
    TwinCoeffs<Rational> c = twin_coeffs(s, x);
    RPoly a{w.a0, w.a1 - w.a0}, b{w.b0, w.b1 - w.b0};
    RPoly g = RPoly(c.F) + (a + b).scaled(c.D) + (a * b).scaled(c.B);
    w.g0 = g(Rational(0));
    w.g1 = g(Rational(1));
    if (w.g0.sign() * w.g1.sign() >= 0) return w;
    auto roots = isolate_real_roots(g, Rational(0), Rational(1));
    if (roots.empty()) throw std::logic_error("sign change without a root");
    w.t = RealAlgebraic(roots.front());
    w.off_diagonal = w.t->sign_of(a - b) != 0;
    return w;
}

RPoly calabi_twin_em_numerator(const Rational& s) {
    RPoly x = RPoly::var();
    RPoly f = x * RPoly{Rational(1), -2 * s, Rational(1)};
    RPoly d{Rational(1), s, Rational(-3), s};
    // x b^2 - 2b + x with b = -f/d, times d^2.
    return x * f * f + (f * d).scaled(Rational(2)) + x * d * d;
}

RPoly page_class_polynomial(const Rational& s) {
    RPoly p = calabi_twin_em_numerator(s);
    for (const RPoly& lin : {RPoly::var(), RPoly{Rational(-1), Rational(1)}, RPoly{Rational(1), Rational(1)}})
        while (p.degree() > 0 && p.divisible_by(lin)) p = p.exact_div(lin);
    return primitive_integer(p);
}

std::vector<QuadraticSurd> conic_degenerate_x(const Rational& s) {
    std::vector<QuadraticSurd> out;
    // B = 0 and D^2 - B F = (1 - x^2)^2 (1 + 2 s x + (s^2 - 3) x^2) = 0.
    for (const RPoly& f : {RPoly{Rational(-1), -2 * s, Rational(3)}, RPoly{Rational(1), 2 * s, s * s - 3}})
        for (const auto& r : real_quadratic_roots(f))
            if (QuadraticSurd(0) < r && r < QuadraticSurd(1)) out.push_back(r);
    std::sort(out.begin(), out.end(), [](const QuadraticSurd& a, const QuadraticSurd& b) { return a < b; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace twins
