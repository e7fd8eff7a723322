#pragma once

// Admissible (c z + 1, 4)-extremal profiles on Hirzebruch and ruled surfaces.
// Templates run over Rational and QuadraticSurd parameters.

#include "twins/exactnum/integrate.hpp"
#include "twins/exactnum/matrix.hpp"
#include "twins/exactnum/roots.hpp"

#include <map>
#include <optional>
#include <utility>

namespace twins {

// Ruled surface over a genus-g curve with twist n; s = 2(1 - g)/n is half the base scalar curvature.
struct SurfaceClass {
    int genus = 0;
    int twist = 0;  // 0 when built from s alone
    Rational s;

    static SurfaceClass from_topology(int genus, int twist);
    static SurfaceClass from_s(const Rational& s);
};

template <class K>
struct MomentIntegrals {
    std::map<std::pair<int, int>, K> alpha;  // (r, k) -> alpha_{r,-k}
    std::map<std::pair<int, int>, K> beta;   // (r, k) -> beta_{r,-k}
    const K& a(int r, int k) const { return alpha.at({r, k}); }
    const K& b(int r, int k) const { return beta.at({r, k}); }
};

template <class K>
void require_admissible(const K& x, const K& c) {
    if (sign_of(x) <= 0 || sign_of(x - K(1)) >= 0) throw std::domain_error("class parameter x must lie in (0, 1)");
    if (sign_of(c - K(1)) >= 0 || sign_of(c + K(1)) <= 0) throw std::domain_error("potential parameter c must lie in (-1, 1)");
}

// alpha_{r,-k} = int_{-1}^{1} t^r (1 + x t) / (c t + 1)^k dt.
template <class K>
K moment_alpha(const K& x, const K& c, int r, int k) {
    return integrate_power(Poly<K>::monomial(K(1), r) * Poly<K>{K(1), x}, c, k);
}

// beta_{r,-k} = x s int t^r/(c t + 1)^k dt + (-1)^r (1 - c)^{-k} (1 - x) + (1 + c)^{-k} (1 + x).
template <class K>
K moment_beta(const Rational& s, const K& x, const K& c, int r, int k) {
    K i = integrate_power(Poly<K>::monomial(K(1), r), c, k);
    K edge = field_pow(K(1) - c, -k) * (K(1) - x);
    if (r % 2) edge = -edge;
    return x * K(s) * i + edge + field_pow(K(1) + c, -k) * (K(1) + x);
}

template <class K>
MomentIntegrals<K> moment_integrals(const Rational& s, const K& x, const K& c) {
    require_admissible(x, c);
    MomentIntegrals<K> m;
    for (auto [r, k] : {std::pair{0, 5}, {1, 5}, {2, 5}, {0, 4}, {1, 4}}) m.alpha[{r, k}] = moment_alpha(x, c, r, k);
    for (auto [r, k] : {std::pair{0, 3}, {1, 3}}) m.beta[{r, k}] = moment_beta(s, x, c, r, k);
    return m;
}

// (A1, A2) solving the 2x2 moment system.
template <class K>
std::pair<K, K> extremal_affine_coeffs(const Rational& s, const K& x, const K& c) {
    MomentIntegrals<K> m = moment_integrals(s, x, c);
    Matrix<K> sys({{m.a(1, 5), m.a(0, 5)}, {m.a(2, 5), m.a(1, 5)}});
    std::vector<K> sol = sys.solve({K(2) * m.b(0, 3), K(2) * m.b(1, 3)});
    return {sol[0], sol[1]};
}

template <class K>
K profile_denominator(const K& x, const K& c) {
    return K(3) * c * c * x * x - c * c - K(4) * c * x - x * x + K(3);
}

// Closed-form quadratic P_{x,c}(z).
template <class K>
Poly<K> profile_quadratic(const Rational& s, const K& x, const K& c) {
    K den = K(2) * profile_denominator(x, c);
    if (is_zero(den)) throw std::domain_error("profile denominator vanishes");
    K S(s);
    K p0 = c * c * S * x + K(3) * c * c * x * x - c * c - K(2) * c * S * x * x + K(3) * c * x * x * x - K(7) * c * x +
           S * x * x * x - K(4) * x * x + K(6);
    K p2 = (c - x) * (-c * S * x + K(3) * c * x * x - c + S * x * x - K(2) * x);
    return Poly<K>{p0 / den, x, p2 / den};
}

template <class K>
struct Positivity {
    bool positive = false;
    K argmin;  // minimiser of P on [-1, 1]
    K min;     // P(argmin)
};

// Exact minimum of a quadratic on [-1, 1]; positive means P > 0 on (-1, 1).
template <class K>
Positivity<K> quadratic_positivity(const Poly<K>& p) {
    if (p.degree() > 2) throw std::invalid_argument("quadratic expected");
    Positivity<K> out;
    K lo = p(K(-1)), hi = p(K(1));
    out.argmin = sign_of(lo - hi) <= 0 ? K(-1) : K(1);
    out.min = sign_of(lo - hi) <= 0 ? lo : hi;
    K a = p.coeff(2), b = p.coeff(1);
    if (sign_of(a) > 0) {
        K v = -b / (K(2) * a);
        if (sign_of(v + K(1)) > 0 && sign_of(v - K(1)) < 0) {
            out.argmin = v;
            out.min = p(v);
            out.positive = sign_of(out.min) > 0;
            return out;
        }
    }
    // Without an interior vertex the open-interval infimum is the smaller endpoint value.
    out.positive = sign_of(out.min) >= 0 && !p.is_zero();
    return out;
}

template <class K>
struct ExtremalProfile {
    K A1, A2;
    Poly<K> P, F;
    bool boundary_ok = false;
    Positivity<K> positivity;
};

// F(+-1) = 0 and F'(+-1) = -+2(1 +- x).
template <class K>
bool profile_boundary_ok(const Poly<K>& f, const K& x) {
    Poly<K> d = f.derivative();
    return is_zero(f(K(1))) && is_zero(f(K(-1))) && is_zero(d(K(1)) + K(2) * (K(1) + x)) &&
           is_zero(d(K(-1)) - K(2) * (K(1) - x));
}

template <class K>
ExtremalProfile<K> profile(const Rational& s, const K& x, const K& c) {
    require_admissible(x, c);
    ExtremalProfile<K> out;
    std::tie(out.A1, out.A2) = extremal_affine_coeffs(s, x, c);
    out.P = profile_quadratic(s, x, c);
    out.F = Poly<K>{K(1), K(0), K(-1)} * out.P;
    out.boundary_ok = profile_boundary_ok(out.F, x);
    out.positivity = quadratic_positivity(out.P);
    return out;
}

// F built from the integral formula
//   (cz+1)^3 [ 2(1-x)(z+1)/(1-c)^3 + int_{-1}^{z} Q(t)(z-t) dt ],
//   Q(t) = 2xs/(ct+1)^3 - (A1 t + A2)(1 + x t)/(ct+1)^5.
template <class K>
Poly<K> profile_from_integral(const Rational& s, const K& x, const K& c) {
    auto [a1, a2] = extremal_affine_coeffs(s, x, c);
    using RF = RationalFunction<K>;
    Poly<K> t = Poly<K>::var();
    Poly<K> q3 = Poly<K>(K(2) * x * K(s));
    Poly<K> q5 = -(Poly<K>{a2, a1} * Poly<K>{K(1), x});
    // int_{-1}^{z} Q(t)(z - t) dt = z int Q - int t Q.
    RF iq = integrate_power_upto(q3, c, 3) + integrate_power_upto(q5, c, 5);
    RF itq = integrate_power_upto(q3 * t, c, 3) + integrate_power_upto(q5 * t, c, 5);
    RF inner = RF(t) * iq - itq + RF(Poly<K>{K(1), K(1)}.scaled(K(2) * (K(1) - x) / field_pow(K(1) - c, 3)));
    RF f = RF(poly_pow(Poly<K>{K(1), c}, 3)) * inner;
    if (!f.is_polynomial()) throw std::logic_error("integral construction did not close to a polynomial");
    return f.to_poly();
}

// (m1, m2) with the 2 pi factor removed: (2, (1 - x) n / x).
template <class K>
std::pair<K, K> kahler_class(int twist, const K& x) {
    if (sign_of(x) <= 0 || sign_of(x - K(1)) >= 0) throw std::domain_error("class parameter x must lie in (0, 1)");
    return {K(2), (K(1) - x) * K(twist) / x};
}

// Coefficients of the twin conic F0 + D(a + b) + B a b = 0.
template <class K>
struct TwinCoeffs {
    K B, D, F;
};

template <class K>
TwinCoeffs<K> twin_coeffs(const Rational& s, const K& x) {
    K S(s);
    return {x * (K(3) * x * x - K(2) * S * x - K(1)), K(1) + S * x - K(3) * x * x + S * x * x * x,
            x * (K(1) - K(2) * S * x + x * x)};
}

// Left-hand side g(s, x, a, b) of the twin equation.
template <class K>
K twin_residual(const Rational& s, const K& x, const K& a, const K& b) {
    TwinCoeffs<K> t = twin_coeffs(s, x);
    return t.F + t.D * (a + b) + t.B * a * b;
}

template <class K>
struct TwinPair {
    K a, b;
    bool bifurcation = false;
};

// b = -(F0 + a D)/(D + a B); none when the denominator vanishes or b is outside (-1, 1).
template <class K>
std::optional<TwinPair<K>> twin_of(const Rational& s, const K& x, const K& a) {
    TwinCoeffs<K> t = twin_coeffs(s, x);
    K den = t.D + a * t.B;
    if (is_zero(den)) return std::nullopt;
    K b = -(t.F + a * t.D) / den;
    if (sign_of(b - K(1)) >= 0 || sign_of(b + K(1)) <= 0) return std::nullopt;
    if (!is_zero(twin_residual(s, x, a, b))) throw std::logic_error("twin equation residual is nonzero");
    return TwinPair<K>{a, b, is_zero(b - a)};
}

enum class ConicKind { NondegenerateHyperbola, Degenerate };

// a_coef * a + b_coef * b + c0 = 0.
template <class K>
struct ConicLine {
    K a_coef, b_coef, c0;
};

template <class K>
struct TwinConic {
    TwinCoeffs<K> coeffs;
    K det_formula;  // B (D^2 - B F) / 4
    K det_direct;   // 3x3 determinant
    ConicKind kind = ConicKind::NondegenerateHyperbola;
    std::vector<ConicLine<K>> lines;   // components when degenerate
    bool square_solutions = true;      // some point with -1 < a, b < 1 lies on the conic
};

template <class K>
bool line_meets_open_square(const ConicLine<K>& l) {
    // Max and min of a_coef*a + b_coef*b over the open square are +-(|a_coef| + |b_coef|).
    auto absk = [](const K& v) { return sign_of(v) < 0 ? -v : v; };
    K reach = absk(l.a_coef) + absk(l.b_coef);
    if (is_zero(reach)) return is_zero(l.c0);
    return sign_of(absk(l.c0) - reach) < 0;
}

template <class K>
TwinConic<K> twin_conic(const Rational& s, const K& x) {
    TwinConic<K> out;
    out.coeffs = twin_coeffs(s, x);
    const K &B = out.coeffs.B, &D = out.coeffs.D, &F = out.coeffs.F;
    out.det_formula = B * (D * D - B * F) / K(4);
    K h(2);
    Matrix<K> m({{K(0), B / h, D / h}, {B / h, K(0), D / h}, {D / h, D / h, F}});
    out.det_direct = m.determinant();
    if (!is_zero(out.det_direct)) return out;
    out.kind = ConicKind::Degenerate;
    if (is_zero(B)) {
        out.lines.push_back({D, D, F});
    } else {
        // D^2 = B F: B (F + D(a+b) + B a b) = (B a + D)(B b + D).
        out.lines.push_back({B, K(0), D});
        out.lines.push_back({K(0), B, D});
    }
    out.square_solutions = false;
    for (const auto& l : out.lines) out.square_solutions = out.square_solutions || line_meets_open_square(l);
    return out;
}

// Second factor pair of the EM condition, as quadratics in c:
// (x c^2 - 2c + x) and (s x c^2 - 2x c - s x + 2).
template <class K>
std::pair<Poly<K>, Poly<K>> em_factors(const Rational& s, const K& x) {
    K S(s);
    return {Poly<K>{x, K(-2), x}, Poly<K>{K(2) - S * x, K(-2) * x, S * x}};
}

// The cscS cubic (3x^2 + s x - 1)c^3 - x(6 + s x)c^2 + (5 - s x + x^2)c + (s x - 2)x in c.
template <class K>
Poly<K> cscs_cubic(const Rational& s, const K& x) {
    K S(s);
    return Poly<K>{(S * x - K(2)) * x, K(5) - S * x + x * x, -x * (K(6) + S * x), K(3) * x * x + S * x - K(1)};
}

// q(c-hat) obtained from the cubic by c = (1 - c-hat)/(1 + c-hat).
template <class K>
Poly<K> cscs_qhat(const Rational& s, const K& x) {
    K S(s), p = K(1) + x, m = K(1) - x;
    return Poly<K>{m * m, m * (K(2) + K(2) * x - S * x), -p * (K(2) * m - S * x), -p * p};
}

}  // namespace twins
