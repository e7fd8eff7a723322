#include "doctest.h"
#include "oracle.hpp"

#include "twins/exactnum/mpoly.hpp"
#include "twins/hirzebruch/twins.hpp"

#include <cmath>

using namespace twins;
using R = Rational;
using S = QuadraticSurd;

namespace {

// a_1 = (1 - sqrt(1 - x^2))/x.
S em_a1(const R& x) { return (S(1) - S::sqrt(1 - x * x)) / S(x); }

const R kSValues[] = {R(2), R(1), R(2, 3), R(0), R(-2)};

// (A1, A2) by quadrature and Cramer's rule.
std::pair<double, double> affine_oracle(double s, double x, double c) {
    double a05 = oracle::alpha(0, 5, x, c), a15 = oracle::alpha(1, 5, x, c), a25 = oracle::alpha(2, 5, x, c);
    double r0 = 2 * oracle::beta(0, 3, s, x, c), r1 = 2 * oracle::beta(1, 3, s, x, c);
    double det = a15 * a15 - a05 * a25;
    return {(r0 * a15 - a05 * r1) / det, (a15 * r1 - a25 * r0) / det};
}

}  // namespace

TEST_CASE("surface class from topology") {
    auto c = SurfaceClass::from_topology(0, 1);
    CHECK(c.s == R(2));
    CHECK(SurfaceClass::from_topology(0, 3).s == R(2, 3));
    CHECK(SurfaceClass::from_topology(21, 2).s == R(-20));
    CHECK(SurfaceClass::from_topology(1, 5).s == R(0));
    for (int g = 0; g < 6; ++g)
        for (int n = 1; n < 6; ++n) CHECK(SurfaceClass::from_topology(g, n).s <= R(2));
    CHECK_THROWS(SurfaceClass::from_topology(-1, 1));
    CHECK_THROWS(SurfaceClass::from_topology(0, 0));
    CHECK_THROWS(SurfaceClass::from_s(R(3)));
}

TEST_CASE("moment integrals: trivial values") {
    for (R x : {R(1, 2), R(1, 7), R(9, 10)}) CHECK(moment_alpha(x, R(0), 0, 5) == R(2));
    CHECK(moment_alpha(R(0), R(0), 1, 5) == R(0));
    CHECK_THROWS_AS(moment_integrals(R(2), R(1, 2), R(1)), std::domain_error);
    CHECK_THROWS_AS(moment_integrals(R(2), R(0), R(0)), std::domain_error);
}

TEST_CASE("moment integrals match quadrature at s=2, x=1/2, c=1/3") {
    auto m = moment_integrals(R(2), R(1, 2), R(1, 3));
    for (const auto& [rk, v] : m.alpha)
        CHECK(std::abs(v.to_double() - oracle::alpha(rk.first, rk.second, 0.5, 1.0 / 3)) < 1e-14);
    for (const auto& [rk, v] : m.beta)
        CHECK(std::abs(v.to_double() - oracle::beta(rk.first, rk.second, 2.0, 0.5, 1.0 / 3)) < 1e-14);
    CHECK(m.alpha.size() == 5);
    CHECK(m.beta.size() == 2);
}

TEST_CASE("A1 vanishes at the EM root a_1 for s=2") {
    oracle::Gen g(21);
    for (int i = 0; i < 25; ++i) {
        R x = g.in(R(0), R(1), 40);
        auto [a1, a2] = extremal_affine_coeffs(R(2), S(x), em_a1(x));
        CHECK(a1.is_zero());
        CHECK_FALSE(a2.is_zero());
    }
}

TEST_CASE("no cscK metric on F_1: A1 is nonzero at c=0") {
    auto [a1, a2] = extremal_affine_coeffs(R(2), R(1, 2), R(0));
    CHECK_FALSE(a1.is_zero());
}

TEST_CASE("A1 and A2 agree with a quadrature solve") {
    oracle::Gen g(5);
    for (int i = 0; i < 60; ++i) {
        R s = kSValues[g.integer(0, 4)];
        R x = g.in(R(0), R(1)), c = g.in(R(-9, 10), R(9, 10));
        auto [a1, a2] = extremal_affine_coeffs(s, x, c);
        auto [o1, o2] = affine_oracle(s.to_double(), x.to_double(), c.to_double());
        CHECK(std::abs(a1.to_double() - o1) <= 1e-12 * std::max(1.0, std::abs(o1)));
        CHECK(std::abs(a2.to_double() - o2) <= 1e-12 * std::max(1.0, std::abs(o2)));
    }
}

TEST_CASE("profile at c = x is 1 + x z") {
    for (R s : kSValues)
        for (R x : {R(1, 10), R(1, 2), R(7, 8)}) {
            auto p = profile(s, x, x);
            CHECK(p.P == RPoly({R(1), x}));
            CHECK(p.positivity.positive);
        }
}

TEST_CASE("profile: integral construction at s=2, x=1/2, c=1/3") {
    auto p = profile(R(2), R(1, 2), R(1, 3));
    CHECK(p.F == profile_from_integral(R(2), R(1, 2), R(1, 3)));
    CHECK(p.boundary_ok);
    CHECK(p.positivity.positive);
    CHECK(p.F(R(1)).is_zero());
    CHECK(p.F.derivative()(R(-1)) == R(1));
}

TEST_CASE("profile identity and boundary conditions on random samples") {
    oracle::Gen g(2024);
    for (int i = 0; i < 200; ++i) {
        R s = kSValues[i % 5];
        R x = g.in(R(0), R(1), 30), c = g.in(R(-1), R(1), 30);
        auto p = profile(s, x, c);
        CHECK(p.F == profile_from_integral(s, x, c));
        CHECK(p.F == RPoly({R(1), R(0), R(-1)}) * p.P);
        CHECK(p.boundary_ok);
        RPoly d = p.F.derivative();
        CHECK(d(R(1)) == -2 * (1 + x));
        CHECK(d(R(-1)) == 2 * (1 - x));
    }
}

TEST_CASE("profile over quadratic surds") {
    S x(R(1, 2)), c = S(R(4, 3)) - S::sqrt(R(13)) / S(3);
    auto p = profile(R(2), x, c);
    CHECK(p.boundary_ok);
    CHECK(p.F == profile_from_integral(R(2), x, c));
}

TEST_CASE("genus-zero profiles are positive") {
    oracle::Gen g(8);
    for (int n = 1; n <= 6; ++n)
        for (int i = 0; i < 10; ++i) {
            R x = g.in(R(0), R(1), 30), c = g.in(R(-1), R(1), 30);
            auto p = profile(R(2, n), x, c);
            bool by_isolation = isolate_real_roots(p.P, R(-1), R(1)).empty() && p.P(R(0)).sign() > 0;
            CHECK(p.positivity.positive);
            CHECK(by_isolation);
        }
}

TEST_CASE("kahler class") {
    CHECK(kahler_class(1, R(1, 2)) == std::pair{R(2), R(1)});
    CHECK(kahler_class(2, R(1, 3)) == std::pair{R(2), R(4)});
    CHECK_THROWS(kahler_class(1, R(1)));
}

TEST_CASE("twin of a=0 for s=2") {
    oracle::Gen g(3);
    for (int i = 0; i < 40; ++i) {
        R x = g.in(R(0), R(1));
        R expect = -x * (1 - 4 * x + x * x) / (1 + 2 * x - 3 * x * x + 2 * x * x * x);
        auto t = twin_of(R(2), x, R(0));
        if (R(-1) < expect && expect < R(1)) {
            REQUIRE(t);
            CHECK(t->b == expect);
        } else {
            CHECK_FALSE(t);
        }
    }
    auto bif = twin_of(R(2), S(2) - S::sqrt(R(3)), S(0));
    REQUIRE(bif);
    CHECK(bif->b.is_zero());
    CHECK(bif->bifurcation);
}

TEST_CASE("twin of a = x = 1/n for s = 2/n") {
    for (int n = 3; n <= 12; ++n) {
        auto t = twin_of(R(2, n), R(1, n), R(1, n));
        REQUIRE(t);
        CHECK(t->b == R(-2, n));
        CHECK_FALSE(t->bifurcation);
    }
}

TEST_CASE("SE ray on F_1 only bifurcates") {
    S a = S(R(4, 3)) - S::sqrt(R(13)) / S(3);
    auto t = twin_of(R(2), S(R(1, 2)), a);
    REQUIRE(t);
    CHECK(t->b == a);
    CHECK(t->bifurcation);
}

TEST_CASE("twin involution and membership") {
    oracle::Gen g(77);
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        R s = kSValues[g.integer(0, 4)];
        R x = g.in(R(0), R(1), 40), a = g.in(R(-1), R(1), 40);
        auto t = twin_of(s, x, a);
        if (!t) continue;
        CHECK(twin_residual(s, x, t->a, t->b).is_zero());
        CHECK(twin_residual(s, x, t->b, t->a).is_zero());
        if (t->bifurcation) continue;
        auto back = twin_of(s, x, t->b);
        REQUIRE(back);
        CHECK(back->b == a);
        ++checked;
    }
    CHECK(checked > 50);
}

TEST_CASE("conic at s=2 is a nondegenerate hyperbola") {
    oracle::Gen g(4);
    for (int i = 0; i < 40; ++i) {
        R x = g.in(R(0), R(1));
        auto c = twin_conic(R(2), x);
        R expect = x * (3 * x * x - 4 * x - 1) * (1 - x * x) * (1 - x * x) * (1 + 4 * x + x * x) / 4;
        CHECK(c.det_formula == expect);
        CHECK(c.det_direct == expect);
        CHECK(c.kind == ConicKind::NondegenerateHyperbola);
        CHECK(twin_conic(R(1), x).kind == ConicKind::NondegenerateHyperbola);
    }
}

TEST_CASE("conic determinant identity in (s, x)") {
    using M = MPoly<R>;
    M s = M::var(2, 0), x = M::var(2, 1), one(2, R(1));
    auto k = [](long v) { return M(2, R(v)); };
    M B = x * (k(3) * x * x - k(2) * s * x - one);
    M D = one + s * x - k(3) * x * x + s * x * x * x;
    M F = x * (one - k(2) * s * x + x * x);
    // Cofactor expansion of [[0, B/2, D/2], [B/2, 0, D/2], [D/2, D/2, F]] times 8.
    M m01 = B, m02 = D, m12 = D, m22 = k(2) * F;
    M det8 = -(m01 * (m01 * m22 - m12 * m02)) + m02 * (m01 * m12);
    M closed = x * (k(3) * x * x - k(2) * s * x - one) * (one - x * x) * (one - x * x) *
               (one + k(2) * s * x + (s * s - k(3)) * x * x);
    CHECK(det8 == closed.scaled(R(2)));
    CHECK(det8 == (B * (D * D - B * F)).scaled(R(2)));
    // And the library's two determinants agree on random (s, x).
    oracle::Gen g(9);
    for (int i = 0; i < 50; ++i) {
        R sv = g.in(R(-5), R(2)), xv = g.in(R(0), R(1));
        auto c = twin_conic(sv, xv);
        CHECK(c.det_formula == c.det_direct);
        CHECK(c.det_formula == closed.eval(std::vector<R>{sv, xv}) / 4);
    }
}

TEST_CASE("conic degenerates at two x values for s = 2/3") {
    R s(2, 3);
    auto xs = conic_degenerate_x(s);
    REQUIRE(xs.size() == 2);
    S first = (S::sqrt(s * s + 3) + S(s)) / S(3);
    S second = -(S(s) + S::sqrt(R(3))) / S(s * s - 3);
    CHECK(((xs[0] == first && xs[1] == second) || (xs[0] == second && xs[1] == first)));
    for (const S& x : xs) {
        CHECK(S(0) < x);
        CHECK(x < S(1));
        auto c = twin_conic(s, x);
        CHECK(c.det_formula.is_zero());
        CHECK(c.det_direct.is_zero());
        CHECK(c.kind == ConicKind::Degenerate);
        CHECK_FALSE(c.square_solutions);
    }
    CHECK(conic_degenerate_x(R(2)).empty());
    CHECK(conic_degenerate_x(R(1)).empty());
}

TEST_CASE("EM roots for s=2") {
    auto r = em_roots(R(2), R(4, 5));
    REQUIRE(r.size() == 1);
    CHECK(r[0].is_rational());
    CHECK(r[0].rational() == R(1, 2));
    auto [f1, f2] = em_factors(R(2), R(4, 5));
    CHECK(f1(R(1, 2)).is_zero());
    CHECK(f2(R(1, 2)).is_zero());
    CHECK(f2.derivative()(R(1, 2)).is_zero());

    auto h = em_roots(R(2), R(1, 2));
    REQUIRE(h.size() == 1);
    REQUIRE(h[0].closed_form());
    CHECK(*h[0].closed_form() == S(2) - S::sqrt(R(3)));
}

TEST_CASE("every EM root gives A1 = 0") {
    oracle::Gen g(12);
    int total = 0;
    for (int i = 0; i < 40; ++i) {
        R s = kSValues[i % 5];
        R x = g.in(R(0), R(1), 30);
        for (const auto& root : em_roots(s, x)) {
            REQUIRE(root.closed_form());
            auto [a1, a2] = extremal_affine_coeffs(s, S(x), *root.closed_form());
            CHECK(a1.is_zero());
            ++total;
        }
    }
    CHECK(total >= 40);
}

TEST_CASE("EM condition is the product of the two factors") {
    // alpha_{0,-5} beta_{1,-3} - alpha_{1,-5} beta_{0,-3} = 4 em / (3 (c - 1)^6 (c + 1)^6).
    oracle::Gen g(14);
    for (int i = 0; i < 60; ++i) {
        R s = kSValues[i % 5];
        R x = g.in(R(0), R(1), 30), c = g.in(R(-1), R(1), 30);
        auto m = moment_integrals(s, x, c);
        auto [f1, f2] = em_factors(s, x);
        R lhs = m.a(0, 5) * m.b(1, 3) - m.a(1, 5) * m.b(0, 3);
        CHECK(lhs == 4 * f1(c) * f2(c) / (3 * field_pow(c - 1, 6) * field_pow(c + 1, 6)));
    }
}

TEST_CASE("LeBrun EM twins for x > 4/5") {
    oracle::Gen g(15);
    for (int i = 0; i < 30; ++i) {
        R x = g.in(R(4, 5), R(1), 60);
        S root = S::sqrt(x * (5 * x - 4));
        S a21 = (S(x) - root) / S(2 * x), a22 = (S(x) + root) / S(2 * x);
        CHECK(twin_residual(R(2), S(x), a21, a22).is_zero());
        auto t = twin_of(R(2), S(x), a21);
        REQUIRE(t);
        CHECK(t->b == a22);
        CHECK(em_roots(R(2), x).size() == 3);
    }
}

TEST_CASE("b_1 relation for the twin of a_1") {
    // With x = 2a/(1 + a^2), a is a root of x a^2 - 2a + x. Clear denominators and compare polynomials in a.
    RPoly a = RPoly::var(), X = a.scaled(R(2)), Y{R(1), R(0), R(1)};
    RPoly F3 = X * (Y * Y - (X * Y).scaled(R(4)) + X * X);
    RPoly D3 = Y * Y * Y + (X * Y * Y).scaled(R(2)) - (X * X * Y).scaled(R(3)) + (X * X * X).scaled(R(2));
    RPoly B3 = X * ((X * X).scaled(R(3)) - (X * Y).scaled(R(4)) - Y * Y);
    RPoly num = -(F3 + a * D3), den = D3 + a * B3;
    RPoly fn = a * RPoly{R(-3), R(12), R(-6), R(4), R(1)}, fd{R(1), R(4), R(-10), R(12), R(1)};
    CHECK(num * fd == fn * den);

    oracle::Gen g(16);
    for (int i = 0; i < 30; ++i) {
        R av = g.in(R(0), R(1), 50);
        R x = 2 * av / (1 + av * av);
        auto t = twin_of(R(2), x, av);
        R b1 = fn(av) / fd(av);
        if (t) CHECK(t->b == b1);
    }
}

TEST_CASE("a = 0 twins for s = 2/n, x = 1/n") {
    for (long n = 2; n <= 25; ++n) {
        R bn(-n * (n * n - 3), n * n * n * n - n * n + 2);
        CHECK(R(-1) < bn);
        CHECK(bn < R(1));
        CHECK(twin_residual(R(2, n), R(1, n), R(0), bn).is_zero());
        auto t = twin_of(R(2, n), R(1, n), R(0));
        REQUIRE(t);
        CHECK(t->b == bn);
    }
}

TEST_CASE("cscS cubic equals the moment condition up to a unit") {
    // alpha_{0,-4} beta_{1,-3} - alpha_{1,-4} beta_{0,-3} = 4 cubic / (3 (c - 1)^5 (c + 1)^5).
    oracle::Gen g(17);
    for (int i = 0; i < 60; ++i) {
        R s = kSValues[i % 5];
        R x = g.in(R(0), R(1), 30), c = g.in(R(-1), R(1), 30);
        auto m = moment_integrals(s, x, c);
        R lhs = m.a(0, 4) * m.b(1, 3) - m.a(1, 4) * m.b(0, 3);
        CHECK(lhs == 4 * cscs_cubic(s, x)(c) / (3 * field_pow(c - 1, 5) * field_pow(c + 1, 5)));
        // q(c_hat) is (1 + c_hat)^3 cubic((1 - c_hat)/(1 + c_hat)) up to a constant.
        R h1 = g.in(R(0), R(5), 30), h2 = g.in(R(0), R(5), 30);
        auto lifted = [&](const R& h) { return cscs_cubic(s, x)((1 - h) / (1 + h)) * field_pow(1 + h, 3); };
        CHECK(cscs_qhat(s, x)(h1) * lifted(h2) == cscs_qhat(s, x)(h2) * lifted(h1));
    }
}

TEST_CASE("cscS roots in closed form") {
    auto r = cscs_root(R(2), R(1, 3));
    REQUIRE(r.c.closed_form());
    CHECK(*r.c.closed_form() == S(1) - S::sqrt(R(5)) * S(R(2, 5)));
    CHECK(r.positive_roots == 1);

    auto h = cscs_root(R(2), R(1, 2));
    REQUIRE(h.c.closed_form());
    CHECK(*h.c.closed_form() == S(R(4, 3)) - S::sqrt(R(13)) / S(3));
}

TEST_CASE("cscS root is unique and solves the moment condition") {
    oracle::Gen g(18);
    for (int i = 0; i < 60; ++i) {
        R s = i % 3 == 0 ? g.in(R(-10), R(2), 10) : kSValues[i % 5];
        R x = g.in(R(0), R(1), 40);
        auto r = cscs_root(s, x);
        CHECK(r.positive_roots == 1);
        CHECK(r.c.compare(R(-1)) > 0);
        CHECK(r.c.compare(R(1)) < 0);
        CHECK(r.c.sign_of(cscs_cubic(s, x)) == 0);
        double c = r.c.enclose(R(1, 1000000000)).mid().to_double();
        double xd = x.to_double(), sd = s.to_double();
        double e = oracle::alpha(0, 4, xd, c) * oracle::beta(1, 3, sd, xd, c) -
                   oracle::alpha(1, 4, xd, c) * oracle::beta(0, 3, sd, xd, c);
        double scale = std::abs(oracle::alpha(0, 4, xd, c) * oracle::beta(1, 3, sd, xd, c)) + 1;
        CHECK(std::abs(e) < 1e-7 * scale);
    }
}

TEST_CASE("cscS twins") {
    auto t = cscs_twin(R(2), R(1, 3));
    REQUIRE(t);
    S a = S(1) - S::sqrt(R(5)) * S(R(2, 5));
    S b = (S(-45) + S(19) * S::sqrt(R(5))) / (S(25) + S(9) * S::sqrt(R(5)));
    REQUIRE(t->a.closed_form());
    REQUIRE(t->b.closed_form());
    CHECK(*t->a.closed_form() == a);
    CHECK(*t->b.closed_form() == b);
    CHECK(t->residual.within(R(1, 1000000000000)));
    CHECK(twin_residual(R(2), S(R(1, 3)), a, b).is_zero());

    CHECK_FALSE(cscs_twin(R(2), R(1, 2)));
}

TEST_CASE("cscS twin residuals are certified for irrational roots") {
    oracle::Gen g(19);
    int found = 0;
    for (int i = 0; i < 40; ++i) {
        R x = g.in(R(0), R(1), 40);
        auto t = cscs_twin(R(2), x);
        if (!t) continue;
        CHECK(t->residual.within(R(1, 1000000000000)));
        CHECK_FALSE(t->bifurcation);
        ++found;
    }
    CHECK(found > 5);
}

TEST_CASE("genus twins: closed forms") {
    for (int gen = 0; gen <= 40; ++gen) {
        auto u = genus_twin(R(1 - gen), R(1, 10));
        CHECK(u.b == R(gen + 19, 10 * gen - 107));
        CHECK(u.residual.is_zero());
        auto t = genus_twin(R(2 * (1 - gen)), R(1, 101));
        CHECK(t.b == R(gen + 100, 101 * gen - 5200));
        CHECK(t.residual.is_zero());
    }
    auto w = genus_twin(R(-20), R(1, 10));
    CHECK(w.residual.is_zero());
    CHECK(w.in_range == (R(-1) < w.b && w.b < R(1)));
    CHECK_THROWS(genus_twin(R(2), R(1)));
}

TEST_CASE("genus twin positivity verdicts agree across routes") {
    oracle::Gen g(20);
    for (int i = 0; i < 100; ++i) {
        R s(1 - g.integer(0, 30));
        R x = g.in(R(0), R(1), 200);
        if ((3 * x * x - s * x - 1).is_zero()) continue;
        GenusTwin t = genus_twin(s, x);
        CHECK(t.residual.is_zero());
        CHECK(t.a == x);
    }
}

TEST_CASE("join parameters") {
    auto a = join_params(11, 9, 1);
    CHECK(a.n == 2);
    CHECK(a.x == R(1, 10));
    CHECK_FALSE(a.twisted);
    auto b = join_params(51, 50, 3);
    CHECK(b.n == 3);
    CHECK(b.x == R(1, 101));
    CHECK(b.twisted);
    auto c = join_params(2, 1, 1);
    CHECK(c.n == 1);
    CHECK(c.x == R(1, 3));
    CHECK(c.twisted);
    CHECK_THROWS(join_params(4, 2, 1));
    CHECK_THROWS(join_params(2, 3, 1));
    CHECK_THROWS(join_params(3, 2, 0));
}

TEST_CASE("existence witnesses on the square") {
    oracle::Gen g(22);
    for (int i = 0; i < 40; ++i) {
        R x = g.in(R(0), R(1), 50);
        for (R s : {R(1), R(2)}) {
            auto w = existence_witness(s, x);
            REQUIRE(w);
            REQUIRE(w->t);
            CHECK(w->off_diagonal);
            CHECK(w->g0.sign() * w->g1.sign() < 0);
        }
    }
    for (int n = 3; n <= 8; ++n)
        for (int i = 0; i < 10; ++i) {
            R s(2, n);
            R x = g.in(R(0), s, 60);
            auto w = existence_witness(s, x);
            REQUIRE(w);
            REQUIRE(w->t);
            CHECK(w->off_diagonal);
        }
    CHECK_FALSE(existence_witness(R(-3), R(1, 2)));
}

TEST_CASE("page class quartic") {
    RPoly q = page_class_polynomial(R(2));
    CHECK(q == RPoly({R(-3), R(0), R(18), R(-16), R(5)}));
    auto roots = isolate_real_roots(q, R(0), R(1));
    REQUIRE(roots.size() == 1);
    RealAlgebraic xp(roots[0]);
    CHECK(xp.compare(R(52, 100)) > 0);
    CHECK(xp.compare(R(53, 100)) < 0);
    // At x_P the twin of a = 0 is itself an EM root.
    RPoly n = calabi_twin_em_numerator(R(2));
    CHECK(xp.sign_of(n) == 0);
}
