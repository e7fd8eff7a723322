#pragma once

// Calabi toric, orthotoric and product ansatze on quadrilaterals, and the weighted scalar curvature engine.

#include "twins/exactnum/matrix.hpp"
#include "twins/exactnum/roots.hpp"
#include "twins/quadrilateral/chartfrac.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <string>

namespace twins {

enum class AnsatzKind { Calabi, Orthotoric, Product };

const char* to_string(AnsatzKind k);

// Rectangle [alpha1, alpha2] x [beta1, beta2] in the chart and the four labels.
template <class K>
struct QuadParams {
    K alpha1, alpha2, beta1, beta2;
    K c_alpha1, c_alpha2, c_beta1, c_beta2;
};

template <class K>
struct ToricAnsatz {
    AnsatzKind kind = AnsatzKind::Calabi;
    QuadParams<K> params;
    Poly<K> A, B;                   // ascending coefficients
    std::optional<bool> positive;   // A, B > 0 on the open intervals; empty when undecided

    // Coefficients in the indexing of the extremal normal forms:
    // Calabi and orthotoric A_i multiplies x^{4-i}, product A_i multiplies x^{3-i};
    // Calabi B_i multiplies y^i, orthotoric B_i multiplies y^{4-i}, product B_i multiplies y^{3-i}.
    K a(int i) const { return A.coeff((kind == AnsatzKind::Product ? 3 : 4) - i); }
    K b(int i) const {
        switch (kind) {
            case AnsatzKind::Calabi: return B.coeff(i);
            case AnsatzKind::Orthotoric: return B.coeff(4 - i);
            default: return B.coeff(3 - i);
        }
    }
};

// A(alpha_i), A'(alpha_i) - 2/C_alpha_i, B(beta_i), B'(beta_i) + 2/C_beta_i for i = 1, 2.
template <class K>
std::array<K, 8> boundary_residuals(const ToricAnsatz<K>& a) {
    const auto& p = a.params;
    Poly<K> dA = a.A.derivative(), dB = a.B.derivative();
    return {a.A(p.alpha1), a.A(p.alpha2), dA(p.alpha1) - K(2) / p.c_alpha1, dA(p.alpha2) - K(2) / p.c_alpha2,
            a.B(p.beta1),  a.B(p.beta2),  dB(p.beta1) + K(2) / p.c_beta1,  dB(p.beta2) + K(2) / p.c_beta2};
}

template <class K>
bool boundary_exact(const ToricAnsatz<K>& a) {
    for (const auto& r : boundary_residuals(a))
        if (!is_zero(r)) return false;
    return true;
}

// p > 0 on (lo, hi), decided by root isolation; empty when a coefficient or endpoint is irrational.
template <class K>
std::optional<bool> interior_positive(const Poly<K>& p, const K& lo, const K& hi) {
    if constexpr (std::is_same_v<K, Rational>) {
        if (p.is_zero()) return false;
        if (!isolate_real_roots(p, lo, hi).empty()) return false;
        return p((lo + hi) / 2).sign() > 0;
    } else {
        std::vector<Rational> c;
        for (const auto& v : p.coeffs()) {
            if (!v.is_rational()) return std::nullopt;
            c.push_back(v.a());
        }
        if (!lo.is_rational() || !hi.is_rational()) return std::nullopt;
        return interior_positive<Rational>(RPoly(c), lo.a(), hi.a());
    }
}

namespace detail {

// Each coefficient of a fitted polynomial is a linear form in the unknowns.
template <class K>
using LinearPoly = std::vector<std::vector<K>>;

template <class K>
std::vector<K> value_row(const LinearPoly<K>& p, const K& t, int deriv) {
    std::vector<K> row(p.front().size(), K(0));
    for (size_t k = static_cast<size_t>(deriv); k < p.size(); ++k) {
        K w = field_pow(t, static_cast<int>(k) - deriv);
        if (deriv == 1) w *= K(static_cast<int>(k));
        for (size_t j = 0; j < row.size(); ++j) row[j] += w * p[k][j];
    }
    return row;
}

template <class K>
Poly<K> realize(const LinearPoly<K>& p, const std::vector<K>& u) {
    std::vector<K> c(p.size(), K(0));
    for (size_t k = 0; k < p.size(); ++k)
        for (size_t j = 0; j < u.size(); ++j) c[k] += p[k][j] * u[j];
    return Poly<K>(c);
}

// Rows for the eight boundary conditions on (A, B).
template <class K>
LinearSolution<K> solve_boundary(const QuadParams<K>& p, const LinearPoly<K>& A, const LinearPoly<K>& B) {
    std::vector<std::vector<K>> rows;
    std::vector<K> rhs;
    auto add = [&](std::vector<K> r, K v) { rows.push_back(std::move(r)); rhs.push_back(std::move(v)); };
    add(value_row(A, p.alpha1, 0), K(0));
    add(value_row(A, p.alpha2, 0), K(0));
    add(value_row(A, p.alpha1, 1), K(2) / p.c_alpha1);
    add(value_row(A, p.alpha2, 1), K(2) / p.c_alpha2);
    add(value_row(B, p.beta1, 0), K(0));
    add(value_row(B, p.beta2, 0), K(0));
    add(value_row(B, p.beta1, 1), -K(2) / p.c_beta1);
    add(value_row(B, p.beta2, 1), -K(2) / p.c_beta2);
    return Matrix<K>(rows).solve_general(rhs);
}

template <class K>
std::vector<K> unit(size_t n, size_t i, const K& s = K(1)) {
    std::vector<K> v(n, K(0));
    v[i] = s;
    return v;
}

template <class K>
void require_label_signs(const QuadParams<K>& p) {
    if (!(p.alpha1 < p.alpha2) || !(p.beta1 < p.beta2)) throw std::invalid_argument("need alpha1 < alpha2 and beta1 < beta2");
    if (sign_of(p.c_alpha1) <= 0 || sign_of(p.c_beta2) <= 0 || sign_of(p.c_alpha2) >= 0 || sign_of(p.c_beta1) >= 0)
        throw std::invalid_argument("label signs must be C_alpha1, C_beta2 > 0 and C_alpha2, C_beta1 < 0");
}

template <class K>
void set_positivity(ToricAnsatz<K>& a) {
    auto pa = interior_positive(a.A, a.params.alpha1, a.params.alpha2);
    auto pb = interior_positive(a.B, a.params.beta1, a.params.beta2);
    if (pa && pb) a.positive = *pa && *pb;
    else if ((pa && !*pa) || (pb && !*pb)) a.positive = false;
}

}  // namespace detail

// Quartic A and quadratic B with B'' = -2 A_2. Throws when the boundary system is inconsistent.
template <class K>
ToricAnsatz<K> calabi_fit(const QuadParams<K>& p) {
    detail::require_label_signs(p);
    if (sign_of(p.alpha1) <= 0 || sign_of(p.beta1) < 0) throw std::invalid_argument("Calabi needs alpha1 > 0 and beta1 >= 0");
    if (!is_zero(p.c_beta1 + p.c_beta2)) throw std::invalid_argument("Calabi labels need C_beta1 = -C_beta2");
    // unknowns: x^0..x^4 of A, then y^0, y^1 of B
    const size_t n = 7;
    detail::LinearPoly<K> A, B;
    for (size_t k = 0; k < 5; ++k) A.push_back(detail::unit<K>(n, k));
    B = {detail::unit<K>(n, 5), detail::unit<K>(n, 6), detail::unit<K>(n, 2, K(-1))};
    auto sol = detail::solve_boundary(p, A, B);
    if (!sol.consistent) throw std::invalid_argument("inconsistent Calabi boundary system");
    if (!sol.nullspace.empty()) throw std::invalid_argument("underdetermined Calabi boundary system");
    ToricAnsatz<K> out{AnsatzKind::Calabi, p, detail::realize(A, sol.particular), detail::realize(B, sol.particular), {}};
    detail::set_positivity(out);
    return out;
}

// A quartic and B = -A_0 y^4 - A_1 y^3 - A_2 y^2 + B_3 y + B_4; empty when the system is inconsistent.
template <class K>
std::optional<ToricAnsatz<K>> ortho_fit(const QuadParams<K>& p) {
    detail::require_label_signs(p);
    if (!(p.beta2 < p.alpha1)) throw std::invalid_argument("orthotoric needs beta2 < alpha1");
    // unknowns: x^0..x^4 of A, then y^0, y^1 of B
    const size_t n = 7;
    detail::LinearPoly<K> A, B;
    for (size_t k = 0; k < 5; ++k) A.push_back(detail::unit<K>(n, k));
    B = {detail::unit<K>(n, 5), detail::unit<K>(n, 6)};
    for (size_t k = 2; k < 5; ++k) B.push_back(detail::unit<K>(n, k, K(-1)));
    auto sol = detail::solve_boundary(p, A, B);
    if (!sol.consistent) return std::nullopt;
    if (!sol.nullspace.empty()) throw std::invalid_argument("underdetermined orthotoric boundary system");
    ToricAnsatz<K> out{AnsatzKind::Orthotoric, p, detail::realize(A, sol.particular), detail::realize(B, sol.particular), {}};
    detail::set_positivity(out);
    return out;
}

template <class K>
struct ProductFit {
    ToricAnsatz<K> ansatz;          // particular solution
    std::vector<Poly<K>> free_A;    // directions that keep the boundary data of A
    std::vector<Poly<K>> free_B;
};

// A and B of degree <= cap (3 or 4), fitted independently.
template <class K>
ProductFit<K> product_fit(const QuadParams<K>& p, int cap = 3) {
    detail::require_label_signs(p);
    if (cap != 3 && cap != 4) throw std::invalid_argument("degree cap must be 3 or 4");
    const size_t m = static_cast<size_t>(cap) + 1, n = 2 * m;
    detail::LinearPoly<K> A, B;
    for (size_t k = 0; k < m; ++k) {
        A.push_back(detail::unit<K>(n, k));
        B.push_back(detail::unit<K>(n, m + k));
    }
    auto sol = detail::solve_boundary(p, A, B);
    if (!sol.consistent) throw std::invalid_argument("inconsistent product boundary system");
    ProductFit<K> out{{AnsatzKind::Product, p, detail::realize(A, sol.particular), detail::realize(B, sol.particular), {}}, {}, {}};
    for (const auto& v : sol.nullspace) {
        Poly<K> da = detail::realize(A, v), db = detail::realize(B, v);
        if (!da.is_zero()) out.free_A.push_back(da);
        if (!db.is_zero()) out.free_B.push_back(db);
    }
    detail::set_positivity(out.ansatz);
    return out;
}

// Ansatz with given profiles; throws unless the boundary conditions hold exactly.
template <class K>
ToricAnsatz<K> explicit_ansatz(AnsatzKind kind, const QuadParams<K>& p, Poly<K> A, Poly<K> B) {
    detail::require_label_signs(p);
    ToricAnsatz<K> out{kind, p, std::move(A), std::move(B), {}};
    if (!boundary_exact(out)) throw std::invalid_argument("profiles violate the boundary conditions");
    detail::set_positivity(out);
    return out;
}

// Labels read off the profiles: C_alpha_i = 2/A'(alpha_i), C_beta_i = -2/B'(beta_i).
template <class K>
ToricAnsatz<K> ansatz_from_profiles(AnsatzKind kind, const K& alpha1, const K& alpha2, const K& beta1, const K& beta2,
                                    Poly<K> A, Poly<K> B) {
    Poly<K> dA = A.derivative(), dB = B.derivative();
    for (const K& v : {dA(alpha1), dA(alpha2), dB(beta1), dB(beta2)})
        if (is_zero(v)) throw std::invalid_argument("profile has a multiple root at an endpoint");
    QuadParams<K> p{alpha1, alpha2, beta1, beta2, K(2) / dA(alpha1), K(2) / dA(alpha2), K(-2) / dB(beta1), K(-2) / dB(beta2)};
    return explicit_ansatz(kind, p, std::move(A), std::move(B));
}

// f = lambda + c1 mu_1 + c2 mu_2.
template <class K>
struct AffinePotential {
    K lambda, c1, c2;
    friend bool operator==(const AffinePotential&, const AffinePotential&) = default;
};

template <class K>
struct ToricMetricData {
    AnsatzKind kind = AnsatzKind::Calabi;
    std::array<K, 4> rect;                            // alpha1, alpha2, beta1, beta2
    MPoly<K> mu1, mu2;                                // moment map in the chart
    std::array<std::array<ChartFrac<K>, 2>, 2> H;     // inverse Hessian of the symplectic potential
    std::array<std::array<ChartFrac<K>, 2>, 2> dmu;   // d/dmu_i = dmu[i][0] d/dx + dmu[i][1] d/dy
    ChartFrac<K> scal;                                // -sum_ij d_i d_j H_ij

    ChartFrac<K> lift(const MPoly<K>& p) const { return ChartFrac<K>(p, H[0][0].base()); }
    ChartFrac<K> d(size_t i, const ChartFrac<K>& h) const { return dmu[i][0] * h.partial(0) + dmu[i][1] * h.partial(1); }
    MPoly<K> pullback(const AffinePotential<K>& f) const {
        return MPoly<K>(2, f.lambda) + mu1.scaled(f.c1) + mu2.scaled(f.c2);
    }
    // Chart corners (alpha_i, beta_j); their images are the vertices of the quadrilateral.
    std::array<std::array<K, 2>, 4> corners() const {
        return {{{rect[0], rect[2]}, {rect[0], rect[3]}, {rect[1], rect[2]}, {rect[1], rect[3]}}};
    }
};

template <class K>
ToricMetricData<K> metric_data(const ToricAnsatz<K>& a) {
    using MP = MPoly<K>;
    using F = ChartFrac<K>;
    const MP x = MP::var(2, 0), y = MP::var(2, 1), one(2, K(1)), zero(2);
    const MP A = MP::from_univariate(a.A, 2, 0), B = MP::from_univariate(a.B, 2, 1);
    const auto& p = a.params;
    ToricMetricData<K> m;
    m.kind = a.kind;
    m.rect = {p.alpha1, p.alpha2, p.beta1, p.beta2};
    switch (a.kind) {
        case AnsatzKind::Calabi:
            m.mu1 = x;
            m.mu2 = x * y;
            m.H = {{{F(A, x, 1), F(y * A, x, 1)}, {F(y * A, x, 1), F(x * x * B + y * y * A, x, 1)}}};
            m.dmu = {{{F(one, x), F(-y, x, 1)}, {F(zero, x), F(one, x, 1)}}};
            break;
        case AnsatzKind::Orthotoric: {
            const MP w = x - y, cross = y * A + x * B;
            m.mu1 = x + y;
            m.mu2 = x * y;
            m.H = {{{F(A + B, w, 1), F(cross, w, 1)}, {F(cross, w, 1), F(y * y * A + x * x * B, w, 1)}}};
            m.dmu = {{{F(x, w, 1), F(-y, w, 1)}, {F(-one, w, 1), F(one, w, 1)}}};
            break;
        }
        case AnsatzKind::Product:
            m.mu1 = x;
            m.mu2 = y;
            m.H = {{{F(A, one), F(zero, one)}, {F(zero, one), F(B, one)}}};
            m.dmu = {{{F(one, one), F(zero, one)}, {F(zero, one), F(one, one)}}};
            break;
    }
    F s = m.lift(zero);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) s = s - m.d(i, m.d(j, m.H[i][j]));
    m.scal = s;
    return m;
}

// Delta h = -sum_ij d_i (H_ij d_j h).
template <class K>
ChartFrac<K> laplacian(const ToricMetricData<K>& m, const ChartFrac<K>& h) {
    ChartFrac<K> out = m.lift(MPoly<K>(2));
    for (size_t i = 0; i < 2; ++i) {
        ChartFrac<K> flux = m.H[i][0] * m.d(0, h) + m.H[i][1] * m.d(1, h);
        out = out - m.d(i, flux);
    }
    return out;
}

// |dh|^2 = sum_ij H_ij d_i h d_j h.
template <class K>
ChartFrac<K> gradient_norm(const ToricMetricData<K>& m, const ChartFrac<K>& h) {
    ChartFrac<K> out = m.lift(MPoly<K>(2));
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) out = out + m.H[i][j] * m.d(i, h) * m.d(j, h);
    return out;
}

// Signs of f at the four corners: +1 all positive, -1 all negative, 0 otherwise.
template <class K>
int vertex_sign(const ToricMetricData<K>& m, const AffinePotential<K>& f) {
    MPoly<K> g = m.pullback(f);
    int pos = 0, neg = 0;
    for (const auto& c : m.corners()) {
        int s = sign_of(g.template eval<K>({c[0], c[1]}));
        pos += s > 0;
        neg += s < 0;
    }
    return pos == 4 ? 1 : neg == 4 ? -1 : 0;
}

// f^2 Scal - 2(p-1) f Delta f - p(p-1) |df|^2. Throws std::domain_error unless f > 0 at every vertex.
template <class K>
ChartFrac<K> weighted_scal(const ToricMetricData<K>& m, const AffinePotential<K>& f, int p) {
    if (vertex_sign(m, f) != 1) throw std::domain_error("potential is not positive at every vertex");
    ChartFrac<K> F = m.lift(m.pullback(f));
    return F * F * m.scal - (F * laplacian(m, F)).scaled(K(2 * (p - 1))) - gradient_norm(m, F).scaled(K(p * (p - 1)));
}

template <class K>
struct AffineVerdict {
    bool is_affine = false;
    std::array<K, 3> coeffs{K(0), K(0), K(0)};  // on 1, mu_1, mu_2
    ChartFrac<K> residual;                       // zero when affine, otherwise the input
};

// Exact membership of r in span{1, mu_1, mu_2}.
template <class K>
AffineVerdict<K> affine_in_moments(const ChartFrac<K>& r, const ToricMetricData<K>& m) {
    AffineVerdict<K> out;
    out.residual = r;
    if (!r.is_polynomial()) return out;
    const std::array<MPoly<K>, 3> basis{MPoly<K>(2, K(1)), m.mu1, m.mu2};
    std::map<std::vector<int>, size_t> mono;
    auto collect = [&](const MPoly<K>& q) {
        for (const auto& [e, c] : q.terms()) mono.emplace(e, mono.size());
    };
    collect(r.num());
    for (const auto& b : basis) collect(b);
    Matrix<K> lhs(mono.size(), 3);
    std::vector<K> rhs(mono.size(), K(0));
    for (const auto& [e, row] : mono) {
        for (size_t j = 0; j < 3; ++j) lhs(row, j) = basis[j].coeff(e);
        rhs[row] = r.num().coeff(e);
    }
    auto sol = lhs.solve_general(rhs);
    if (!sol.consistent) return out;
    out.is_affine = true;
    for (size_t j = 0; j < 3; ++j) out.coeffs[j] = sol.particular[j];
    out.residual = m.lift(MPoly<K>(2));
    return out;
}

template <class K>
struct TwinCertificate {
    AffinePotential<K> f;                                 // normalized: max |coefficient| = 1, f > 0 on P
    std::vector<std::pair<std::string, K>> conditions;    // the twin conditions, all zero
    bool positive = false;
    ChartFrac<K> weighted;                                // Scal_{f,4}
    std::array<K, 3> weighted_coeffs{K(0), K(0), K(0)};
    std::string gauge;
};

namespace detail {

template <class K>
K abs_of(const K& v) { return sign_of(v) < 0 ? -v : v; }

// Positive rescaling with the largest coefficient magnitude equal to 1; empty when f changes sign on P.
template <class K>
std::optional<AffinePotential<K>> normalize_potential(const ToricMetricData<K>& m, AffinePotential<K> f) {
    int s = vertex_sign(m, f);
    if (s == 0) return std::nullopt;
    K big = abs_of(f.lambda);
    for (const K& c : {f.c1, f.c2})
        if (abs_of(c) > big) big = abs_of(c);
    K k = K(s) / big;
    return AffinePotential<K>{f.lambda * k, f.c1 * k, f.c2 * k};
}

}  // namespace detail

// Twin (g, f) of (g, 1) for an extremal ansatz; empty when only constants work or f cannot be positive.
// Throws std::invalid_argument for non-extremal input.
template <class K>
std::optional<TwinCertificate<K>> find_twin(const ToricAnsatz<K>& a) {
    auto m = metric_data(a);
    if (!affine_in_moments(m.scal, m).is_affine) throw std::invalid_argument("ansatz is not extremal");

    AffinePotential<K> f{K(0), K(0), K(0)};
    std::vector<std::pair<std::string, K>> cond;
    auto cond_of = [&](const AffinePotential<K>& g) {
        switch (a.kind) {
            case AnsatzKind::Calabi:
                return std::vector<std::pair<std::string, K>>{{"A3*lambda - 2*c1*A4", a.a(3) * g.lambda - K(2) * g.c1 * a.a(4)},
                                                              {"c2", g.c2}};
            case AnsatzKind::Orthotoric:
                return std::vector<std::pair<std::string, K>>{
                    {"lambda*(A3+B3) - 2*c1*(A4+B4)", g.lambda * (a.a(3) + a.b(3)) - K(2) * g.c1 * (a.a(4) + a.b(4))},
                    {"c2", g.c2}};
            default: {
                K s = a.a(1) + a.b(1);
                return std::vector<std::pair<std::string, K>>{
                    {"A0*c2 - B0*c1", a.a(0) * g.c2 - a.b(0) * g.c1},
                    {"3*lambda*(B0*c1 + A0*c2) - 2*(A1+B1)*c1*c2", K(3) * g.lambda * (a.b(0) * g.c1 + a.a(0) * g.c2) - K(2) * s * g.c1 * g.c2},
                    {"c1*(3*A0*lambda - c1*(A1+B1))", g.c1 * (K(3) * a.a(0) * g.lambda - g.c1 * s)},
                    {"c2*(3*B0*lambda - c2*(A1+B1))", g.c2 * (K(3) * a.b(0) * g.lambda - g.c2 * s)}};
            }
        }
    };

    switch (a.kind) {
        case AnsatzKind::Calabi:
            // A3 lambda = 2 c1 A4 with c2 = 0; c1 = 0 is the trivial solution.
            if (is_zero(a.a(3))) return std::nullopt;
            f = {K(2) * a.a(4) / a.a(3), K(1), K(0)};
            break;
        case AnsatzKind::Orthotoric: {
            K p = a.a(3) + a.b(3), q = a.a(4) + a.b(4);
            if (is_zero(p)) return std::nullopt;
            f = {K(2) * q / p, K(1), K(0)};
            break;
        }
        case AnsatzKind::Product: {
            K s = a.a(1) + a.b(1);
            if (!is_zero(a.a(0))) f = {s / (K(3) * a.a(0)), K(1), a.b(0) / a.a(0)};
            else if (!is_zero(a.b(0))) f = {s / (K(3) * a.b(0)), K(0), K(1)};
            else return std::nullopt;
            break;
        }
    }
    for (const auto& [name, v] : cond_of(f))
        if (!is_zero(v)) return std::nullopt;

    auto g = detail::normalize_potential(m, f);
    if (!g) return std::nullopt;
    TwinCertificate<K> out;
    out.f = *g;
    out.conditions = cond_of(out.f);
    out.positive = true;
    out.weighted = weighted_scal(m, out.f, 4);
    auto v = affine_in_moments(out.weighted, m);
    if (!v.is_affine) throw std::logic_error("twin condition holds but Scal_{f,4} is not affine");
    out.weighted_coeffs = v.coeffs;
    out.gauge = "positive scale with largest |coefficient| of f equal to 1";
    return out;
}

// Explicit cscS twin family on the Calabi trapezoid over [alpha1, alpha2] x [beta1, beta2].
template <class K>
QuadParams<K> cscs_family_params(const K& alpha1, const K& alpha2, const K& C, const K& beta1 = K(0), const K& beta2 = K(1)) {
    if (!(sign_of(alpha1) > 0 && alpha1 < alpha2 && sign_of(C) > 0 && sign_of(beta1) >= 0 && beta1 < beta2))
        throw std::invalid_argument("need 0 < alpha1 < alpha2, C > 0 and 0 <= beta1 < beta2");
    K q = alpha1 * alpha1 + K(3) * alpha1 * alpha2 + alpha2 * alpha2;
    K cb1 = -alpha1 * alpha1 * (alpha2 - alpha1) * C / (q * (beta2 - beta1));
    return {alpha1, alpha2, beta1, beta2, C, -alpha1 * alpha1 * C / (alpha2 * alpha2), cb1, -cb1};
}

template <class K>
struct CscsFamily {
    ToricAnsatz<K> ansatz;
    K scal;                          // 12(alpha1 + alpha2)/(alpha1^2 (alpha2 - alpha1) C)
    AffinePotential<K> potential;    // lambda = -1, c1 = (alpha1 + alpha2)/(alpha1 alpha2)
    std::optional<TwinCertificate<K>> twin;
    bool both_cscs = false;          // Scal constant, Scal_{f,4} = Scal f for the potential, twin on its ray
};

template <class K>
CscsFamily<K> cscs_twin_family(const K& alpha1, const K& alpha2, const K& C, const K& beta1 = K(0), const K& beta2 = K(1)) {
    CscsFamily<K> out{calabi_fit(cscs_family_params(alpha1, alpha2, C, beta1, beta2)), K(0), {}, {}, false};
    out.scal = K(12) * (alpha1 + alpha2) / (alpha1 * alpha1 * (alpha2 - alpha1) * C);
    out.potential = {K(-1), (alpha1 + alpha2) / (alpha1 * alpha2), K(0)};
    auto m = metric_data(out.ansatz);
    out.twin = find_twin(out.ansatz);
    if (!out.twin || !(m.scal == m.lift(MPoly<K>(2, out.scal)))) return out;
    // Scal_{f,4} is quadratic in f, so Scal_{f,4} = Scal f pins the scale of the potential.
    ChartFrac<K> target = m.lift(m.pullback(out.potential)).scaled(out.scal);
    K k = out.twin->f.c1 / out.potential.c1;
    bool same_ray = sign_of(k) > 0 && out.twin->f.lambda == k * out.potential.lambda && is_zero(out.twin->f.c2);
    out.both_cscs = same_ray && weighted_scal(m, out.potential, 4) == target;
    return out;
}

// Product data on [-alpha, alpha] x [-beta, beta] with A = (alpha^2 - x^2)/alpha and the quartic B(y; c).
template <class K>
ToricAnsatz<K> lebrun_ansatz(const K& alpha, const K& beta, const K& c) {
    if (sign_of(alpha) <= 0 || sign_of(beta) <= 0) throw std::invalid_argument("need alpha, beta > 0");
    K r = alpha * alpha + beta * beta, b2 = beta * beta, c2 = c * c;
    K D = K(3) * r * r - b2 * c2;
    if (!(b2 * c2 < r * r)) throw std::invalid_argument("need c^2 beta^2 < (alpha^2 + beta^2)^2");
    Poly<K> A({alpha, K(0), K(-1) / alpha});
    Poly<K> q({K(6) * alpha * r * r + (beta - alpha) * c2 * b2, K(0), -(alpha + beta) * c2});
    Poly<K> B = (Poly<K>({b2, K(0), K(-1)}) * q).scaled(K(1) / (K(2) * alpha * beta * D));
    QuadParams<K> p{-alpha, alpha, -beta, beta, K(1), K(-1), K(-1), K(1)};
    return explicit_ansatz(AnsatzKind::Product, p, A, B);
}

template <class K>
struct LebrunResult {
    ToricAnsatz<K> ansatz;
    AffinePotential<K> f;            // alpha^2 + beta^2 + c y
    ChartFrac<K> weighted;           // Scal_{f,4}
    K constant, slope;               // Scal_{f,4} = constant + slope y, from the engine
    K printed_constant, printed_slope;
    bool matches_printed = false;
    bool symmetric_in_c = false;     // B(y; c) = B(y; -c)
};

template <class K>
LebrunResult<K> product_lebrun(const K& alpha, const K& beta, const K& c) {
    LebrunResult<K> out{lebrun_ansatz(alpha, beta, c), {}, {}, K(0), K(0), K(0), K(0), false, false};
    K r = alpha * alpha + beta * beta, b2 = beta * beta, c2 = c * c;
    K den = alpha * beta * (K(3) * r * r - b2 * c2);
    out.f = {r, K(0), c};
    auto m = metric_data(out.ansatz);
    out.weighted = weighted_scal(m, out.f, 4);
    auto v = affine_in_moments(out.weighted, m);
    out.constant = v.coeffs[0];
    out.slope = v.coeffs[2];
    out.printed_constant = K(6) * ((alpha + beta) * r * r * r * r - K(6) * alpha * b2 * r * r * c2 + (alpha - beta) * b2 * b2 * c2 * c2) / den;
    out.printed_slope = K(-12) * c * r * ((K(2) * alpha - beta) * r * r + b2 * beta * c2) / den;
    out.matches_printed = v.is_affine && is_zero(v.coeffs[1]) && out.constant == out.printed_constant && out.slope == out.printed_slope;
    out.symmetric_in_c = lebrun_ansatz(alpha, beta, -c).B == out.ansatz.B;
    return out;
}

// c with Scal_{f,4} proportional to f: +-sqrt((beta - 5 alpha)/(beta - alpha)) (alpha^2 + beta^2)/beta, empty unless beta > 5 alpha.
std::vector<QuadraticSurd> lebrun_cscs_values(const Rational& alpha, const Rational& beta);

// (k1, k2, k3, k4) with sum k_i l_i = 0 for the lattice labels of the family with alpha1 = 1, alpha2 = alpha.
std::optional<std::array<mpz_class, 4>> lattice_labels(const Rational& alpha);

// l_i(u, v) = constant + a u + b v for the labelled trapezoid with alpha1 = 1, alpha2 = alpha, beta1 = 0.
std::array<std::array<Rational, 3>, 4> lattice_label_forms(const Rational& alpha, const Rational& C);

// Hirzebruch class x realized on [(1-x)/x, (1+x)/x] x [0, 1] with base curvature s > 0.
QuadParams<Rational> hirzebruch_calabi_params(const Rational& s, const Rational& x);

// Normalized fibre potential 1 + b z of a Calabi twin: b = x c1/(x lambda + c1).
Rational admissible_b(const AffinePotential<Rational>& f, const Rational& x);

// Text format, one record per line, '#' starts a comment:
//   type calabi|orthotoric|product
//   alpha a1 a2
//   beta b1 b2
//   labels Ca1 Ca2 Cb1 Cb2
//   degree 3|4            (product fit only)
//   A c0 c1 ...           (optional, ascending powers; requires B too)
//   B c0 c1 ...
struct AnsatzSpec {
    AnsatzKind kind = AnsatzKind::Calabi;
    QuadParams<Rational> params;
    int degree = 3;
    std::optional<RPoly> A, B;
};

AnsatzSpec parse_ansatz(std::istream& in);
AnsatzSpec load_ansatz(const std::string& path);

// Fitted or explicit ansatz; empty for an infeasible orthotoric system.
std::optional<ToricAnsatz<Rational>> build_ansatz(const AnsatzSpec& spec);

}  // namespace twins
