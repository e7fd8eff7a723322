#include "twins/polytope/polytope.hpp"

namespace twins {

namespace {

using MP = MPoly<Rational>;

MP constant(size_t n, const Rational& v) { return MP(n, v); }

}  // namespace

MomentPolytope simplex_polytope(int n) {
    if (n < 1) throw std::invalid_argument("simplex dimension must be positive");
    const size_t k = static_cast<size_t>(n);
    MomentPolytope p;
    p.dimension = n;
    p.vertices.push_back(Point(k, Rational(-1)));
    for (size_t i = 0; i < k; ++i) {
        Point v(k, Rational(-1));
        v[i] = Rational(n);
        p.vertices.push_back(v);
    }
    p.labels.push_back({Rational(1), std::vector<Rational>(k, Rational(-1))});
    for (size_t i = 0; i < k; ++i) {
        std::vector<Rational> a(k, Rational(0));
        a[i] = Rational(1);
        p.labels.push_back({Rational(1), a});
    }
    return p;
}

SimplexModel simplex_model(int n) {
    if (n < 1) throw std::invalid_argument("simplex dimension must be positive");
    const size_t k = static_cast<size_t>(n);
    SimplexModel m;
    m.n = n;
    MP sum(k);
    for (size_t i = 0; i < k; ++i) sum += MP::var(k, i);
    m.labels.push_back(constant(k, Rational(1)) - sum);
    for (size_t i = 0; i < k; ++i) m.labels.push_back(constant(k, Rational(1)) + MP::var(k, i));

    Rational inv(2, n + 1);
    m.H.assign(k, std::vector<MP>(k, MP(k)));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            const MP &li = m.labels[i + 1], &lj = m.labels[j + 1];
            m.H[i][j] = -(li * lj).scaled(inv);
            if (i == j) m.H[i][j] += li.scaled(Rational(2));
        }

    for (size_t j = 0; j < k; ++j) {
        MP lap(k);
        for (size_t i = 0; i < k; ++i) lap -= m.H[i][j].derivative(i);
        m.laplacian_x.push_back(lap);
        MP rest = lap - MP::var(k, j).scaled(Rational(2));
        if (!rest.is_constant()) throw std::logic_error("coordinate is not an eigenfunction of the Laplacian");
        m.barycenter.push_back(-rest.constant_term() / 2);
    }

    // On F_k: H(u_k, .) = 0 and d H(u_k, u_k) = 2 u_k.
    m.boundary_ok = true;
    for (size_t f = 0; f <= k; ++f) {
        std::vector<Rational> u(k, Rational(0));
        if (f == 0) {
            u.assign(k, Rational(-1));
        } else {
            u[f - 1] = Rational(1);
        }
        // Restrict to l_f = 0 by eliminating one coordinate.
        size_t elim = f == 0 ? k - 1 : f - 1;
        MP repl = f == 0 ? constant(k, Rational(1)) - (sum - MP::var(k, elim)) : constant(k, Rational(-1));
        auto restrict_ = [&](const MP& q) { return q.substitute(elim, repl); };
        MP huu(k);
        for (size_t j = 0; j < k; ++j) {
            MP hu(k);
            for (size_t i = 0; i < k; ++i) hu += m.H[i][j].scaled(u[i]);
            if (!restrict_(hu).is_zero()) m.boundary_ok = false;
            huu += hu.scaled(u[j]);
        }
        for (size_t j = 0; j < k; ++j)
            if (!(restrict_(huu.derivative(j)) == constant(k, 2 * u[j]))) m.boundary_ok = false;
    }
    return m;
}

MPoly<Rational> simplex_laplacian(const SimplexModel& m, const MPoly<Rational>& h) {
    const size_t k = static_cast<size_t>(m.n);
    MP out(k);
    for (size_t i = 0; i < k; ++i) {
        MP flux(k);
        for (size_t j = 0; j < k; ++j) flux += m.H[i][j] * h.derivative(j);
        out -= flux.derivative(i);
    }
    return out;
}

MPoly<Rational> simplex_gradient_norm(const SimplexModel& m, const MPoly<Rational>& h) {
    const size_t k = static_cast<size_t>(m.n);
    MP out(k);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) out += m.H[i][j] * h.derivative(i) * h.derivative(j);
    return out;
}

SimplexTwinCheck simplex_twin_check(int n, const Rational& lambda, const std::vector<Rational>& v) {
    const size_t k = static_cast<size_t>(n);
    if (v.size() != k) throw std::invalid_argument("potential dimension mismatch");
    MomentPolytope p = simplex_polytope(n);
    AffineLabel fl{lambda, v};
    for (const auto& vert : p.vertices)
        if (fl(vert).sign() <= 0) throw std::domain_error("potential is not positive on the simplex");
    SimplexModel m = simplex_model(n);
    MP f = constant(k, lambda);
    for (size_t i = 0; i < k; ++i) f += MP::var(k, i).scaled(v[i]);
    SimplexTwinCheck out;
    out.expression = (f * f).scaled(Rational(2 * n)) - (f * simplex_laplacian(m, f)).scaled(Rational(2 * (n + 1))) -
                     simplex_gradient_norm(m, f).scaled(Rational((n + 1) * (n + 2)));
    out.is_affine = out.expression.total_degree() <= 1;
    out.constant = out.expression.constant_term();
    for (size_t i = 0; i < k; ++i) {
        MP::Exp e(k, 0);
        e[i] = 1;
        out.linear.push_back(out.expression.coeff(e));
    }
    return out;
}

}  // namespace twins
