#include "twins/exactnum/algebraic.hpp"

#include <algorithm>
#include <stdexcept>

namespace twins {

namespace {

RootInterval isolate_point(const RPoly& p, const QuadraticSurd& v) {
    Rational pad(1, 1L << 20);
    Interval box = v.enclose(pad);
    // Interval endpoints are rational, so the irrational v is never on one.
    for (const auto& r : isolate_real_roots(p, box.lo() - pad, box.hi() + pad))
        if (!r.is_exact() && QuadraticSurd(r.lo()) < v && v < QuadraticSurd(r.hi())) return r;
    throw std::logic_error("surd not found among the roots of its minimal polynomial");
}

RPoly surd_poly(const QuadraticSurd& v) {
    Rational c0, c1, c2;
    v.min_poly(c0, c1, c2);
    return RPoly{c0, c1, c2};
}

}  // namespace

Rational certification_width() { return Rational(1, 1000000000000L); }

RealAlgebraic::RealAlgebraic(const Rational& v) : root_(RPoly{-v, Rational(1)}, v, v), exact_(QuadraticSurd(v)) {}

RealAlgebraic::RealAlgebraic(const QuadraticSurd& v)
    : root_(v.is_rational() ? RootInterval(RPoly{-v.a(), Rational(1)}, v.a(), v.a()) : isolate_point(surd_poly(v), v)),
      exact_(v) {}

RealAlgebraic::RealAlgebraic(const RootInterval& r) : root_(r), exact_(r.exact_form()) {}

Rational RealAlgebraic::rational() const {
    if (!is_rational()) throw std::domain_error("algebraic number is irrational");
    return exact_->a();
}

Interval RealAlgebraic::enclose(const Rational& width) const {
    if (root_.is_exact()) return Interval(root_.lo());
    RootInterval r = root_.refine(width);
    return Interval(r.lo(), r.hi());
}

int RealAlgebraic::compare(const RealAlgebraic& o) const {
    if (root_.is_exact()) return -o.compare(root_.lo());
    if (o.root_.is_exact()) return compare(o.root_.lo());
    RPoly g = poly_gcd(root_.squarefree(), o.root_.squarefree());
    bool shared = g.degree() >= 1 && root_.is_root_of(g) && o.root_.is_root_of(g);
    RootInterval a = root_, b = o.root_;
    SturmChain gc(g.degree() >= 1 ? g : RPoly(Rational(1)));
    for (;;) {
        if (a.hi() < b.lo()) return -1;
        if (b.hi() < a.lo()) return 1;
        if (shared) {
            // Each interval holds exactly one root of g; they are equal iff the overlap holds one.
            Rational lo = std::max(a.lo(), b.lo()), hi = std::min(a.hi(), b.hi());
            int n = lo < hi ? gc.count_open(lo, hi) : 0;
            if (g(lo).is_zero()) ++n;
            if (hi != lo && g(hi).is_zero()) ++n;
            if (n > 0) return 0;
        }
        a = a.refine(a.width() / 2);
        b = b.refine(b.width() / 2);
        if (a.is_exact() || b.is_exact()) return RealAlgebraic(a).compare(RealAlgebraic(b));
    }
}

RealAlgebraic RealAlgebraic::mobius(const Rational& p, const Rational& q, const Rational& r, const Rational& t) const {
    if ((p * t - q * r).is_zero()) throw std::domain_error("degenerate Mobius map");
    RPoly den{t, r};
    if (sign_of(den) == 0) throw std::domain_error("Mobius denominator vanishes");
    if (exact_) {
        QuadraticSurd v = (QuadraticSurd(p) * *exact_ + QuadraticSurd(q)) / (QuadraticSurd(r) * *exact_ + QuadraticSurd(t));
        return RealAlgebraic(v);
    }
    // v = (t*y - q) / (p - r*y) inverts y = (p*v + q)/(r*v + t).
    const RPoly& f = root_.squarefree();
    int n = f.degree();
    RPoly num{-q, t}, dd{p, -r}, acc;
    for (int i = 0; i <= n; ++i) acc += (poly_pow(num, i) * poly_pow(dd, n - i)).scaled(f.coeff(i));
    RootInterval cur = root_;
    if (!r.is_zero())
        while (Interval(cur.lo(), cur.hi()).contains(-t / r)) cur = cur.refine(cur.width() / 2);
    auto image = [&](const Rational& v) { return (p * v + q) / (r * v + t); };
    Rational a = image(cur.lo()), b = image(cur.hi());
    if (b < a) std::swap(a, b);
    return RealAlgebraic(RootInterval(acc, a, b));
}

std::vector<QuadraticSurd> real_quadratic_roots(const RPoly& p) {
    if (p.degree() < 1 || p.degree() > 2) throw std::invalid_argument("degree 1 or 2 expected");
    if (p.degree() == 1) return {QuadraticSurd(-p.coeff(0) / p.coeff(1))};
    Rational a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    Rational disc = b * b - 4 * a * c;
    if (disc.sign() < 0) return {};
    if (disc.is_zero()) return {QuadraticSurd(-b / (2 * a))};
    QuadraticSurd r = QuadraticSurd::sqrt(disc);
    QuadraticSurd u = (QuadraticSurd(-b) - r) / QuadraticSurd(2 * a), v = (QuadraticSurd(-b) + r) / QuadraticSurd(2 * a);
    if (v < u) std::swap(u, v);
    return {u, v};
}

std::string tagged_exact(const Rational& v) { return "exact:" + v.str(); }

std::string tagged_interval(const Interval& iv, int digits) {
    Rational hw = iv.width() / 2;
    // Rounding of the midpoint adds at most half a unit in the last place.
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::max(digits, 0)));
    Rational bound = hw + Rational(mpz_class(1), scale * 2);
    int e = 0;
    Rational unit(1);
    while (unit * 10 <= bound) { unit *= 10; ++e; }
    while (unit > bound) { unit /= 10; --e; }
    mpz_class lead = (bound / unit).ceil();
    if (lead == 10) { lead = 1; ++e; }
    std::string hws = lead.get_str() + "e" + std::to_string(e);
    return "interval:" + iv.mid().decimal(digits) + "±" + hws;
}

std::string RealAlgebraic::tagged(int digits) const {
    if (is_rational()) return tagged_exact(rational());
    return tagged_interval(enclose(certification_width()), digits);
}

}  // namespace twins
