#include "twins/exactnum/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace twins {

namespace {

int sgn(const Rational& v) { return v.sign(); }

int count_variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

SturmChain::SturmChain(const RPoly& p) {
    RPoly base = squarefree_part(p);
    seq_.push_back(base);
    if (base.degree() <= 0) return;
    seq_.push_back(base.derivative());
    while (seq_.back().degree() > 0) {
        RPoly r = seq_[seq_.size() - 2].divmod(seq_.back()).second;
        if (r.is_zero()) break;
        seq_.push_back(-r);
    }
}

int SturmChain::variations(const Rational& at) const {
    std::vector<int> s;
    s.reserve(seq_.size());
    for (const auto& q : seq_) s.push_back(sgn(q(at)));
    return count_variations(s);
}

int SturmChain::variations_at_infinity(int dir) const {
    std::vector<int> s;
    for (const auto& q : seq_) {
        int lead = sgn(q.leading());
        if (dir < 0 && (q.degree() % 2 == 1)) lead = -lead;
        s.push_back(lead);
    }
    return count_variations(s);
}

int SturmChain::count_open(const Bound& lo, const Bound& hi) const {
    if (seq_.front().degree() <= 0) return 0;
    int vlo = lo ? variations(*lo) : variations_at_infinity(-1);
    int vhi = hi ? variations(*hi) : variations_at_infinity(+1);
    int n = vlo - vhi;
    if (hi && seq_.front()(*hi).is_zero()) --n;
    return n;
}

Rational cauchy_bound(const RPoly& p) {
    if (p.degree() < 1) return Rational(1);
    Rational m(0), lead = p.leading();
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, (p.coeff(i) / lead).abs());
    return m + 1;
}

RPoly primitive_integer(const RPoly& p) {
    if (p.is_zero()) return p;
    mpz_class l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    std::vector<Rational> v;
    mpz_class g = 0;
    for (const auto& c : p.coeffs()) {
        Rational s = c * Rational(l);
        v.push_back(s);
        mpz_class n = s.num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    if (v.back().sign() < 0) g = -g;
    for (auto& c : v) c /= Rational(g);
    return RPoly(std::move(v));
}

RootInterval::RootInterval(RPoly poly, Rational lo, Rational hi)
    : poly_(std::move(poly)), sqf_(squarefree_part(poly_)), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) throw std::invalid_argument("root interval with hi < lo");
    if (lo_ == hi_) {
        if (!sqf_(lo_).is_zero()) throw std::invalid_argument("degenerate root interval is not a root");
        return;
    }
    SturmChain chain(sqf_);
    if (chain.count_open(lo_, hi_) != 1) throw std::invalid_argument("interval does not isolate exactly one root");
}

bool RootInterval::multiple() const {
    RPoly g = poly_gcd(poly_, poly_.derivative());
    if (g.degree() < 1) return false;
    return is_root_of(g);
}

RootInterval RootInterval::refine(const Rational& tol) const {
    if (tol.sign() <= 0) throw std::invalid_argument("refinement tolerance must be positive");
    Rational lo = lo_, hi = hi_;
    if (lo == hi) return *this;
    if (sqf_.degree() == 1) {
        Rational r = -sqf_.coeff(0) / sqf_.coeff(1);
        return RootInterval(poly_, r, r);
    }
    int slo = sgn(sqf_(lo)), shi = sgn(sqf_(hi));
    SturmChain chain(sqf_);
    while (hi - lo > tol) {
        Rational m = (lo + hi) / 2;
        int sm = sgn(sqf_(m));
        if (sm == 0) return RootInterval(poly_, m, m);
        bool left;
        if (slo != 0 && shi != 0) left = (sm != slo);
        else left = chain.count_open(lo, m) == 1;
        if (left) {
            hi = m;
            shi = sm;
        } else {
            lo = m;
            slo = sm;
        }
    }
    RootInterval r = *this;
    r.lo_ = lo;
    r.hi_ = hi;
    return r;
}

int RootInterval::sign_of(const RPoly& q) const {
    if (q.is_zero()) return 0;
    if (is_exact()) return sgn(q(lo_));
    RPoly g = poly_gcd(sqf_, q);
    if (g.degree() >= 1 && SturmChain(g).count_open(lo_, hi_) > 0) return 0;
    SturmChain qc(q);
    RootInterval cur = *this;
    for (;;) {
        int inside = qc.count_open(cur.lo_, cur.hi_);
        if (q(cur.lo_).is_zero()) ++inside;
        if (q(cur.hi_).is_zero()) ++inside;
        if (inside == 0) return sgn(q(cur.mid()));
        cur = cur.refine(cur.width() / 2);
        if (cur.is_exact()) return sgn(q(cur.lo_));
    }
}

int RootInterval::compare(const Rational& v) const { return sign_of(RPoly{-v, Rational(1)}); }

std::vector<Rational> rational_roots(const RPoly& p) {
    if (p.is_zero()) throw std::domain_error("rational roots of the zero polynomial");
    std::vector<Rational> out;
    RPoly f = primitive_integer(squarefree_part(p));
    if (f.degree() < 1) return out;
    Rational an = f.leading().abs();
    for (const auto& r : isolate_real_roots(f)) {
        if (r.is_exact()) {
            out.push_back(r.lo());
            continue;
        }
        RootInterval t = r.refine(Rational(1) / (an * 4));
        Rational scaled = t.mid() * an;
        for (const mpz_class& k : {scaled.floor(), scaled.ceil()}) {
            Rational cand = Rational(k) / an;
            if (f(cand).is_zero() && t.lo() < cand && cand < t.hi()) {
                out.push_back(cand);
                break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<QuadraticSurd> RootInterval::exact_form() const {
    if (is_exact()) return QuadraticSurd(lo_);
    RPoly f = sqf_;
    for (const auto& r : rational_roots(f)) {
        if (lo_ < r && r < hi_) return QuadraticSurd(r);
        f = f.exact_div(RPoly{-r, Rational(1)});
    }
    if (f.degree() != 2) return std::nullopt;
    Rational a = f.coeff(2), b = f.coeff(1), c = f.coeff(0);
    Rational disc = b * b - 4 * a * c;
    if (disc.sign() < 0) return std::nullopt;
    for (int s : {-1, 1}) {
        QuadraticSurd root = (QuadraticSurd(-b) + QuadraticSurd(Rational(0), Rational(s), disc)) / QuadraticSurd(2 * a);
        if (QuadraticSurd(lo_) < root && root < QuadraticSurd(hi_)) return root;
    }
    return std::nullopt;
}

std::vector<RootInterval> isolate_real_roots(const RPoly& p, const Bound& lo, const Bound& hi) {
    if (p.is_zero()) throw std::domain_error("root isolation of the zero polynomial");
    std::vector<RootInterval> out;
    RPoly sqf = squarefree_part(p);
    if (sqf.degree() < 1) return out;
    if (lo && hi && !(*lo < *hi)) return out;
    SturmChain chain(sqf);
    Rational bound = cauchy_bound(sqf);
    Rational a = lo ? *lo : -bound;
    Rational b = hi ? *hi : bound;
    if (lo && !hi && b <= a) return out;
    if (hi && !lo && a >= b) return out;
    if (sqf.degree() == 1) {
        Rational r = -sqf.coeff(0) / sqf.coeff(1);
        if (a < r && r < b) out.emplace_back(p, r, r);
        return out;
    }
    struct Job { Rational a, b; };
    std::vector<Job> stack{{a, b}};
    while (!stack.empty()) {
        Job j = stack.back();
        stack.pop_back();
        int n = chain.count_open(j.a, j.b);
        if (n == 0) continue;
        if (n == 1) {
            out.emplace_back(p, j.a, j.b);
            continue;
        }
        Rational m = (j.a + j.b) / 2;
        if (sqf(m).is_zero()) out.emplace_back(p, m, m);
        stack.push_back({m, j.b});
        stack.push_back({j.a, m});
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo() < y.lo(); });
    return out;
}

}  // namespace twins
