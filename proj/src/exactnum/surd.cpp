#include "twins/exactnum/surd.hpp"

#include "twins/exactnum/interval.hpp"

#include <stdexcept>

namespace twins {

namespace {

// Pulls square factors out of a positive integer radicand: returns k with n = k^2 * n'.
mpz_class extract_square(mpz_class& n) {
    mpz_class k = 1;
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        n = 1;
        return r;
    }
    for (unsigned long p = 2; p < 20000; ++p) {
        mpz_class pp = p * p;
        if (pp > n) break;
        while (mpz_divisible_p(n.get_mpz_t(), pp.get_mpz_t())) {
            n /= pp;
            k *= p;
        }
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        k *= r;
        n = 1;
    }
    return k;
}

}  // namespace

QuadraticSurd::QuadraticSurd(const Rational& a, const Rational& b, const Rational& d) : a_(a) {
    if (d.sign() < 0) throw std::domain_error("negative radicand");
    if (b.is_zero() || d.is_zero()) return;
    // sqrt(p/q) = sqrt(p*q)/q
    mpz_class n = d.num() * d.den();
    Rational coef = b / Rational(d.den());
    mpz_class k = extract_square(n);
    coef *= Rational(k);
    if (n == 1) {
        a_ += coef;
        return;
    }
    b_ = coef;
    d_ = Rational(n);
}

QuadraticSurd QuadraticSurd::sqrt(const Rational& d) { return QuadraticSurd(Rational(0), Rational(1), d); }

int QuadraticSurd::sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    Rational lhs = a_ * a_, rhs = b_ * b_ * d_;
    if (lhs > rhs) return sa;
    if (lhs < rhs) return sb;
    return 0;
}

void QuadraticSurd::unify(QuadraticSurd& o) {
    if (is_rational() || o.is_rational() || d_ == o.d_) return;
    Rational t;
    if (rational_sqrt(d_ / o.d_, t)) {
        b_ *= t;
        d_ = o.d_;
        return;
    }
    throw std::domain_error("incompatible radicands " + d_.str() + " and " + o.d_.str());
}

QuadraticSurd& QuadraticSurd::operator+=(const QuadraticSurd& o) {
    QuadraticSurd rhs = o;
    unify(rhs);
    Rational d = is_rational() ? rhs.d_ : d_;
    a_ += rhs.a_;
    b_ += rhs.b_;
    d_ = b_.is_zero() ? Rational(0) : d;
    return *this;
}

QuadraticSurd& QuadraticSurd::operator*=(const QuadraticSurd& o) {
    QuadraticSurd rhs = o;
    unify(rhs);
    Rational d = is_rational() ? rhs.d_ : d_;
    Rational na = a_ * rhs.a_ + b_ * rhs.b_ * d;
    Rational nb = a_ * rhs.b_ + b_ * rhs.a_;
    a_ = na;
    b_ = nb;
    d_ = b_.is_zero() ? Rational(0) : d;
    return *this;
}

QuadraticSurd QuadraticSurd::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero surd");
    if (is_rational()) return QuadraticSurd(a_.inverse());
    Rational n = a_ * a_ - b_ * b_ * d_;
    return QuadraticSurd(a_ / n, -b_ / n, d_, raw_tag{});
}

void QuadraticSurd::min_poly(Rational& c0, Rational& c1, Rational& c2) const {
    if (is_rational()) {
        c0 = -a_;
        c1 = 1;
        c2 = 0;
        return;
    }
    c2 = 1;
    c1 = -2 * a_;
    c0 = a_ * a_ - b_ * b_ * d_;
}

int QuadraticSurd::compare(const QuadraticSurd& x, const QuadraticSurd& y) {
    Rational t;
    if (x.compatible(y) || rational_sqrt(x.d_ / y.d_, t)) return (x - y).sign();
    // Distinct square-free radicands: never equal, so enclosures separate eventually.
    for (Rational w(1, 1024);; w /= 1024) {
        Interval a = x.enclose(w), b = y.enclose(w);
        if (a.hi() < b.lo()) return -1;
        if (b.hi() < a.lo()) return 1;
    }
}

Interval sqrt_enclosure(const Rational& r, const Rational& width) {
    if (r.sign() < 0) throw std::domain_error("sqrt of negative");
    Rational exact;
    if (rational_sqrt(r, exact)) return Interval(exact);
    if (width.sign() <= 0) throw std::domain_error("non-positive enclosure width");
    mpz_class n = r.num() * r.den();
    mpz_class d = r.den();
    unsigned long m = 0;
    while (Rational(mpz_class(1), d * (mpz_class(1) << static_cast<mp_bitcnt_t>(m))) > width) ++m;
    mpz_class scaled = n << static_cast<mp_bitcnt_t>(2 * m);
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    mpz_class denom = d * (mpz_class(1) << static_cast<mp_bitcnt_t>(m));
    return Interval(Rational(s, denom), Rational(mpz_class(s + 1), denom));
}

Interval QuadraticSurd::enclose(const Rational& width) const {
    if (is_rational()) return Interval(a_);
    Interval root = sqrt_enclosure(d_, width / b_.abs());
    return Interval(a_) + Interval(b_) * root;
}

std::string QuadraticSurd::str() const {
    if (is_rational()) return a_.str();
    std::string out;
    if (!a_.is_zero()) out = a_.str();
    Rational mag = b_.abs();
    if (b_.sign() < 0) out += "-";
    else if (!out.empty()) out += "+";
    if (mag != Rational(1)) out += mag.str() + "*";
    out += "sqrt(" + d_.str() + ")";
    return out;
}

}  // namespace twins
