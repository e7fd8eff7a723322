#include "twins/exactnum/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace twins {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1) / q_);
}

Rational Rational::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

mpz_class Rational::floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

mpz_class Rational::ceil() const {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

mpz_class parse_int(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw std::invalid_argument("malformed integer");
    mpz_class v(std::string(s), 10);
    return neg ? mpz_class(-v) : v;
}

Rational parse_decimal(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string_view::npos) {
        mpz_class e = parse_int(s.substr(epos + 1));
        if (!e.fits_slong_p() || abs(e) > 4096) throw std::invalid_argument("exponent out of range");
        exp10 = e.get_si();
        s = s.substr(0, epos);
    }
    auto dot = s.find('.');
    std::string digits;
    if (dot == std::string_view::npos) {
        digits = std::string(s);
    } else {
        std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty() && fp.empty()) throw std::invalid_argument("malformed decimal");
        if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
            throw std::invalid_argument("malformed decimal");
        digits = std::string(ip) + std::string(fp);
        exp10 -= static_cast<long>(fp.size());
    }
    if (!all_digits(digits)) throw std::invalid_argument("malformed decimal");
    mpz_class n(digits, 10);
    if (neg) n = -n;
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    return exp10 < 0 ? Rational(n, p) : Rational(mpz_class(n * p));
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty rational");
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        mpz_class n = parse_int(text.substr(0, slash));
        std::string_view ds = text.substr(slash + 1);
        if (!ds.empty() && ds.front() == '+') ds.remove_prefix(1);
        if (!all_digits(ds)) throw std::invalid_argument("malformed denominator");
        mpz_class d(std::string(ds), 10);
        if (d == 0) throw std::invalid_argument("zero denominator");
        return Rational(n, d);
    }
    if (text.find_first_of(".eE") != std::string_view::npos) return parse_decimal(text);
    return Rational(parse_int(text));
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
    if (digits < 0) digits = 0;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class n = ::abs(q_.get_num()) * scale * 2 + q_.get_den();
    mpz_class d = q_.get_den() * 2;
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    std::string s = r.get_str();
    if (digits > 0) {
        if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<size_t>(digits + 1) - s.size(), '0');
        s.insert(s.size() - static_cast<size_t>(digits), ".");
    }
    bool zero = (r == 0);
    return (sign() < 0 && !zero ? "-" : "") + s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational rational_from_double(double v) {
    if (!std::isfinite(v)) throw std::domain_error("non-finite double");
    return Rational(mpq_class(v));
}

bool rational_sqrt(const Rational& r, Rational& root) {
    if (r.sign() < 0) return false;
    mpz_class n = r.num(), d = r.den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    root = Rational(sn, sd);
    return true;
}

}  // namespace twins
