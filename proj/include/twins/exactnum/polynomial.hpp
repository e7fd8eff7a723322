#pragma once

#include "twins/exactnum/field.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twins {

// Dense univariate polynomial over a field K, coefficients indexed by degree.
// The coefficient vector is kept trimmed so the last entry is nonzero.
template <class K>
class Poly {
public:
    Poly() = default;
    Poly(const K& c) : c_{c} { trim(); }
    Poly(int c) : c_{K(c)} { trim(); }
    Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

    static Poly monomial(const K& c, int deg) {
        std::vector<K> v(static_cast<size_t>(deg) + 1, K(0));
        v.back() = c;
        return Poly(std::move(v));
    }
    // The identity polynomial t.
    static Poly var() { return monomial(K(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    K coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)] : K(0); }
    K leading() const { return c_.empty() ? K(0) : c_.back(); }
    const std::vector<K>& coeffs() const { return c_; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) { return *this += -o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return (a - b).is_zero(); }

    Poly scaled(const K& s) const {
        Poly r = *this;
        for (auto& v : r.c_) v *= s;
        r.trim();
        return r;
    }

    // Quotient and remainder; throws on division by the zero polynomial.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        Poly rem = *this;
        if (degree() < d.degree()) return {Poly(), rem};
        std::vector<K> q(static_cast<size_t>(degree() - d.degree() + 1), K(0));
        K inv = K(1) / d.leading();
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            int shift = rem.degree() - d.degree();
            K f = rem.leading() * inv;
            q[static_cast<size_t>(shift)] = f;
            for (int i = 0; i <= d.degree(); ++i) rem.c_[static_cast<size_t>(i + shift)] -= f * d.c_[static_cast<size_t>(i)];
            rem.c_.pop_back();
            rem.trim();
        }
        return {Poly(std::move(q)), rem};
    }
    // Exact quotient; throws when the division leaves a remainder.
    Poly exact_div(const Poly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
        return q;
    }
    bool divisible_by(const Poly& d) const { return divmod(d).second.is_zero(); }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> r(c_.size() - 1, K(0));
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * K(static_cast<int>(i));
        return Poly(std::move(r));
    }

    // Antiderivative with zero constant term.
    Poly integral() const {
        std::vector<K> r(c_.size() + 1, K(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i + 1] = c_[i] / K(static_cast<int>(i + 1));
        return Poly(std::move(r));
    }

    K operator()(const K& t) const { return eval<K>(t); }

    // Horner evaluation in any type T that accepts K coefficients.
    template <class T>
    T eval(const T& t) const {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + T(*it);
        return acc;
    }

    // p(q(t)).
    Poly compose(const Poly& q) const {
        Poly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + Poly(*it);
        return acc;
    }

    Poly monic() const { return is_zero() ? *this : scaled(K(1) / leading()); }

    template <class K2>
    Poly<K2> convert() const {
        std::vector<K2> v;
        v.reserve(c_.size());
        for (const auto& x : c_) v.emplace_back(x);
        return Poly<K2>(std::move(v));
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const K& v = c_[static_cast<size_t>(i)];
            if (twins::is_zero(v)) continue;
            std::string term = "(" + to_string(v) + ")";
            if (i >= 1) term += "*" + var;
            if (i >= 2) term += "^" + std::to_string(i);
            if (!out.empty()) out += " + ";
            out += term;
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && twins::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<K> c_;
};

template <class K>
Poly<K> poly_pow(const Poly<K>& p, int e) {
    Poly<K> r(K(1)), b = p;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// Monic greatest common divisor; gcd(0, 0) = 0.
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        Poly<K> r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// p / gcd(p, p'): same roots, all simple.
template <class K>
Poly<K> squarefree_part(const Poly<K>& p) {
    if (p.degree() <= 0) return p;
    Poly<K> g = poly_gcd(p, p.derivative());
    return p.exact_div(g).monic();
}

}  // namespace twins
