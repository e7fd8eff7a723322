#pragma once

#include "twins/exactnum/polynomial.hpp"

namespace twins {

// Univariate rational function num/den with gcd(num, den) = 1 and monic den.
template <class K>
class RationalFunction {
public:
    RationalFunction() : num_(), den_(K(1)) {}
    RationalFunction(const Poly<K>& p) : num_(p), den_(K(1)) {}
    RationalFunction(const K& c) : num_(c), den_(K(1)) {}
    RationalFunction(const Poly<K>& n, const Poly<K>& d) : num_(n), den_(d) { normalize(); }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    Poly<K> to_poly() const {
        if (!is_polynomial()) throw std::domain_error("rational function is not a polynomial");
        return num_;
    }

    RationalFunction operator-() const { return RationalFunction(-num_, den_, normalized_tag{}); }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction derivative() const {
        return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    K operator()(const K& t) const {
        K d = den_(t);
        if (twins::is_zero(d)) throw std::domain_error("pole of rational function");
        return num_(t) / d;
    }

    std::string str(const std::string& var = "t") const {
        if (is_polynomial()) return num_.str(var);
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }

private:
    struct normalized_tag {};
    RationalFunction(const Poly<K>& n, const Poly<K>& d, normalized_tag) : num_(n), den_(d) {}
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<K>(K(1));
            return;
        }
        Poly<K> g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
        K lead = den_.leading();
        num_ = num_.scaled(K(1) / lead);
        den_ = den_.monic();
    }
    Poly<K> num_, den_;
};

}  // namespace twins
