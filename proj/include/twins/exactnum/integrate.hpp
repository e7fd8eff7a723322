#pragma once

#include "twins/exactnum/ratfunc.hpp"

#include <stdexcept>

namespace twins {

// Thrown when an integrand would produce a logarithmic term.
struct UnsupportedIntegrand : std::domain_error {
    using std::domain_error::domain_error;
};

// Antiderivative of N(t) / (c t + 1)^k, as a rational function of t with zero
// value at t = 0 when c = 0. Requires deg N <= k - 2 when c != 0, since the
// substitution u = c t + 1 then yields only negative powers of u.
template <class K>
RationalFunction<K> antiderivative_power(const Poly<K>& n, const K& c, int k) {
    if (k < 0) throw std::invalid_argument("negative power");
    if (is_zero(c)) return RationalFunction<K>(n.integral());
    if (n.degree() > k - 2) throw UnsupportedIntegrand("numerator degree exceeds k - 2; a logarithm would arise");
    // N((u - 1)/c) as a polynomial in u.
    Poly<K> sub = n.compose(Poly<K>{K(-1) / c, K(1) / c});
    // sum_j m_j u^(j-k+1)/(j-k+1), written over u^(k-1).
    Poly<K> top;
    for (int j = 0; j <= sub.degree(); ++j) {
        K m = sub.coeff(j);
        if (is_zero(m)) continue;
        top += Poly<K>::monomial(m / K(j - k + 1), j);
    }
    Poly<K> u{K(1), c};
    Poly<K> num = top.compose(u);
    Poly<K> den = poly_pow(u, k - 1).scaled(c);
    return RationalFunction<K>(num, den);
}

template <class K>
void require_pole_outside(const K& c) {
    // Pole at t = -1/c lies in [-1, 1] iff |c| >= 1.
    if (is_zero(c)) return;
    K one(1);
    if (sign_of(c - one) >= 0 || sign_of(c + one) <= 0) throw std::domain_error("pole inside the integration interval");
}

// Exact value of the integral of N(t)/(c t + 1)^k over [-1, 1].
template <class K>
K integrate_power(const Poly<K>& n, const K& c, int k) {
    require_pole_outside(c);
    RationalFunction<K> g = antiderivative_power(n, c, k);
    return g(K(1)) - g(K(-1));
}

// Integral of N(t)/(c t + 1)^k over [-1, z], as a rational function of z.
template <class K>
RationalFunction<K> integrate_power_upto(const Poly<K>& n, const K& c, int k) {
    require_pole_outside(c);
    RationalFunction<K> g = antiderivative_power(n, c, k);
    return g - RationalFunction<K>(g(K(-1)));
}

// Splits a rational function whose denominator is a power of one linear factor
// into (N, c, k) with f = N / (c t + 1)^k. Throws when f has another shape.
template <class K>
void split_power_denominator(const RationalFunction<K>& f, Poly<K>& n, K& c, int& k) {
    const Poly<K>& d = f.den();
    k = d.degree();
    if (k == 0) {
        n = f.num();
        c = K(0);
        return;
    }
    // Monic d = (t - t0)^k with t0 = -d_{k-1}/k.
    K t0 = -d.coeff(k - 1) / K(k);
    if (!(poly_pow(Poly<K>{-t0, K(1)}, k) == d)) throw UnsupportedIntegrand("denominator is not a power of a linear factor");
    if (is_zero(t0)) throw UnsupportedIntegrand("pole at t = 0");
    c = K(-1) / t0;
    // (t - t0)^k = (c t + 1)^k / c^k.
    n = f.num().scaled(field_pow(c, k));
}

template <class K>
K integrate(const RationalFunction<K>& f) {
    Poly<K> n;
    K c;
    int k;
    split_power_denominator(f, n, c, k);
    return integrate_power(n, c, k);
}

template <class K>
RationalFunction<K> integrate_upto(const RationalFunction<K>& f) {
    Poly<K> n;
    K c;
    int k;
    split_power_denominator(f, n, c, k);
    return integrate_power_upto(n, c, k);
}

}  // namespace twins
