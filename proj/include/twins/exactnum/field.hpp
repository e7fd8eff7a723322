#pragma once

#include "twins/exactnum/interval.hpp"
#include "twins/exactnum/rational.hpp"
#include "twins/exactnum/surd.hpp"

#include <string>

namespace twins {

// Uniform helpers over the scalar fields used by the templates:
// Rational, QuadraticSurd and Interval.

inline bool is_zero(const Rational& v) { return v.is_zero(); }
inline bool is_zero(const QuadraticSurd& v) { return v.is_zero(); }
inline bool is_zero(const Interval& v) { return v.is_zero(); }

inline int sign_of(const Rational& v) { return v.sign(); }
inline int sign_of(const QuadraticSurd& v) { return v.sign(); }
inline int sign_of(const Interval& v) { return v.sign(); }

inline std::string to_string(const Rational& v) { return v.str(); }
inline std::string to_string(const QuadraticSurd& v) { return v.str(); }
inline std::string to_string(const Interval& v) { return v.str(); }

inline Interval to_interval(const Rational& v, const Rational& = Rational(0)) { return Interval(v); }
inline Interval to_interval(const QuadraticSurd& v, const Rational& width) { return v.enclose(width); }
inline Interval to_interval(const Interval& v, const Rational& = Rational(0)) { return v; }

template <class K>
K field_pow(const K& base, int e) {
    K r(1), b = base;
    if (e < 0) { b = K(1) / b; e = -e; }
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace twins
