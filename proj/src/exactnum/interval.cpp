#include "twins/exactnum/interval.hpp"

#include <algorithm>

namespace twins {

Interval::Interval(const Rational& lo, const Rational& hi) : lo_(lo), hi_(hi) {
    if (hi_ < lo_) throw std::invalid_argument("interval with hi < lo");
}

int Interval::sign() const {
    if (lo_.sign() > 0) return 1;
    if (hi_.sign() < 0) return -1;
    if (lo_.is_zero() && hi_.is_zero()) return 0;
    throw UndecidedSign("interval " + str() + " straddles zero");
}

bool Interval::is_zero() const {
    if (lo_.is_zero() && hi_.is_zero()) return true;
    if (lo_.sign() > 0 || hi_.sign() < 0) return false;
    throw UndecidedSign("zero test undecided on " + str());
}

Interval& Interval::operator*=(const Interval& o) {
    Rational p[4] = {lo_ * o.lo_, lo_ * o.hi_, hi_ * o.lo_, hi_ * o.hi_};
    lo_ = *std::min_element(p, p + 4);
    hi_ = *std::max_element(p, p + 4);
    return *this;
}

Interval& Interval::operator/=(const Interval& o) {
    if (o.lo_.sign() <= 0 && o.hi_.sign() >= 0) throw UndecidedSign("division by interval containing zero");
    return *this *= Interval(o.hi_.inverse(), o.lo_.inverse());
}

Interval Interval::hull(const Interval& o) const {
    return Interval(std::min(lo_, o.lo_), std::max(hi_, o.hi_));
}

}  // namespace twins
