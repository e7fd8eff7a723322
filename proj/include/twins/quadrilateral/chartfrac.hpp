#pragma once

// Rational functions num / base^power in the chart (x, y), with one fixed base polynomial.

#include "twins/exactnum/mpoly.hpp"

namespace twins {

template <class K>
class ChartFrac {
public:
    using MP = MPoly<K>;

    ChartFrac() : num_(2), base_(2, K(1)) {}
    ChartFrac(MP num, MP base, int power = 0) : num_(std::move(num)), base_(std::move(base)), power_(power) {
        if (base_.is_constant()) power_ = 0;
        reduce();
    }

    const MP& num() const { return num_; }
    const MP& base() const { return base_; }
    int power() const { return power_; }
    bool is_polynomial() const { return power_ == 0; }
    bool is_zero() const { return num_.is_zero(); }

    ChartFrac operator-() const { return ChartFrac(-num_, base_, power_); }
    friend ChartFrac operator+(const ChartFrac& a, const ChartFrac& b) {
        int p = std::max(a.power_, b.power_);
        return ChartFrac(a.lifted(p) + b.lifted(p), a.base_, p);
    }
    friend ChartFrac operator-(const ChartFrac& a, const ChartFrac& b) { return a + (-b); }
    friend ChartFrac operator*(const ChartFrac& a, const ChartFrac& b) {
        return ChartFrac(a.num_ * b.num_, a.base_, a.power_ + b.power_);
    }
    ChartFrac scaled(const K& s) const { return ChartFrac(num_.scaled(s), base_, power_); }
    friend bool operator==(const ChartFrac& a, const ChartFrac& b) {
        int p = std::max(a.power_, b.power_);
        return a.lifted(p) == b.lifted(p);
    }

    // d/dx (i = 0) or d/dy (i = 1): (N' b - k N b') / b^{k+1}.
    ChartFrac partial(size_t i) const {
        if (power_ == 0) return ChartFrac(num_.derivative(i), base_, 0);
        MP top = num_.derivative(i) * base_ - (num_ * base_.derivative(i)).scaled(K(power_));
        return ChartFrac(top, base_, power_ + 1);
    }

    // Coefficient of y^d, as a function of x over the same base.
    ChartFrac coeff_y(int d) const {
        if (base_.degree_in(1) > 0) throw std::domain_error("base depends on y");
        return ChartFrac(num_.coeff_of(1, d), base_, power_);
    }

    template <class T>
    T eval(const T& x, const T& y) const {
        std::vector<T> at{x, y};
        T den(1);
        T b = base_.template eval<T>(at);
        for (int k = 0; k < power_; ++k) den = den * b;
        return num_.template eval<T>(at) / den;
    }

private:
    MP lifted(int p) const {
        MP r = num_;
        for (int k = power_; k < p; ++k) r *= base_;
        return r;
    }
    void reduce() {
        while (power_ > 0 && !num_.is_zero()) {
            auto q = num_.exact_div(base_);
            if (!q) return;
            num_ = *q;
            --power_;
        }
        if (num_.is_zero()) power_ = 0;
    }

    MP num_, base_;
    int power_ = 0;
};

}  // namespace twins
