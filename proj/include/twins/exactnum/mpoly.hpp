#pragma once

#include "twins/exactnum/polynomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace twins {

// Sparse multivariate polynomial in a fixed number of variables.
// Terms are keyed by exponent vectors in lexicographic order.
template <class K>
class MPoly {
public:
    using Exp = std::vector<int>;

    MPoly() = default;
    explicit MPoly(size_t nvars) : n_(nvars) {}
    MPoly(size_t nvars, const K& c) : n_(nvars) {
        if (!twins::is_zero(c)) t_[Exp(nvars, 0)] = c;
    }
    static MPoly var(size_t nvars, size_t i) {
        MPoly p(nvars);
        Exp e(nvars, 0);
        e[i] = 1;
        p.t_[e] = K(1);
        return p;
    }
    static MPoly term(const K& c, Exp e) {
        MPoly p(e.size());
        if (!twins::is_zero(c)) p.t_[std::move(e)] = c;
        return p;
    }
    // Embeds a univariate polynomial as a polynomial in variable i.
    static MPoly from_univariate(const Poly<K>& u, size_t nvars, size_t i) {
        MPoly p(nvars);
        for (int d = 0; d <= u.degree(); ++d) {
            if (twins::is_zero(u.coeff(d))) continue;
            Exp e(nvars, 0);
            e[i] = d;
            p.t_[e] = u.coeff(d);
        }
        return p;
    }

    size_t nvars() const { return n_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<Exp, K>& terms() const { return t_; }
    K coeff(const Exp& e) const {
        auto it = t_.find(e);
        return it == t_.end() ? K(0) : it->second;
    }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Exp(n_, 0)); }
    K constant_term() const { return coeff(Exp(n_, 0)); }

    int degree_in(size_t i) const {
        int d = -1;
        for (const auto& [e, c] : t_) d = std::max(d, e[i]);
        return d;
    }
    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : t_) {
            int s = 0;
            for (int v : e) s += v;
            d = std::max(d, s);
        }
        return d;
    }

    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [e, c] : r.t_) c = -c;
        return r;
    }
    MPoly& operator+=(const MPoly& o) {
        check(o);
        for (const auto& [e, c] : o.t_) add_term(e, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) { return *this += -o; }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.check(b);
        MPoly r(a.n_);
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) {
                Exp e(a.n_);
                for (size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    friend bool operator==(const MPoly& a, const MPoly& b) { return (a - b).is_zero(); }

    MPoly scaled(const K& s) const {
        MPoly r(n_);
        for (const auto& [e, c] : t_) r.add_term(e, c * s);
        return r;
    }

    MPoly derivative(size_t i) const {
        MPoly r(n_);
        for (const auto& [e, c] : t_) {
            if (e[i] == 0) continue;
            Exp f = e;
            f[i] -= 1;
            r.add_term(f, c * K(e[i]));
        }
        return r;
    }

    template <class T>
    T eval(const std::vector<T>& at) const {
        if (at.size() != n_) throw std::invalid_argument("evaluation point dimension mismatch");
        T acc(0);
        for (const auto& [e, c] : t_) {
            T m = T(c);
            for (size_t i = 0; i < n_; ++i)
                for (int k = 0; k < e[i]; ++k) m = m * at[i];
            acc = acc + m;
        }
        return acc;
    }

    // Replace variable i by q.
    MPoly substitute(size_t i, const MPoly& q) const {
        check(q);
        std::vector<MPoly> powers{MPoly(n_, K(1))};
        MPoly r(n_);
        for (const auto& [e, c] : t_) {
            while (static_cast<int>(powers.size()) <= e[i]) powers.push_back(powers.back() * q);
            Exp f = e;
            f[i] = 0;
            r += term(c, f) * powers[static_cast<size_t>(e[i])];
        }
        return r;
    }

    // Coefficient of var_i^d, as a polynomial in the remaining variables (var i kept with exponent 0).
    MPoly coeff_of(size_t i, int d) const {
        MPoly r(n_);
        for (const auto& [e, c] : t_)
            if (e[i] == d) {
                Exp f = e;
                f[i] = 0;
                r.add_term(f, c);
            }
        return r;
    }

    // Univariate view when only variable i occurs.
    Poly<K> to_univariate(size_t i) const {
        std::vector<K> v;
        for (const auto& [e, c] : t_) {
            for (size_t j = 0; j < n_; ++j)
                if (j != i && e[j] != 0) throw std::domain_error("polynomial depends on other variables");
            if (static_cast<int>(v.size()) <= e[i]) v.resize(static_cast<size_t>(e[i]) + 1, K(0));
            v[static_cast<size_t>(e[i])] = c;
        }
        return Poly<K>(std::move(v));
    }

    // Exact quotient by d when d divides *this, otherwise nullopt.
    std::optional<MPoly> exact_div(const MPoly& d) const {
        check(d);
        if (d.is_zero()) throw std::domain_error("division by zero polynomial");
        const auto& [ld, lc] = *d.t_.rbegin();
        MPoly rem = *this, q(n_);
        while (!rem.is_zero()) {
            const auto [lr, rc] = *rem.t_.rbegin();
            Exp e(n_);
            for (size_t i = 0; i < n_; ++i) {
                e[i] = lr[i] - ld[i];
                if (e[i] < 0) return std::nullopt;
            }
            MPoly t = term(rc / lc, e);
            q += t;
            rem -= t * d;
        }
        return q;
    }

    template <class K2>
    MPoly<K2> convert() const {
        MPoly<K2> r(n_);
        for (const auto& [e, c] : t_) r += MPoly<K2>::term(K2(c), e);
        return r;
    }

    std::string str(const std::vector<std::string>& names) const {
        if (t_.empty()) return "0";
        std::string out;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            std::string m = "(" + to_string(it->second) + ")";
            for (size_t i = 0; i < n_; ++i) {
                if (it->first[i] == 0) continue;
                m += "*" + names.at(i);
                if (it->first[i] > 1) m += "^" + std::to_string(it->first[i]);
            }
            if (!out.empty()) out += " + ";
            out += m;
        }
        return out;
    }

private:
    void check(const MPoly& o) const {
        if (o.n_ != n_) throw std::invalid_argument("variable-count mismatch");
    }
    void add_term(const Exp& e, const K& c) {
        if (twins::is_zero(c)) return;
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(e, c);
            return;
        }
        it->second += c;
        if (twins::is_zero(it->second)) t_.erase(it);
    }
    size_t n_ = 0;
    std::map<Exp, K> t_;
};

template <class K>
MPoly<K> mpoly_pow(const MPoly<K>& p, int e) {
    MPoly<K> r(p.nvars(), K(1)), b = p;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace twins
