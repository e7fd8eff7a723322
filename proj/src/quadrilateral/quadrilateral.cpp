#include "twins/quadrilateral/quadrilateral.hpp"

namespace twins {

const char* to_string(AnsatzKind k) {
    switch (k) {
        case AnsatzKind::Calabi: return "calabi";
        case AnsatzKind::Orthotoric: return "orthotoric";
        case AnsatzKind::Product: return "product";
    }
    return "?";
}

std::vector<QuadraticSurd> lebrun_cscs_values(const Rational& alpha, const Rational& beta) {
    if (alpha.sign() <= 0 || beta.sign() <= 0) throw std::invalid_argument("need alpha, beta > 0");
    if (beta <= 5 * alpha) return {};
    Rational r = alpha * alpha + beta * beta;
    QuadraticSurd c = QuadraticSurd::sqrt((beta - 5 * alpha) / (beta - alpha)) * QuadraticSurd(r / beta);
    return {-c, c};
}

std::optional<std::array<mpz_class, 4>> lattice_labels(const Rational& alpha) {
    if (alpha <= 1) return std::nullopt;
    // -k3/k4 = alpha/(1 + 3 alpha + alpha^2), already in lowest terms as a Rational
    Rational t = alpha / (1 + 3 * alpha + alpha * alpha);
    mpz_class k3 = -t.num(), k4 = t.den();
    return std::array<mpz_class, 4>{k3, k4, k3, k4};
}

std::array<std::array<Rational, 3>, 4> lattice_label_forms(const Rational& alpha, const Rational& C) {
    Rational F = (alpha - 1) / (1 + 3 * alpha + alpha * alpha);
    return {{{-C, C, 0}, {0, 0, C * F}, {C, -C / alpha, 0}, {0, C * F, -C * F}}};
}

QuadParams<Rational> hirzebruch_calabi_params(const Rational& s, const Rational& x) {
    if (s.sign() <= 0) throw std::invalid_argument("need s > 0");
    if (x.sign() <= 0 || x >= 1) throw std::invalid_argument("need 0 < x < 1");
    return {(1 - x) / x, (1 + x) / x, 0, 1, x / (1 - x), -x / (1 + x), -2 / s, 2 / s};
}

Rational admissible_b(const AffinePotential<Rational>& f, const Rational& x) {
    if (!f.c2.is_zero()) throw std::invalid_argument("potential depends on the second moment coordinate");
    Rational den = x * f.lambda + f.c1;
    if (den.is_zero()) throw std::domain_error("potential vanishes on the zero section");
    return x * f.c1 / den;
}

}  // namespace twins
