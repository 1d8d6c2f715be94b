#include "romanovski/weight_ring.hpp"

#include <stdexcept>

namespace romanovski {

WeightedElement WeightedElement::make(Params params, unsigned sigma_power, Poly numerator) {
    if (numerator.is_zero()) return {std::move(params), 0, Poly()};
    while (sigma_power > 0) {
        auto q = divide_exact(numerator, sigma_poly());
        if (!q) break;
        numerator = std::move(*q);
        --sigma_power;
    }
    return {std::move(params), sigma_power, std::move(numerator)};
}

WeightedElement we_diff(const WeightedElement& e) {
    // sigma p' + (alpha - 2x(a+1) - 2kx) p, one sigma power down.
    const Rational k(static_cast<long>(e.sigma_power));
    const Poly tau{e.params.alpha, (e.params.a + Rational(1) + k) * Rational(-2)};
    Poly num = sigma_poly() * e.numerator.derivative() + tau * e.numerator;
    return WeightedElement::make(e.params, e.sigma_power + 1, std::move(num));
}

WeightedElement we_add(const WeightedElement& lhs, const WeightedElement& rhs) {
    if (!(lhs.params == rhs.params))
        throw std::invalid_argument("weighted elements from different weight families");
    const unsigned k = std::max(lhs.sigma_power, rhs.sigma_power);
    const Poly l = lhs.numerator * pow(sigma_poly(), k - lhs.sigma_power);
    const Poly r = rhs.numerator * pow(sigma_poly(), k - rhs.sigma_power);
    return WeightedElement::make(lhs.params, k, l + r);
}

WeightedElement we_sub(const WeightedElement& lhs, const WeightedElement& rhs) {
    return we_add(lhs, we_scale(rhs, Poly::constant(-1)));
}

WeightedElement we_scale(const WeightedElement& e, const Poly& factor) {
    return WeightedElement::make(e.params, e.sigma_power, e.numerator * factor);
}

WeightedElement we_mul_sigma_power(const WeightedElement& e, int m) {
    if (m >= 0) {
        const unsigned um = static_cast<unsigned>(m);
        if (um <= e.sigma_power) return {e.params, e.sigma_power - um, e.numerator};
        return WeightedElement::make(e.params, 0,
                                     e.numerator * pow(sigma_poly(), um - e.sigma_power));
    }
    return WeightedElement::make(e.params, e.sigma_power + static_cast<unsigned>(-m), e.numerator);
}

namespace {

// numerator * sigma^(power - sigma_power), dividing exactly when the
// exponent is negative. Division failure would mean the element does not
// represent a polynomial times sigma^-power * w0, which the Rodrigues
// identities rule out.
Poly extract_polynomial(const WeightedElement& e, long power) {
    const long exponent = power - static_cast<long>(e.sigma_power);
    if (exponent >= 0) return e.numerator * pow(sigma_poly(), static_cast<unsigned>(exponent));
    auto q = divide_exact(e.numerator, pow(sigma_poly(), static_cast<unsigned>(-exponent)));
    if (!q) throw std::logic_error("weighted element is not sigma^-power * polynomial * w0");
    return std::move(*q);
}

}  // namespace

Poly rodrigues_q(const Params& params, unsigned nu) {
    WeightedElement e = WeightedElement::unit(params);
    for (unsigned i = 0; i < nu; ++i) e = we_diff(e);
    return extract_polynomial(e, nu);
}

Poly generalized_rodrigues_q(const Params& params, unsigned nu, unsigned mu, const Poly& q_mu) {
    if (mu > nu) throw std::invalid_argument("generalized Rodrigues requires mu <= nu");
    WeightedElement e = WeightedElement::make(params, mu, q_mu);
    for (unsigned i = 0; i < nu - mu; ++i) e = we_diff(e);
    return extract_polynomial(e, nu);
}

Poly parameter_shift_q(const Params& params, int l, unsigned nu) {
    WeightedElement e = l >= 0
        ? WeightedElement::make(params, static_cast<unsigned>(l), Poly::constant(1))
        : WeightedElement::make(params, 0, pow(sigma_poly(), static_cast<unsigned>(-l)));
    for (unsigned i = 0; i < nu; ++i) e = we_diff(e);
    return extract_polynomial(e, static_cast<long>(nu) + l);
}

WeightedElement pearson_residual(const Params& params, unsigned l) {
    const WeightedElement w_l = WeightedElement::make(params, l, Poly::constant(1));
    const WeightedElement lhs = we_mul_sigma_power(we_diff(w_l), 1);
    const Poly tau{params.alpha, (params.a + Rational(static_cast<long>(l)) + Rational(1)) * Rational(-2)};
    return we_sub(lhs, we_scale(w_l, tau));
}

}  // namespace romanovski
