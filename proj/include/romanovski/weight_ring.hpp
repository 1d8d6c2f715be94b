#pragma once

#include "romanovski/params.hpp"
#include "romanovski/poly.hpp"

namespace romanovski {

/// Symbolic object p(x) * sigma(x)^(-k) * w0(x) with
/// w0(x) = sigma(x)^-(a+1) e^(-alpha arccot x), closed under d/dx.
/// The transcendental factor is never evaluated; Pearson's ODE folds its
/// derivative into the polynomial part.
///
/// Canonical form: when k > 0, sigma does not divide the numerator
/// (sigma = 1+x^2 is irreducible over the rationals, so this is an exact
/// division test).
struct WeightedElement {
    Params params;
    unsigned sigma_power = 0;  // k
    Poly numerator;            // p

    static WeightedElement make(Params params, unsigned sigma_power, Poly numerator);
    static WeightedElement unit(Params params) { return {std::move(params), 0, Poly::constant(1)}; }

    bool is_zero() const { return numerator.is_zero(); }
    bool operator==(const WeightedElement&) const = default;
};

/// Exact derivative under the closure rule
///   d/dx [p sigma^-k w0] = [sigma p' + (alpha - 2x(a+1) - 2kx) p] sigma^-(k+1) w0,
/// re-canonicalized.
WeightedElement we_diff(const WeightedElement& e);

WeightedElement we_add(const WeightedElement& lhs, const WeightedElement& rhs);
WeightedElement we_sub(const WeightedElement& lhs, const WeightedElement& rhs);
WeightedElement we_scale(const WeightedElement& e, const Poly& factor);

/// Multiply by sigma^m, m of either sign.
WeightedElement we_mul_sigma_power(const WeightedElement& e, int m);

/// Q_nu via the Rodrigues formula: apply we_diff nu times to the unit
/// element; the numerator times any sigma power divided out in
/// canonicalization is Q_nu, a polynomial of degree nu for generic
/// parameters.
Poly rodrigues_q(const Params& params, unsigned nu);

/// Q_nu from the seed Q_mu by nu-mu further derivatives; equals
/// rodrigues_q(params, nu) whenever q_mu is Q_mu. Rejects mu > nu.
Poly generalized_rodrigues_q(const Params& params, unsigned nu, unsigned mu, const Poly& q_mu);

/// sigma^(nu+l)/w0 * d^nu/dx^nu (sigma^-l w0); equals Q_nu at shifted
/// parameter a -> a+l. l may be negative.
Poly parameter_shift_q(const Params& params, int l, unsigned nu);

/// sigma * dw_l/dx - [alpha - 2x(l+a+1)] w_l; identically zero by
/// Pearson's ODE.
WeightedElement pearson_residual(const Params& params, unsigned l);

}  // namespace romanovski
