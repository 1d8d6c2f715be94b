#pragma once

#include <span>
#include <vector>

#include "romanovski/params.hpp"
#include "romanovski/poly.hpp"
#include "romanovski/weight_ring.hpp"

namespace romanovski {

/// The sequence Q_0 .. Q_max of one family (alpha, -a). Q_0 = 1 and
/// consecutive entries satisfy the three-term recursion exactly.
/// P_l is Q_l; no separate type.
struct QFamily {
    Params params;
    std::vector<Poly> polys;

    const Poly& q(std::size_t nu) const { return polys.at(nu); }
    std::size_t max_nu() const { return polys.size() - 1; }
};

/// Family by the three-term recursion
///   Q_{nu+1} = [alpha - 2x(a+nu+1)] Q_nu - nu sigma (2a+nu+1) Q_{nu-1}.
QFamily three_term_q(const Params& params, unsigned max_nu);

/// Same family by the first-order recursive relation
///   Q_{nu+1} = sigma Q_nu' + [alpha - 2x(a+nu+1)] Q_nu.
QFamily recursive_ode_q(const Params& params, unsigned max_nu);

/// Sturm-Liouville eigenvalue nu(2a+nu+1).
Rational lambda_nu(const Rational& a, unsigned nu);

/// Q_nu' + lambda_nu Q_{nu-1}; identically zero.
Poly basic_ode_residual(const Params& params, unsigned nu, const QFamily& fam);

/// sigma Q'' + [alpha - sigma'(a+nu)] Q' + lambda_nu Q; identically zero.
Poly sturm_liouville_residual(const Params& params, unsigned nu, const QFamily& fam);

/// The same second-order equation read at P_l = Q_l with
/// tau = alpha - sigma'(a+l); kept as a separately named check.
Poly p_ode_residual(const Params& params, unsigned l, const QFamily& fam);

/// d/dx(sigma^(l-nu+1) w_l Q_nu') + lambda_nu sigma^(l-nu) w_l Q_nu, formed
/// in the weight ring; identically zero, and independent of l because
/// w_l sigma^l is.
WeightedElement self_adjoint_residual(const Params& params, unsigned l, unsigned nu,
                                      const QFamily& fam);

/// Binomial convolution sum_{v} C(N,v) Q_v^(p1) Q_{N-v}^(p2); equals
/// Q_N at parameters (alpha1+alpha2, a1+a2+1).
Poly addition_q(const Params& p1, const Params& p2, unsigned N);

/// n-fold parameter addition by pairwise folding; equals Q_N at
/// (sum alpha_j, sum a_j + n - 1). Rejects an empty list.
Poly nfold_addition_q(std::span<const Params> plist, unsigned N);

/// sum_v C(N,v) Q_v^(0,-a) Q_{N-v}^(alpha,1); equals Q_N^(alpha,-a).
/// The (alpha,1) factor is the family with a = -1.
Poly decomposition_q(const Params& params, unsigned N);

/// Q_nu^(-alpha,-a)(x) - (-1)^nu Q_nu^(alpha,-a)(-x); identically zero.
Poly parity_check(const Params& params, unsigned nu);

/// The monic solution sum_mu a_mu x^(N-2mu) of the alpha = 0 equation,
/// a_0 = 1. Multiplied by the recursion's leading coefficient it
/// reproduces Q_N^(0,-a). Throws std::domain_error naming the offending mu
/// when a coefficient denominator 2a+2mu+1 vanishes.
Poly power_series_q0(const Rational& a, unsigned N);

/// Leading coefficient of Q_nu in closed form,
/// (-1)^nu (2a+2)(2a+3)...(2a+nu+1); zero exactly at the degenerate
/// parameters where the recursion's leading term collapses.
Rational q_leading_coefficient(const Rational& a, unsigned nu);

}  // namespace romanovski
