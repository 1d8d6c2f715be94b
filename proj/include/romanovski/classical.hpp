#pragma once

#include <vector>

#include "romanovski/params.hpp"
#include "romanovski/poly.hpp"

namespace romanovski {

/// Gegenbauer family C_l^(lambda) by the standard recurrence
///   l C_l = 2x(l+lambda-1) C_{l-1} - (l+2lambda-2) C_{l-2},
/// C_0 = 1, C_1 = 2 lambda x. Exact over rational lambda.
struct GegenbauerFamily {
    Rational lambda;
    std::vector<Poly> polys;

    const Poly& c(std::size_t l) const { return polys.at(l); }
};

GegenbauerFamily gegenbauer(const Rational& lambda, unsigned max_l);

/// (1-x^2) C'' - (2 lambda + 1) x C' + l(l+2 lambda) C; zero for every
/// family member (sanity anchor for the recurrence).
Poly gegenbauer_ode_residual(const GegenbauerFamily& fam, unsigned l);

/// m! sum_n (-1)^n x^(2n) C_{m-2n}^(n+1)(-x); equals Q_m^(0,0).
Poly expand_q00_gegenbauer(unsigned m);

/// N! sum_n binom(-a-1, n) x^(2n) C_{N-2n}^(n+a+1)(-x); equals Q_N^(0,-a).
Poly expand_q0a_gegenbauer(const Rational& a, unsigned N);

/// Decomposition with the alpha-free factor expanded in Gegenbauer
/// polynomials at its own degree:
///   sum_v C(N,v) [v-degree expansion](x) Q_{N-v}^(alpha,1)(x);
/// equals Q_N^(alpha,-a).
Poly expand_general_gegenbauer(const Params& params, unsigned N);

/// The same display with the inner expansion frozen at degree N for all v,
/// as printed in the source identity; returned for residual reporting, not
/// asserted.
Poly expand_general_gegenbauer_printed(const Params& params, unsigned N);

/// Solution of sigma y'' - (2 lambda + 1) x y' + Lambda y = 0 as the
/// Q_l family member at a = lambda - l + 1/2.
Poly hyperbolic_gegenbauer_map(const Rational& lambda, unsigned l);

/// Residual of that equation with Lambda = l(2a+l+1) at the mapped a;
/// identically zero.
Poly hyperbolic_gegenbauer_residual(const Rational& lambda, unsigned l);

/// Associated Laguerre family L_l^(k), exact, standard recurrence.
std::vector<Poly> laguerre(unsigned max_l, long superscript);

/// l L_l - l L_{l-1} + x L^(1)_{l-1}; identically zero.
Poly laguerre_identity_residual(unsigned l);

/// Jacobi family P_l^(a,b) by the standard three-term recurrence,
/// normalization P_l(1) = (a+1)...(a+l)/l!. Throws std::domain_error when
/// a structural recurrence denominator vanishes for the given rational
/// parameters.
std::vector<Poly> jacobi(const Rational& a, const Rational& b, unsigned max_l);

/// 2l P_l^(a,b) - (a+l)(1+x) P_{l-1}^(a,b+1) + (b+l)(1-x) P_{l-1}^(a+1,b);
/// identically zero.
Poly jacobi_identity_residual(const Rational& a, const Rational& b, unsigned l);

/// True when the Jacobi recurrence up to max_l hits a vanishing structural
/// denominator for these parameters.
bool jacobi_recurrence_degenerate(const Rational& a, const Rational& b, unsigned max_l);

}  // namespace romanovski
