#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "romanovski/params.hpp"
#include "romanovski/poly.hpp"

namespace romanovski {

struct QuadResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::int64_t nodes_used = 0;
};

/// arccot branch with range (0, pi): continuous and decreasing on the
/// whole real line, d/dx arccot = -1/(1+x^2).
double arccot(double x);

/// Closed form of the generating function,
///   Q(x,y) = [sigma(x)/(1+t^2)]^(a+1) e^(alpha (arccot x - arccot t)),
/// t = x + y sigma(x); finite for all real x, y on this branch.
double genfun_closed(const Params& params, double x, double y);

struct GenfunCheck {
    double closed = 0.0;
    double series = 0.0;
    double tail_ratio = 0.0;  // |last term| / |partial sum|
    bool converged = false;   // tail below 1e-12 and terms shrinking
};

/// Closed form against the truncated exponential series sum y^v/v! Q_v(x).
/// A failed tail test marks the point out of the series' domain; the pair
/// is still returned.
GenfunCheck genfun_series_check(const Params& params, double x, double y, int terms);

/// |d/dy Q - sigma Q Q_1(t)/(1+t^2)| at (x,y), the derivative taken by
/// Richardson-extrapolated central differences; relative to max(1,|rhs|).
double genfun_pde_residual(const Params& params, double x, double y);

/// Orthogonality integral
///   O = int Q_mu Q_nu e^(-alpha arccot x) / sigma^((mu+nu)/2+a+2) dx,
/// with an extra sqrt(sigma) in the numerator when half_power is set.
/// Uses x = cot(theta); throws std::domain_error when the endpoint
/// exponent bookkeeping shows the integral diverges.
QuadResult ortho_integral(const Params& params, unsigned mu, unsigned nu, bool half_power);

/// sqrt(pi) Gamma(a+3/2) / Gamma(a+2), the constant the I0 scan locks onto
/// for -1 <= y <= 1. Requires a > -3/2.
double i0_reference(double a);

/// I0(y) = int sigma^-(a+2) Q(x, y/sqrt(sigma); 0, -a) dx per grid point.
std::vector<QuadResult> i0_scan(const Rational& a, std::span<const double> y_grid);

/// I1(y) = int sigma^-(a+2) e^(-alpha arccot x) Q(x, y/sqrt(sigma)) dx.
std::vector<QuadResult> i1_scan(const Params& params, std::span<const double> y_grid);

/// I(y), same weight with the generating function squared.
std::vector<QuadResult> i_scan(const Params& params, std::span<const double> y_grid);

/// Adaptive composite Gauss-Legendre on [lo, hi]: refine the worst panel
/// until the summed panel error drops below rel_tol times the integral's
/// L1 scale.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                              double rel_tol, int max_panels = 20000);

}  // namespace romanovski
