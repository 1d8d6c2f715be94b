#include "romanovski/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <stdexcept>

#include "romanovski/qfamily.hpp"

namespace romanovski {

namespace {

constexpr double kPi = std::numbers::pi;

struct GaussRule {
    std::vector<double> nodes;    // on (-1, 1)
    std::vector<double> weights;
};

// Gauss-Legendre nodes by Newton iteration on the Legendre recurrence.
GaussRule make_gauss_rule(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.weights[i] = w;
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

const GaussRule& gauss8() {
    static const GaussRule rule = make_gauss_rule(8);
    return rule;
}

const GaussRule& gauss16() {
    static const GaussRule rule = make_gauss_rule(16);
    return rule;
}

struct PanelEstimate {
    double value = 0.0;     // 16-point value
    double l1 = 0.0;        // 16-point estimate of int |f|
    double error = 0.0;     // |16-point - 8-point|
};

PanelEstimate evaluate_panel(const std::function<double(double)>& f, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    PanelEstimate est;
    double coarse = 0.0;
    const auto& g8 = gauss8();
    for (int i = 0; i < 8; ++i) coarse += g8.weights[i] * f(mid + half * g8.nodes[i]);
    const auto& g16 = gauss16();
    for (int i = 0; i < 16; ++i) {
        const double v = f(mid + half * g16.nodes[i]);
        est.value += g16.weights[i] * v;
        est.l1 += g16.weights[i] * std::abs(v);
    }
    est.value *= half;
    est.l1 *= half;
    est.error = std::abs(est.value - coarse * half);
    return est;
}

struct Panel {
    double lo, hi;
    PanelEstimate est;
    bool operator<(const Panel& o) const { return est.error < o.est.error; }
};

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                              double rel_tol, int max_panels) {
    constexpr int kInitialPanels = 8;
    std::priority_queue<Panel> heap;
    QuadResult out;
    double total = 0.0, total_err = 0.0, total_l1 = 0.0;
    for (int i = 0; i < kInitialPanels; ++i) {
        const double a = lo + (hi - lo) * i / kInitialPanels;
        const double b = lo + (hi - lo) * (i + 1) / kInitialPanels;
        Panel p{a, b, evaluate_panel(f, a, b)};
        out.nodes_used += 24;
        total += p.est.value;
        total_err += p.est.error;
        total_l1 += p.est.l1;
        heap.push(p);
    }
    int panels = kInitialPanels;
    while (total_err > rel_tol * std::max(total_l1, 1e-300) && panels < max_panels) {
        const Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        // At zero estimated error, or once the panel is too narrow to split
        // in double precision, refinement cannot improve the answer.
        if (worst.est.error == 0.0 || mid <= worst.lo || mid >= worst.hi) {
            heap.push(worst);
            break;
        }
        total -= worst.est.value;
        total_err -= worst.est.error;
        total_l1 -= worst.est.l1;
        for (const auto& [a, b] : {std::pair{worst.lo, mid}, std::pair{mid, worst.hi}}) {
            Panel p{a, b, evaluate_panel(f, a, b)};
            out.nodes_used += 24;
            total += p.est.value;
            total_err += p.est.error;
            total_l1 += p.est.l1;
            heap.push(p);
        }
        ++panels;
    }
    out.value = total;
    out.abs_error_estimate = total_err;
    return out;
}

double arccot(double x) { return kPi / 2.0 - std::atan(x); }

double genfun_closed(const Params& params, double x, double y) {
    const double a1 = params.a.to_double() + 1.0;
    const double alpha = params.alpha.to_double();
    // (1+t^2)/sigma = 1 + 2xy + y^2 sigma with t = x + y sigma; grouping
    // y^2 sigma as (xy)^2 + y^2 keeps the expression finite wherever the
    // value itself is representable, even for |x| far beyond sqrt(DBL_MAX).
    const double xy = x * y;
    const double denom = 1.0 + 2.0 * xy + (xy * xy + y * y);
    const double t = x + (y + xy * x);
    return std::pow(denom, -a1) * std::exp(alpha * (arccot(x) - arccot(t)));
}

GenfunCheck genfun_series_check(const Params& params, double x, double y, int terms) {
    if (terms < 5) throw std::invalid_argument("series check needs at least 5 terms");
    GenfunCheck chk;
    chk.closed = genfun_closed(params, x, y);
    const QFamily fam = three_term_q(params, static_cast<unsigned>(terms - 1));
    double sum = 0.0, term_mag = 0.0, prev_mag = 0.0, prev_prev_mag = 0.0;
    double factor = 1.0;  // y^v / v!
    for (int v = 0; v < terms; ++v) {
        double qv = 0.0;
        const auto& coeffs = fam.q(v).coeffs();
        for (std::size_t i = coeffs.size(); i-- > 0;) qv = qv * x + coeffs[i].to_double();
        const double term = factor * qv;
        sum += term;
        prev_prev_mag = prev_mag;
        prev_mag = term_mag;
        term_mag = std::abs(term);
        factor *= y / (v + 1);
    }
    chk.series = sum;
    chk.tail_ratio = term_mag / std::max(std::abs(sum), 1e-300);
    const bool shrinking = term_mag <= prev_mag && prev_mag <= prev_prev_mag;
    chk.converged = chk.tail_ratio < 1e-12 && shrinking;
    return chk;
}

double genfun_pde_residual(const Params& params, double x, double y) {
    const double sig = 1.0 + x * x;
    const double t = x + y * sig;
    const double a1 = params.a.to_double() + 1.0;
    const double alpha = params.alpha.to_double();
    const double q1_at_t = alpha - 2.0 * t * a1;
    const double rhs = sig * genfun_closed(params, x, y) / (1.0 + t * t) * q1_at_t;
    const auto central = [&](double h) {
        return (genfun_closed(params, x, y + h) - genfun_closed(params, x, y - h)) / (2.0 * h);
    };
    const double h = 1e-3 / sig;
    const double lhs = (4.0 * central(h / 2.0) - central(h)) / 3.0;
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
}

namespace {

// p(cot theta) * sin(theta)^deg(p), evaluated as the homogeneous form
// sum c_i cos^i sin^(deg-i); bounded on (0, pi) unlike p(cot) itself.
struct HomogenizedPoly {
    std::vector<double> coeffs;  // ascending, converted once

    explicit HomogenizedPoly(const Poly& p) {
        for (const auto& c : p.coeffs()) coeffs.push_back(c.to_double());
    }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double eval(double sin_t, double cos_t) const {
        if (coeffs.empty()) return 0.0;
        // Horner in cos with sin powers folded in as the degree drops; every
        // partial stays bounded, unlike p(cot) * sin^deg evaluated naively.
        double acc = coeffs.back();
        double sin_pow = 1.0;
        for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
            sin_pow *= sin_t;
            acc = acc * cos_t + coeffs[i] * sin_pow;
        }
        return acc;
    }
};

void require_convergent(const Rational& leftover_exponent) {
    // Integrand behaves like sin(theta)^leftover at the endpoints.
    if (!(leftover_exponent > Rational(-1)))
        throw std::domain_error("orthogonality integral diverges: endpoint exponent " +
                                leftover_exponent.str() + " <= -1");
}

// Integrate g(sin, cos, theta) over theta in (0, pi), folding (pi/2, pi)
// back onto (0, pi/2). Both endpoint cascades then live near u = 0 where
// doubles are dense, and sin(pi - u) is evaluated exactly as sin(u); without
// the fold the sparse double grid at magnitude pi hides singular endpoint
// mass from the error estimator.
QuadResult integrate_theta(const std::function<double(double, double, double)>& g) {
    return integrate_adaptive(
        [&g](double u) {
            const double s = std::sin(u);
            if (s < 1e-250) return 0.0;  // below this, powers overflow before mass matters
            const double c = std::cos(u);
            return g(s, c, u) + g(s, -c, kPi - u);
        },
        0.0, kPi / 2.0, 1e-10);
}

}  // namespace

QuadResult ortho_integral(const Params& params, unsigned mu, unsigned nu, bool half_power) {
    require_convergent(params.a * Rational(2) + Rational(half_power ? 1 : 2));
    const Poly q_mu = three_term_q(params, mu).q(mu);
    const Poly q_nu = three_term_q(params, nu).q(nu);
    if (q_mu.is_zero() || q_nu.is_zero()) return {0.0, 0.0, 0};
    const HomogenizedPoly hm(q_mu), hn(q_nu);
    const double alpha = params.alpha.to_double();
    // sigma exponent (mu+nu)/2 + a + 2 in x-space, minus 1/2 when the
    // extra sqrt(sigma) is requested; the cot substitution and the two
    // homogenizations leave sin^r with r as below.
    const double r = static_cast<double>(mu) + static_cast<double>(nu) +
                     2.0 * params.a.to_double() + 2.0 - (half_power ? 1.0 : 0.0) -
                     hm.degree() - hn.degree();
    return integrate_theta([&](double s, double c, double theta) {
        return hm.eval(s, c) * hn.eval(s, c) * std::exp(-alpha * theta) * std::pow(s, r);
    });
}

double i0_reference(double a) {
    if (!(a > -1.5)) throw std::domain_error("I0 reference requires a > -3/2");
    return std::sqrt(kPi) * std::exp(std::lgamma(a + 1.5) - std::lgamma(a + 2.0));
}

namespace {

std::vector<QuadResult> scan_impl(const Params& params, std::span<const double> y_grid,
                                  bool squared) {
    require_convergent(params.a * Rational(2) + Rational(2));
    const double a = params.a.to_double();
    const double alpha = params.alpha.to_double();
    std::vector<QuadResult> out;
    out.reserve(y_grid.size());
    for (const double y : y_grid) {
        out.push_back(integrate_theta([&](double s, double c, double theta) {
            const double q = genfun_closed(params, c / s, y * s);
            return std::pow(s, 2.0 * a + 2.0) * std::exp(-alpha * theta) * (squared ? q * q : q);
        }));
    }
    return out;
}

}  // namespace

std::vector<QuadResult> i0_scan(const Rational& a, std::span<const double> y_grid) {
    return scan_impl(Params{Rational(0), a}, y_grid, false);
}

std::vector<QuadResult> i1_scan(const Params& params, std::span<const double> y_grid) {
    return scan_impl(params, y_grid, false);
}

std::vector<QuadResult> i_scan(const Params& params, std::span<const double> y_grid) {
    return scan_impl(params, y_grid, true);
}

}  // namespace romanovski
