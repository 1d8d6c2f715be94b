#include "romanovski/classical.hpp"

#include <stdexcept>

#include "romanovski/qfamily.hpp"

namespace romanovski {

GegenbauerFamily gegenbauer(const Rational& lambda, unsigned max_l) {
    GegenbauerFamily fam{lambda, {Poly::constant(1)}};
    fam.polys.reserve(max_l + 1);
    if (max_l >= 1) fam.polys.push_back(Poly{Rational(0), lambda * Rational(2)});
    for (unsigned l = 2; l <= max_l; ++l) {
        const Rational lr(static_cast<long>(l));
        Poly next = Poly{Rational(0), (lr + lambda - Rational(1)) * Rational(2)} * fam.polys[l - 1] -
                    fam.polys[l - 2] * (lr + lambda * Rational(2) - Rational(2));
        fam.polys.push_back(next * (Rational(1) / lr));
    }
    return fam;
}

Poly gegenbauer_ode_residual(const GegenbauerFamily& fam, unsigned l) {
    const Poly& c = fam.c(l);
    const Poly one_minus_x2{Rational(1), Rational(0), Rational(-1)};
    const Poly minus_x_term{Rational(0), -(fam.lambda * Rational(2) + Rational(1))};
    const Rational eig = Rational(static_cast<long>(l)) *
                         (Rational(static_cast<long>(l)) + fam.lambda * Rational(2));
    return one_minus_x2 * c.derivative().derivative() + minus_x_term * c.derivative() + c * eig;
}

Poly expand_q00_gegenbauer(unsigned m) { return expand_q0a_gegenbauer(Rational(0), m); }

Poly expand_q0a_gegenbauer(const Rational& a, unsigned N) {
    Poly sum;
    for (unsigned n = 0; n <= N / 2; ++n) {
        const GegenbauerFamily fam = gegenbauer(Rational(static_cast<long>(n)) + a + Rational(1), N - 2 * n);
        sum += Poly::monomial(binomial(-a - Rational(1), n), 2 * n) * fam.c(N - 2 * n).reflected();
    }
    return sum * factorial(N);
}

Poly expand_general_gegenbauer(const Params& params, unsigned N) {
    const QFamily a_fixed = three_term_q(Params{params.alpha, Rational(-1)}, N);
    Poly sum;
    for (unsigned v = 0; v <= N; ++v)
        sum += expand_q0a_gegenbauer(params.a, v) * a_fixed.q(N - v) *
               binomial(Rational(static_cast<long>(N)), v);
    return sum;
}

Poly expand_general_gegenbauer_printed(const Params& params, unsigned N) {
    const QFamily a_fixed = three_term_q(Params{params.alpha, Rational(-1)}, N);
    const Poly inner = expand_q0a_gegenbauer(params.a, N) * (Rational(1) / factorial(N));
    Poly sum;
    for (unsigned v = 0; v <= N; ++v)
        sum += inner * a_fixed.q(N - v) * binomial(Rational(static_cast<long>(N)), v);
    return sum * factorial(N);
}

Poly hyperbolic_gegenbauer_map(const Rational& lambda, unsigned l) {
    const Rational a = lambda - Rational(static_cast<long>(l)) + Rational(1, 2);
    return three_term_q(Params{Rational(0), a}, l).q(l);
}

Poly hyperbolic_gegenbauer_residual(const Rational& lambda, unsigned l) {
    const Rational a = lambda - Rational(static_cast<long>(l)) + Rational(1, 2);
    const Poly y = hyperbolic_gegenbauer_map(lambda, l);
    const Poly minus_x_term{Rational(0), -(lambda * Rational(2) + Rational(1))};
    return sigma_poly() * y.derivative().derivative() + minus_x_term * y.derivative() +
           y * lambda_nu(a, l);
}

std::vector<Poly> laguerre(unsigned max_l, long superscript) {
    const Rational k(superscript);
    std::vector<Poly> fam{Poly::constant(1)};
    fam.reserve(max_l + 1);
    if (max_l >= 1) fam.push_back(Poly{k + Rational(1), Rational(-1)});
    for (unsigned l = 1; l < max_l; ++l) {
        const Rational lr(static_cast<long>(l));
        Poly next = Poly{lr * Rational(2) + k + Rational(1), Rational(-1)} * fam[l] -
                    fam[l - 1] * (lr + k);
        fam.push_back(next * (Rational(1) / (lr + Rational(1))));
    }
    return fam;
}

Poly laguerre_identity_residual(unsigned l) {
    if (l == 0) throw std::invalid_argument("Laguerre identity needs l >= 1");
    const auto plain = laguerre(l, 0);
    const auto assoc = laguerre(l - 1, 1);
    const Rational lr(static_cast<long>(l));
    const Poly x = Poly::monomial(Rational(1), 1);
    return plain[l] * lr - plain[l - 1] * lr + x * assoc[l - 1];
}

namespace {

Rational jacobi_structural_denominator(const Rational& a, const Rational& b, unsigned l) {
    const Rational lr(static_cast<long>(l));
    return Rational(2) * lr * (lr + a + b) * (Rational(2) * lr + a + b - Rational(2));
}

}  // namespace

std::vector<Poly> jacobi(const Rational& a, const Rational& b, unsigned max_l) {
    std::vector<Poly> fam{Poly::constant(1)};
    fam.reserve(max_l + 1);
    if (max_l >= 1)
        fam.push_back(Poly{(a - b) * Rational(1, 2), (a + b + Rational(2)) * Rational(1, 2)});
    for (unsigned l = 2; l <= max_l; ++l) {
        const Rational lr(static_cast<long>(l));
        const Rational den = jacobi_structural_denominator(a, b, l);
        if (den.is_zero())
            throw std::domain_error("Jacobi recurrence denominator vanishes at l = " +
                                    std::to_string(l));
        const Rational s = Rational(2) * lr + a + b;  // 2l+a+b
        const Poly middle{(s - Rational(1)) * (a * a - b * b),
                          (s - Rational(1)) * s * (s - Rational(2))};
        Poly next = middle * fam[l - 1] -
                    fam[l - 2] * (Rational(2) * (lr + a - Rational(1)) * (lr + b - Rational(1)) * s);
        fam.push_back(next * (Rational(1) / den));
    }
    return fam;
}

Poly jacobi_identity_residual(const Rational& a, const Rational& b, unsigned l) {
    if (l == 0) throw std::invalid_argument("Jacobi identity needs l >= 1");
    const Poly p_ab = jacobi(a, b, l)[l];
    const Poly p_bshift = jacobi(a, b + Rational(1), l - 1)[l - 1];
    const Poly p_ashift = jacobi(a + Rational(1), b, l - 1)[l - 1];
    const Rational lr(static_cast<long>(l));
    const Poly one_plus_x{Rational(1), Rational(1)};
    const Poly one_minus_x{Rational(1), Rational(-1)};
    return p_ab * (Rational(2) * lr) - one_plus_x * p_bshift * (a + lr) +
           one_minus_x * p_ashift * (b + lr);
}

bool jacobi_recurrence_degenerate(const Rational& a, const Rational& b, unsigned max_l) {
    for (unsigned l = 2; l <= max_l; ++l)
        if (jacobi_structural_denominator(a, b, l).is_zero()) return true;
    return false;
}

}  // namespace romanovski
