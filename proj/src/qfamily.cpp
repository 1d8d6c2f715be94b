#include "romanovski/qfamily.hpp"

#include <stdexcept>
#include <string>

namespace romanovski {

namespace {

// alpha - 2x(a + nu + 1)
Poly recursion_linear_term(const Params& params, unsigned nu) {
    return Poly{params.alpha, (params.a + Rational(static_cast<long>(nu)) + Rational(1)) * Rational(-2)};
}

}  // namespace

QFamily three_term_q(const Params& params, unsigned max_nu) {
    QFamily fam{params, {Poly::constant(1)}};
    fam.polys.reserve(max_nu + 1);
    for (unsigned nu = 0; nu < max_nu; ++nu) {
        Poly next = recursion_linear_term(params, nu) * fam.polys[nu];
        if (nu >= 1) {
            const Rational c = Rational(static_cast<long>(nu)) *
                               (params.a * Rational(2) + Rational(static_cast<long>(nu)) + Rational(1));
            next -= sigma_poly() * fam.polys[nu - 1] * c;
        }
        fam.polys.push_back(std::move(next));
    }
    return fam;
}

QFamily recursive_ode_q(const Params& params, unsigned max_nu) {
    QFamily fam{params, {Poly::constant(1)}};
    fam.polys.reserve(max_nu + 1);
    for (unsigned nu = 0; nu < max_nu; ++nu) {
        Poly next = sigma_poly() * fam.polys[nu].derivative() +
                    recursion_linear_term(params, nu) * fam.polys[nu];
        fam.polys.push_back(std::move(next));
    }
    return fam;
}

Rational lambda_nu(const Rational& a, unsigned nu) {
    const Rational n(static_cast<long>(nu));
    return n * (a * Rational(2) + n + Rational(1));
}

Poly basic_ode_residual(const Params& params, unsigned nu, const QFamily& fam) {
    if (nu == 0 || nu > fam.max_nu()) throw std::out_of_range("basic ODE residual: index");
    return fam.q(nu).derivative() + fam.q(nu - 1) * lambda_nu(params.a, nu);
}

Poly sturm_liouville_residual(const Params& params, unsigned nu, const QFamily& fam) {
    if (nu > fam.max_nu()) throw std::out_of_range("Sturm-Liouville residual: index");
    const Poly& q = fam.q(nu);
    const Poly tau{params.alpha, (params.a + Rational(static_cast<long>(nu))) * Rational(-2)};
    return sigma_poly() * q.derivative().derivative() + tau * q.derivative() +
           q * lambda_nu(params.a, nu);
}

Poly p_ode_residual(const Params& params, unsigned l, const QFamily& fam) {
    return sturm_liouville_residual(params, l, fam);
}

WeightedElement self_adjoint_residual(const Params& params, unsigned l, unsigned nu,
                                      const QFamily& fam) {
    if (nu > fam.max_nu()) throw std::out_of_range("self-adjoint residual: index");
    // sigma^(l-nu+1) w_l = sigma^(1-nu) w0: the l dependence cancels in the
    // exponent arithmetic; keeping both terms makes that cancellation
    // explicit per call.
    const long lhs_power = (static_cast<long>(l) - static_cast<long>(nu) + 1) - static_cast<long>(l);
    const long rhs_power = (static_cast<long>(l) - static_cast<long>(nu)) - static_cast<long>(l);
    WeightedElement flux = we_mul_sigma_power(
        WeightedElement::make(params, 0, fam.q(nu).derivative()), lhs_power);
    WeightedElement lhs = we_diff(flux);
    WeightedElement rhs = we_mul_sigma_power(
        WeightedElement::make(params, 0, fam.q(nu) * lambda_nu(params.a, nu)), rhs_power);
    return we_add(lhs, rhs);
}

Poly addition_q(const Params& p1, const Params& p2, unsigned N) {
    const QFamily f1 = three_term_q(p1, N);
    const QFamily f2 = three_term_q(p2, N);
    Poly sum;
    for (unsigned v = 0; v <= N; ++v)
        sum += f1.q(v) * f2.q(N - v) * binomial(Rational(static_cast<long>(N)), v);
    return sum;
}

Poly nfold_addition_q(std::span<const Params> plist, unsigned N) {
    if (plist.empty()) throw std::invalid_argument("n-fold addition: empty parameter list");
    // Pairwise fold of the two-parameter addition, degree by degree; the
    // composed family (sum alpha, sum a + n-1) is never consulted, so the
    // result stays an independent construction.
    std::vector<Poly> acc = three_term_q(plist[0], N).polys;
    for (std::size_t j = 1; j < plist.size(); ++j) {
        const QFamily next = three_term_q(plist[j], N);
        std::vector<Poly> folded(N + 1);
        for (unsigned m = 0; m <= N; ++m)
            for (unsigned v = 0; v <= m; ++v)
                folded[m] += acc[v] * next.q(m - v) * binomial(Rational(static_cast<long>(m)), v);
        acc = std::move(folded);
    }
    return acc[N];
}

Poly decomposition_q(const Params& params, unsigned N) {
    const QFamily alpha_free = three_term_q(Params{Rational(0), params.a}, N);
    const QFamily a_fixed = three_term_q(Params{params.alpha, Rational(-1)}, N);
    Poly sum;
    for (unsigned v = 0; v <= N; ++v)
        sum += alpha_free.q(v) * a_fixed.q(N - v) * binomial(Rational(static_cast<long>(N)), v);
    return sum;
}

Poly parity_check(const Params& params, unsigned nu) {
    const Poly mirrored = three_term_q(Params{-params.alpha, params.a}, nu).q(nu);
    Poly reflected = three_term_q(params, nu).q(nu).reflected();
    if (nu % 2 == 1) reflected = -reflected;
    return mirrored - reflected;
}

Poly power_series_q0(const Rational& a, unsigned N) {
    Poly series = Poly::monomial(Rational(1), N);
    Rational coeff(1);
    for (unsigned mu = 1; mu <= N / 2; ++mu) {
        const Rational den = a * Rational(2) + Rational(2L * mu + 1);
        if (den.is_zero())
            throw std::domain_error("power series coefficient denominator vanishes at mu = " +
                                    std::to_string(mu));
        const Rational num = Rational(static_cast<long>(N) - 2L * mu + 2) *
                             Rational(static_cast<long>(N) - 2L * mu + 1);
        coeff *= -(num / (Rational(2L * mu) * den));
        series += Poly::monomial(coeff, N - 2 * mu);
    }
    return series;
}

Rational q_leading_coefficient(const Rational& a, unsigned nu) {
    Rational lc(1);
    for (unsigned j = 2; j <= nu + 1; ++j) lc *= a * Rational(2) + Rational(static_cast<long>(j));
    if (nu % 2 == 1) lc = -lc;
    return lc;
}

}  // namespace romanovski
