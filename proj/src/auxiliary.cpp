#include "romanovski/auxiliary.hpp"

#include <stdexcept>

#include "romanovski/qfamily.hpp"
#include "romanovski/weight_ring.hpp"

namespace romanovski {

SFamily s_family(const Params& params, unsigned max_l) {
    if (max_l < 1) throw std::invalid_argument("S family starts at l = 1");
    SFamily fam{params, {}};
    fam.polys.reserve(max_l);
    WeightedElement e = WeightedElement::make(params, 1, Poly{Rational(0), Rational(2)});
    for (unsigned l = 1; l <= max_l; ++l) {
        // S_l = sigma^l / w0 * (current element), element = p sigma^-k w0.
        const long exponent = static_cast<long>(l) - static_cast<long>(e.sigma_power);
        if (exponent < 0) throw std::logic_error("S family element exceeded its sigma budget");
        fam.polys.push_back(e.numerator * pow(sigma_poly(), static_cast<unsigned>(exponent)));
        e = we_diff(e);
    }
    return fam;
}

Poly alt1_residual(const Params& params, unsigned l) {
    if (l == 0) throw std::invalid_argument("alt1 residual needs l >= 1");
    const Rational a1 = params.a + Rational(1);
    if (a1.is_zero()) throw std::domain_error("alt1 residual undefined at a = -1");
    const Poly s_l = s_family(params, l).s(l);
    const Poly q_shift = three_term_q(Params{params.alpha, params.a + Rational(1)}, l - 1).q(l - 1);
    const Poly p_l = three_term_q(params, l).q(l);
    return s_l - q_shift * (params.alpha / a1) + p_l * (Rational(1) / a1);
}

Poly p_shift_relation_residual(const Params& params, unsigned l) {
    if (l == 0) throw std::invalid_argument("shift relation needs l >= 1");
    const Poly q_shift = three_term_q(Params{params.alpha, params.a + Rational(1)}, l - 1).q(l - 1);
    const Poly q_next = three_term_q(params, l + 1).q(l + 1);
    // P comes from its own Rodrigues construction so the relation is
    // measured across independent routes rather than cancelling by alias.
    const Poly p_next = rodrigues_q(params, l + 1);
    const Poly sigma_prime{Rational(0), Rational(2)};
    return sigma_prime * q_shift * params.alpha + q_next - p_next;
}

}  // namespace romanovski
