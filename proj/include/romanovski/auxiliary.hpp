#pragma once

#include <vector>

#include "romanovski/params.hpp"
#include "romanovski/poly.hpp"

namespace romanovski {

/// Auxiliary family S_l, l >= 1:
///   S_{l+1} = sigma^(l+1)/w0 * d^l/dx^l (sigma' w0 / sigma),
/// built with the weight-ring engine seeded by sigma' sigma^-1 w0.
/// S_1 = sigma' = 2x.
struct SFamily {
    Params params;
    std::vector<Poly> polys;  // polys[l-1] holds S_l

    const Poly& s(std::size_t l) const { return polys.at(l - 1); }
    std::size_t max_l() const { return polys.size(); }
};

SFamily s_family(const Params& params, unsigned max_l);

/// S_l - alpha/(a+1) Q_{l-1}^(alpha,-a-1) + Q_l^(alpha,-a)/(a+1);
/// identically zero. Throws std::domain_error at a = -1.
Poly alt1_residual(const Params& params, unsigned l);

/// Residual of the printed shift relation
///   P_{l+1} = alpha sigma' Q_{l-1}^(alpha,-a-1) + Q_{l+1}^(alpha,-a)
/// with P_{l+1} = Q_{l+1}^(alpha,-a), oriented so the returned value is
/// alpha sigma' Q_{l-1}^(alpha,-a-1) whenever P and Q coincide. Reported,
/// never asserted zero: the relation as printed carries the extra
/// alpha sigma' term.
Poly p_shift_relation_residual(const Params& params, unsigned l);

}  // namespace romanovski
