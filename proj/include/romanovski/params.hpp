#pragma once

#include "romanovski/rational.hpp"

namespace romanovski {

/// The (alpha, a) pair selecting a polynomial family Q_nu^(alpha,-a).
/// The superscript -a convention follows the weight sigma^-(a+1) e^(-alpha arccot x).
struct Params {
    Rational alpha;
    Rational a;

    bool operator==(const Params&) const = default;
};

}  // namespace romanovski
