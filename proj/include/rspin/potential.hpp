#pragma once

#include "rspin/invariants.hpp"
#include "rspin/poly.hpp"

namespace rspin {

/// Superpotential x^r deformed by the generating function of disk invariants:
/// the coefficient of t_{a_1}...t_{a_l} x^k is
/// (-1)^(l-1) <a_1...a_l | k> / (k! |Aut|), over the x_t registry.
struct DeformedPotential {
    int r;
    Poly poly;
};

DeformedPotential build_deformed_potential(int r);

/// Miniversal deformation x^r + y_{r-2} x^{r-2} + ... + y_0, over x_y.
struct VersalUnfolding {
    int r;
    Poly poly;
};

VersalUnfolding build_versal(int r);

}  // namespace rspin
