#pragma once

#include "rspin/poly.hpp"

#include <vector>

namespace rspin {

/// Inverts a formal coordinate change t_d = F_d(y) whose linear part is the
/// identity (F_d = y_d + higher order, no constant term).  Returns G with
/// y_d = G_d(t) over `target`, satisfying F(G(t)) = t modulo total degree
/// > max_deg.  Fixed-point iteration G <- t - H(G) with H = F - id.
std::vector<Poly> series_invert(const std::vector<Poly>& maps, RegistryPtr target, int max_deg);

}  // namespace rspin
