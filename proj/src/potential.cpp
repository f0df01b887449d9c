#include "rspin/potential.hpp"

namespace rspin {

DeformedPotential build_deformed_potential(int r) {
    RegistryPtr reg = VarRegistry::x_t(r);
    size_t xi = *reg->x_index();
    Poly w(reg);
    for (const auto& [key, value] : enumerate_nonzero(r)) {
        const int l = key.twists.size();
        Rational coeff = value / Rational(factorial(key.k) * aut_order(key.twists));
        // (-1)^(l-1); the empty multiset (l = 0) flips -r!/r! to +1, which is
        // exactly the leading x^r.
        if ((l - 1) % 2 != 0) coeff = -coeff;
        Poly::Exponents e(reg->size(), 0);
        e[xi] = key.k;
        for (int a : key.twists.twists()) e[*reg->find("t" + std::to_string(a))] += 1;
        w.add_term(e, coeff);
    }
    return DeformedPotential{r, std::move(w)};
}

VersalUnfolding build_versal(int r) {
    RegistryPtr reg = VarRegistry::x_y(r);
    size_t xi = *reg->x_index();
    Poly w = Poly::variable(reg, xi, r);
    for (int d = 0; d <= r - 2; ++d) {
        Poly::Exponents e(reg->size(), 0);
        e[xi] = d;
        e[*reg->find("y" + std::to_string(d))] = 1;
        w.add_term(e, Rational(1));
    }
    return VersalUnfolding{r, std::move(w)};
}

}  // namespace rspin
