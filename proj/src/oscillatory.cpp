#include "rspin/oscillatory.hpp"

#include <stdexcept>

namespace rspin {

FermatSignature::FermatSignature(std::vector<int> exps) : exponents(std::move(exps)) {
    if (exponents.empty()) throw std::invalid_argument("FermatSignature: empty");
    for (int r : exponents)
        if (r < 2) throw std::invalid_argument("FermatSignature: exponents must be >= 2");
}

ReducedForm reduce_monomial(const FermatSignature& sig, const std::vector<int>& exponents) {
    if (exponents.size() != sig.exponents.size())
        throw std::invalid_argument("reduce_monomial: dimension mismatch");
    ReducedForm out;
    out.zero = false;
    out.scalar = Rational(1);
    out.basis.reserve(exponents.size());
    for (size_t i = 0; i < exponents.size(); ++i) {
        const int r = sig.exponents[i];
        const int e = exponents[i];
        if (e < 0) throw std::invalid_argument("reduce_monomial: negative exponent");
        const int m = e / r;
        const int kappa = e % r;
        if (kappa == r - 1) return ReducedForm::make_zero();
        // prod_{q=1..m} (q - 1 + (kappa+1)/r) = prod (r(q-1) + kappa + 1) / r^m
        Integer num = 1;
        for (int q = 1; q <= m; ++q) num *= Integer(r * (q - 1) + kappa + 1);
        Rational factor(num, int_pow(Integer(r), unsigned(m)));
        if (m % 2 != 0) factor = -factor;
        out.scalar *= factor;
        out.hbar_power += m;
        out.basis.push_back(kappa);
    }
    return out;
}

ReducedForm reduce_monomial(int r, long long exponent) {
    if (exponent < 0) throw std::invalid_argument("reduce_monomial: negative exponent");
    return reduce_monomial(FermatSignature({r}), {int(exponent)});
}

std::vector<HbarSeries> expand_integral_all(int r, const Poly& w, int cap) {
    if (r < 2) throw std::invalid_argument("expand_integral_all: need r >= 2");
    if (cap < 0) throw std::invalid_argument("expand_integral_all: negative cap");
    RegistryPtr reg = w.registry();
    auto xi_opt = reg->x_index();
    if (!xi_opt) throw std::invalid_argument("expand_integral_all: registry has no x");
    const size_t xi = *xi_opt;

    Poly p = w - Poly::variable(reg, xi, r);
    for (const auto& [e, c] : p.terms()) {
        int def = 0;
        for (size_t i = 0; i < e.size(); ++i)
            if (i != xi) def += e[i];
        if (def == 0)
            throw std::invalid_argument(
                "expand_integral_all: W - x^r has a term of deformation degree 0");
        if (e[xi] > r - 1)
            throw std::invalid_argument("expand_integral_all: deformation with x-degree >= r");
    }
    p = p.truncate_deformation(cap);

    std::vector<HbarSeries> out(size_t(r - 1), HbarSeries(reg));
    Poly::Exponents unit(reg->size(), 0);
    out[0].add_term(0, unit, Rational(1));  // h = 0 term of e^{(W - x^r)/hbar}

    // Accumulate (W - x^r)^h / (h! hbar^h), reducing each monomial's x-power.
    // Every term of degree h in t has x-degree <= h(r-1), so reduction spends
    // at most h-1 powers of hbar: no term ever lands below hbar^{-1}... in
    // fact h - m >= 1 for every surviving monomial, so phi_{d,j} = 0 for j < 0
    // and phi_{d,0} is untouched beyond the constant above.
    Poly power = Poly::constant(reg, Rational(1));
    Integer h_factorial = 1;
    Poly::Exponents stripped(reg->size(), 0);
    for (int h = 1; h <= cap; ++h) {
        power = (power * p).truncate_deformation(cap);
        if (power.is_zero()) break;
        h_factorial *= h;
        for (const auto& [e, c] : power.terms()) {
            ReducedForm red = reduce_monomial(r, e[xi]);
            if (red.zero) continue;
            const int d = red.basis[0];
            const int j = h - red.hbar_power;
            stripped = e;
            stripped[xi] = 0;
            out[size_t(d)].add_term(j, stripped, c * red.scalar / Rational(h_factorial));
        }
    }
    return out;
}

HbarSeries expand_integral(int r, const Poly& w, int d, int cap) {
    if (d < 0 || d > r - 2) throw std::invalid_argument("expand_integral: basis index out of range");
    return expand_integral_all(r, w, cap)[size_t(d)];
}

}  // namespace rspin
