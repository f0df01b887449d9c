#pragma once

#include "rspin/hbar_series.hpp"
#include "rspin/poly.hpp"

#include <vector>

namespace rspin {

/// Exponents (r_1, ..., r_n) of a product singularity x_1^{r_1}+...+x_n^{r_n}.
struct FermatSignature {
    std::vector<int> exponents;

    explicit FermatSignature(std::vector<int> exps);
    int dimension() const { return int(exponents.size()); }
};

/// Result of pushing a monomial form into the canonical basis of the twisted
/// de Rham quotient: either zero, or scalar * hbar^{hbar_power} * x^basis with
/// every basis exponent in {0, ..., r_i - 2}.
struct ReducedForm {
    bool zero = true;
    std::vector<int> basis;
    int hbar_power = 0;
    Rational scalar;

    static ReducedForm make_zero() { return ReducedForm{}; }
};

/// Reduction rules along each axis: residue r-1 kills the term (x^{r-1} dx is
/// exact against e^{x^r/hbar}); otherwise x^{mr+kappa} descends to
/// (-1)^m hbar^m prod_{i=1..m} (i - 1 + (kappa+1)/r) * x^kappa.
ReducedForm reduce_monomial(const FermatSignature& sig, const std::vector<int>& exponents);
/// One-variable convenience.
ReducedForm reduce_monomial(int r, long long exponent);

/// Coefficients phi_{d,j} of the expansion
///   integral over the d-th cycle of e^{W/hbar} dx  ~  sum_j phi_{d,j} hbar^{-j}
/// relative to the normalization that sends x^d to the d-th flat unit.
/// W must be x^r plus terms of positive deformation degree with x-degree
/// <= r-1; the t-degree of every output is capped at `cap`.
HbarSeries expand_integral(int r, const Poly& w, int d, int cap);

/// All residues d = 0, ..., r-2 in one pass over the powers of (W - x^r).
std::vector<HbarSeries> expand_integral_all(int r, const Poly& w, int cap);

}  // namespace rspin
