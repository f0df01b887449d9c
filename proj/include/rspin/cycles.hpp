#pragma once

#include "rspin/oscillatory.hpp"
#include "rspin/quadrature.hpp"

#include <complex>
#include <vector>

namespace rspin {

using ComplexMatrix = std::vector<std::vector<Complex>>;

/// Tolerances for the floating-point cycle checks.  kQuadratureTol gates the
/// panel-refinement convergence estimate (exit code 3 surface); the other two
/// gate the verification identities themselves.
inline constexpr double kQuadratureTol = 1e-9;
inline constexpr double kLinearAlgebraTol = 1e-10;
inline constexpr double kEndToEndTol = 1e-8;

/// Integral of x^k e^{x^r/hbar} dx over the descent ray
/// { t e^{i theta_j} : t >= 0 },  theta_j = (pi + arg hbar + 2 pi j) / r,
/// along which x^r/hbar = -t^r/|hbar|.  Numerical quadrature in t.
/// hbar is passed as (modulus, argument) so branch conventions are explicit;
/// the principal branch corresponds to arg in (-pi, pi].
Complex ray_integral(int r, int j, int k, double hbar_abs, double hbar_arg);
Complex ray_integral(int r, int j, int k, Complex hbar);

/// Closed form of the same integral:
///   (1/r) e^{i pi (k+1)/r} hbar^{(k+1)/r} zeta^{j(k+1)} Gamma((k+1)/r),
/// zeta = e^{2 pi i / r}, hbar^s = exp(s (ln|hbar| + i arg hbar)).
Complex ray_integral_closed(int r, int j, int k, double hbar_abs, double hbar_arg);
Complex ray_integral_closed(int r, int j, int k, Complex hbar);

/// Pairing of the bounded difference cycles (ray j+1 minus ray j) against the
/// monomials x^k: an (r-1) x (r-1) matrix over j, k in {0, ..., r-2}.
ComplexMatrix pairing_matrix(int r, Complex hbar);          // quadrature
ComplexMatrix pairing_matrix_closed(int r, Complex hbar);   // (1/r) C_k zeta^{j(k+1)}
/// Inverse in closed form: (1/C_j) (zeta^{-k(j+1)} - zeta^{j+1}) with
/// C_j = e^{i pi (j+1)/r} hbar^{(j+1)/r} Gamma((j+1)/r) (zeta^{j+1} - 1).
ComplexMatrix pairing_matrix_inverse(int r, Complex hbar);

/// hbar-independent part B_{jk} = zeta^{j(k+1)} / r and its exact inverse
/// zeta^{-k(j+1)} - zeta^{j+1}.
ComplexMatrix scaled_pairing_matrix(int r);
ComplexMatrix scaled_pairing_matrix_inverse(int r);

/// Coefficients expressing the dual basis (pairing = identity) in terms of
/// the difference cycles: rows of the inverse pairing matrix.
struct CycleBasis {
    int r = 0;
    Complex hbar;
    ComplexMatrix dual_coefficients;
};

CycleBasis dual_cycle_basis(int r, Complex hbar);

/// max |(a b)_{ij} - delta_{ij}| for square matrices.
double identity_defect(const ComplexMatrix& a, const ComplexMatrix& b);

/// max entrywise relative gap between quadrature and closed-form pairings.
double quadrature_vs_closed_error(int r, Complex hbar);

/// Dual coefficients (closed form) against the quadrature pairing.
double dual_basis_error(int r, Complex hbar);

/// Two-variable product singularity x^{r1} + y^{r2}: the pairing factorizes,
/// so the tensor of 1-d duals must pair to the Kronecker tensor.  Returns the
/// max deviation, with each factor evaluated by quadrature.
double product_dual_basis_error(const FermatSignature& sig, Complex hbar);

}  // namespace rspin
