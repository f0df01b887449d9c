#include "rspin/cycles.hpp"

#include "rspin/gamma.hpp"

#include <cmath>
#include <stdexcept>

namespace rspin {

namespace {

Complex cis(double phi) { return Complex(std::cos(phi), std::sin(phi)); }

Complex zeta_pow(int r, long long e) {
    // e reduced mod r before the trig call keeps large powers accurate.
    long long m = e % r;
    if (m < 0) m += r;
    return cis(2.0 * M_PI * double(m) / double(r));
}

Complex complex_ipow(Complex z, int n) {
    Complex out(1.0, 0.0);
    for (int i = 0; i < n; ++i) out *= z;
    return out;
}

// hbar^s on the branch fixed by the supplied argument.
Complex hbar_power(double hbar_abs, double hbar_arg, double s) {
    if (!(hbar_abs > 0.0)) throw std::invalid_argument("hbar must be nonzero");
    return std::exp(s * std::log(hbar_abs)) * cis(s * hbar_arg);
}

void check_rk(int r, int k) {
    if (r < 2) throw std::invalid_argument("need r >= 2");
    if (k < 0 || k > r - 1) throw std::invalid_argument("monomial exponent out of range");
}

// C_k = e^{i pi (k+1)/r} hbar^{(k+1)/r} Gamma((k+1)/r) (zeta^{k+1} - 1).
Complex c_factor(int r, int k, double hbar_abs, double hbar_arg) {
    double s = double(k + 1) / double(r);
    return cis(M_PI * s) * hbar_power(hbar_abs, hbar_arg, s) * gamma_positive(s) *
           (zeta_pow(r, k + 1) - 1.0);
}

}  // namespace

Complex ray_integral(int r, int j, int k, double hbar_abs, double hbar_arg) {
    check_rk(r, k);
    if (!(hbar_abs > 0.0)) throw std::invalid_argument("ray_integral: hbar must be nonzero");
    const double theta = (M_PI + hbar_arg + 2.0 * M_PI * j) / double(r);
    const Complex dir = cis(theta);
    // x = t dir makes x^r/hbar = -t^r/|hbar|: pure decay, no oscillation.
    const double radius = std::pow(45.0 * std::max(1.0, hbar_abs), 1.0 / double(r));
    auto integrand = [&](double t) -> Complex {
        Complex x = t * dir;
        return complex_ipow(x, k) * std::exp(-std::pow(t, double(r)) / hbar_abs) * dir;
    };
    return integrate_adaptive(integrand, 0.0, radius, 40, 16, kQuadratureTol);
}

Complex ray_integral(int r, int j, int k, Complex hbar) {
    return ray_integral(r, j, k, std::abs(hbar), std::arg(hbar));
}

Complex ray_integral_closed(int r, int j, int k, double hbar_abs, double hbar_arg) {
    check_rk(r, k);
    double s = double(k + 1) / double(r);
    return cis(M_PI * s) * hbar_power(hbar_abs, hbar_arg, s) * zeta_pow(r, (long long)(j) * (k + 1)) *
           gamma_positive(s) / double(r);
}

Complex ray_integral_closed(int r, int j, int k, Complex hbar) {
    return ray_integral_closed(r, j, k, std::abs(hbar), std::arg(hbar));
}

ComplexMatrix pairing_matrix(int r, Complex hbar) {
    ComplexMatrix a(size_t(r - 1), std::vector<Complex>(size_t(r - 1)));
    double habs = std::abs(hbar), harg = std::arg(hbar);
    for (int k = 0; k <= r - 2; ++k) {
        Complex prev = ray_integral(r, 0, k, habs, harg);
        for (int j = 0; j <= r - 2; ++j) {
            Complex next = ray_integral(r, j + 1, k, habs, harg);
            a[size_t(j)][size_t(k)] = next - prev;
            prev = next;
        }
    }
    return a;
}

ComplexMatrix pairing_matrix_closed(int r, Complex hbar) {
    ComplexMatrix a(size_t(r - 1), std::vector<Complex>(size_t(r - 1)));
    double habs = std::abs(hbar), harg = std::arg(hbar);
    for (int j = 0; j <= r - 2; ++j)
        for (int k = 0; k <= r - 2; ++k)
            a[size_t(j)][size_t(k)] =
                c_factor(r, k, habs, harg) * zeta_pow(r, (long long)(j) * (k + 1)) / double(r);
    return a;
}

ComplexMatrix pairing_matrix_inverse(int r, Complex hbar) {
    ComplexMatrix m(size_t(r - 1), std::vector<Complex>(size_t(r - 1)));
    double habs = std::abs(hbar), harg = std::arg(hbar);
    for (int j = 0; j <= r - 2; ++j) {
        Complex cj = c_factor(r, j, habs, harg);
        for (int k = 0; k <= r - 2; ++k)
            m[size_t(j)][size_t(k)] =
                (zeta_pow(r, -(long long)(k) * (j + 1)) - zeta_pow(r, j + 1)) / cj;
    }
    return m;
}

ComplexMatrix scaled_pairing_matrix(int r) {
    ComplexMatrix b(size_t(r - 1), std::vector<Complex>(size_t(r - 1)));
    for (int j = 0; j <= r - 2; ++j)
        for (int k = 0; k <= r - 2; ++k)
            b[size_t(j)][size_t(k)] = zeta_pow(r, (long long)(j) * (k + 1)) / double(r);
    return b;
}

ComplexMatrix scaled_pairing_matrix_inverse(int r) {
    ComplexMatrix m(size_t(r - 1), std::vector<Complex>(size_t(r - 1)));
    for (int j = 0; j <= r - 2; ++j)
        for (int k = 0; k <= r - 2; ++k)
            m[size_t(j)][size_t(k)] = zeta_pow(r, -(long long)(k) * (j + 1)) - zeta_pow(r, j + 1);
    return m;
}

CycleBasis dual_cycle_basis(int r, Complex hbar) {
    return CycleBasis{r, hbar, pairing_matrix_inverse(r, hbar)};
}

double identity_defect(const ComplexMatrix& a, const ComplexMatrix& b) {
    size_t n = a.size();
    if (n == 0 || b.size() != n) throw std::invalid_argument("identity_defect: size mismatch");
    double worst = 0.0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Complex s(0.0, 0.0);
            for (size_t k = 0; k < n; ++k) s += a[i][k] * b[k][j];
            s -= (i == j) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(s));
        }
    return worst;
}

double quadrature_vs_closed_error(int r, Complex hbar) {
    double habs = std::abs(hbar), harg = std::arg(hbar);
    double worst = 0.0;
    for (int j = 0; j <= r - 1; ++j)
        for (int k = 0; k <= r - 2; ++k) {
            Complex q = ray_integral(r, j, k, habs, harg);
            Complex c = ray_integral_closed(r, j, k, habs, harg);
            worst = std::max(worst, std::abs(q - c) / std::max(std::abs(c), 1e-300));
        }
    return worst;
}

double dual_basis_error(int r, Complex hbar) {
    return identity_defect(pairing_matrix_inverse(r, hbar), pairing_matrix(r, hbar));
}

double product_dual_basis_error(const FermatSignature& sig, Complex hbar) {
    if (sig.dimension() != 2)
        throw std::invalid_argument("product_dual_basis_error: two-variable signature expected");
    // The integrand of x^{k1} y^{k2} e^{(x^{r1} + y^{r2})/hbar} over a product
    // of difference cycles factorizes, so the check reduces to the tensor
    // square of the one-variable defect matrices.
    std::vector<ComplexMatrix> defects;
    for (int axis = 0; axis < 2; ++axis) {
        int r = sig.exponents[size_t(axis)];
        ComplexMatrix e = pairing_matrix(r, hbar);
        ComplexMatrix m = pairing_matrix_inverse(r, hbar);
        size_t n = e.size();
        ComplexMatrix prod(n, std::vector<Complex>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Complex s(0.0, 0.0);
                for (size_t k = 0; k < n; ++k) s += m[i][k] * e[k][j];
                prod[i][j] = s;
            }
        defects.push_back(std::move(prod));
    }
    double worst = 0.0;
    const ComplexMatrix& p1 = defects[0];
    const ComplexMatrix& p2 = defects[1];
    for (size_t i1 = 0; i1 < p1.size(); ++i1)
        for (size_t j1 = 0; j1 < p1.size(); ++j1)
            for (size_t i2 = 0; i2 < p2.size(); ++i2)
                for (size_t j2 = 0; j2 < p2.size(); ++j2) {
                    Complex v = p1[i1][j1] * p2[i2][j2];
                    double target = (i1 == j1 && i2 == j2) ? 1.0 : 0.0;
                    worst = std::max(worst, std::abs(v - target));
                }
    return worst;
}

}  // namespace rspin
