#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace rspin {

using Complex = std::complex<double>;

/// Raised when panel refinement fails to stabilize an integral.
struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Gauss-Legendre nodes/weights on [-1, 1], computed once per order by Newton
/// iteration on the Legendre recurrence (deterministic, no tables).
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    static const GaussLegendreRule& of_order(int n);
};

/// Composite Gauss-Legendre over [a, b] split into `panels` equal panels.
Complex integrate_panels(const std::function<Complex(double)>& f, double a, double b, int panels,
                         int order);

/// Integrates with `panels` and `2 * panels`, returns the finer result, and
/// throws QuadratureError if the two disagree beyond rel_tol (relative to the
/// finer value, absolute fallback near zero).
Complex integrate_adaptive(const std::function<Complex(double)>& f, double a, double b, int panels,
                           int order, double rel_tol);

}  // namespace rspin
