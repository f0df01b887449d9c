#pragma once

namespace rspin {

/// Gamma function for real x > 0 (reflection handles 0 < x < 0.5).
/// Lanczos approximation, g = 7 with 9 coefficients; relative error is below
/// ~1e-13 on the arguments used here ((k+1)/r with 2 <= r <= 30).
double gamma_positive(double x);

}  // namespace rspin
