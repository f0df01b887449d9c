#include "rspin/gamma.hpp"

#include <cmath>
#include <stdexcept>

namespace rspin {

double gamma_positive(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("gamma_positive: need x > 0");
    static const double g = 7.0;
    static const double p[9] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    };
    if (x < 0.5) {
        // Reflection keeps the series argument away from the pole region.
        return M_PI / (std::sin(M_PI * x) * gamma_positive(1.0 - x));
    }
    double z = x - 1.0;
    double a = p[0];
    for (int i = 1; i < 9; ++i) a += p[i] / (z + i);
    double t = z + g + 0.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

}  // namespace rspin
