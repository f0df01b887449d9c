#include "rspin/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace rspin {

static GaussLegendreRule build_rule(int n) {
    if (n < 2) throw std::invalid_argument("GaussLegendreRule: order must be >= 2");
    GaussLegendreRule rule;
    rule.nodes.resize(size_t(n));
    rule.weights.resize(size_t(n));
    for (int i = 0; i < n; ++i) {
        // Standard initial guess, then Newton on P_n computed by recurrence.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[size_t(i)] = x;
        rule.weights[size_t(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

const GaussLegendreRule& GaussLegendreRule::of_order(int n) {
    static std::map<int, GaussLegendreRule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
    return it->second;
}

Complex integrate_panels(const std::function<Complex(double)>& f, double a, double b, int panels,
                         int order) {
    const GaussLegendreRule& rule = GaussLegendreRule::of_order(order);
    const double width = (b - a) / panels;
    Complex total(0.0, 0.0);
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * width;
        const double half = 0.5 * width;
        Complex panel(0.0, 0.0);
        for (size_t i = 0; i < rule.nodes.size(); ++i)
            panel += rule.weights[i] * f(mid + half * rule.nodes[i]);
        total += panel * half;
    }
    return total;
}

Complex integrate_adaptive(const std::function<Complex(double)>& f, double a, double b, int panels,
                           int order, double rel_tol) {
    Complex coarse = integrate_panels(f, a, b, panels, order);
    Complex fine = integrate_panels(f, a, b, 2 * panels, order);
    double scale = std::max(std::abs(fine), 1.0);
    if (std::abs(fine - coarse) > rel_tol * scale)
        throw QuadratureError("quadrature failed to converge under panel refinement");
    return fine;
}

}  // namespace rspin
