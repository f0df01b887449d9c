#include "rspin/series.hpp"

#include <stdexcept>

namespace rspin {

std::vector<Poly> series_invert(const std::vector<Poly>& maps, RegistryPtr target, int max_deg) {
    if (maps.empty()) throw std::invalid_argument("series_invert: empty system");
    if (max_deg < 1) throw std::invalid_argument("series_invert: need max_deg >= 1");
    RegistryPtr src = maps[0].registry();
    size_t n = maps.size();
    if (src->size() != n || target->size() != n)
        throw std::invalid_argument("series_invert: system size does not match registries");

    // Linear part must be the identity; split off H_d = F_d - y_d.
    std::vector<Poly> higher;
    higher.reserve(n);
    for (size_t d = 0; d < n; ++d) {
        if (*maps[d].registry() != *src)
            throw std::invalid_argument("series_invert: mixed registries in system");
        Poly h(src);
        for (const auto& [e, c] : maps[d].terms()) {
            int deg = 0;
            for (int v : e) deg += v;
            if (deg == 0)
                throw std::invalid_argument("series_invert: constant term present");
            if (deg == 1) {
                size_t var = 0;
                while (e[var] == 0) ++var;
                if (var != d || c != Rational(1))
                    throw std::invalid_argument("series_invert: linear part is not the identity");
                continue;
            }
            h.add_term(e, c);
        }
        higher.push_back(std::move(h));
    }

    std::vector<size_t> all_vars(n);
    for (size_t i = 0; i < n; ++i) all_vars[i] = i;

    std::vector<Poly> g;
    g.reserve(n);
    for (size_t d = 0; d < n; ++d) g.push_back(Poly::variable(target, d));

    // After k passes g is exact modulo degree k+2; H only ever raises degree.
    for (int pass = 1; pass < max_deg; ++pass) {
        std::vector<Poly> next;
        next.reserve(n);
        std::map<size_t, Poly> assign;
        for (size_t d = 0; d < n; ++d) assign.emplace(d, g[d]);
        bool changed = false;
        for (size_t d = 0; d < n; ++d) {
            Poly cand = Poly::variable(target, d) -
                        higher[d].substitute(assign, target).truncate_degree(all_vars, max_deg);
            if (cand != g[d]) changed = true;
            next.push_back(std::move(cand));
        }
        g = std::move(next);
        if (!changed) break;
    }
    return g;
}

}  // namespace rspin
