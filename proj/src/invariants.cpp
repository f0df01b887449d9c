#include "rspin/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace rspin {

std::optional<int> forced_boundary_count(const TwistMultiset& twists) {
    int k = twists.empty() ? twists.r() : twists.r() - twists.b_sum();
    if (k < 0) return std::nullopt;
    return k;
}

Rational open_invariant(int r, const std::vector<int>& twists, int k) {
    return open_invariant(InvariantKey{r, TwistMultiset(r, twists), k});
}

Rational open_invariant(const InvariantKey& key) {
    if (key.k < 0) throw std::invalid_argument("open_invariant: negative boundary exponent");
    if (key.twists.r() != key.r) throw std::invalid_argument("open_invariant: r mismatch");
    const int r = key.r;
    const int l = key.twists.size();
    const int k = key.k;
    // Dimension condition: r(2l + k - 2) = (r-2)k + 2*sum(a_i).
    if (r * (2 * l + k - 2) != (r - 2) * k + 2 * key.twists.twist_sum()) return Rational(0);
    if (l == 0) return Rational(-r * factorial(k - 1));  // k = r here
    Rational value(factorial(k + l - 1), int_pow(Integer(r), unsigned(l - 1)));
    return (l - 1) % 2 == 0 ? value : -value;
}

bool is_admissible(const TwistMultiset& twists) {
    if (twists.empty() || !twists.all_internal()) return false;
    int b = twists.b_sum();
    return 0 < b && b <= twists.r();
}

std::vector<std::pair<InvariantKey, Rational>> enumerate_nonzero(int r) {
    if (r < 2) throw std::invalid_argument("enumerate_nonzero: need r >= 2");
    std::vector<std::pair<InvariantKey, Rational>> out;
    // Closed boundary term: no internal points, k forced to r.
    out.emplace_back(InvariantKey{r, TwistMultiset(r, {}), r}, Rational(-factorial(r)));

    // Internal twists a_i <= r-2 give b_i >= 2; nonvanishing needs
    // b_sum <= r, so at most floor(r/2) points.  Enumerate non-increasing
    // b-sequences with sum <= r.
    std::vector<int> b;
    auto rec = [&](auto&& self, int max_b, int remaining) -> void {
        if (!b.empty()) {
            std::vector<int> twists;
            twists.reserve(b.size());
            for (int bi : b) twists.push_back(r - bi);
            TwistMultiset ms(r, std::move(twists));
            int k = *forced_boundary_count(ms);
            InvariantKey key{r, std::move(ms), k};
            out.emplace_back(key, open_invariant(key));
        }
        for (int bi = std::min(max_b, remaining); bi >= 2; --bi) {
            b.push_back(bi);
            self(self, bi, remaining - bi);
            b.pop_back();
        }
    };
    rec(rec, r, r);

    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b2) {
        return a.first.twists < b2.first.twists;
    });
    return out;
}

}  // namespace rspin
