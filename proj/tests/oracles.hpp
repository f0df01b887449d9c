#pragma once

// Independent re-derivations used only by the tests.  Everything here is
// deliberately written the "dumb" way (scans, single-step rewrites, textbook
// formulas) so that agreement with the library is meaningful.

#include "rspin/combinatorics.hpp"
#include "rspin/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

namespace oracle {

using rspin::Integer;
using rspin::Rational;

// All (twists, k) with nonzero invariant found by scanning every multiset of
// internal twists with l <= l_max and every k <= k_max against the dimension
// condition r(2l + k - 2) = (r-2)k + 2 sum(a).
struct ScanHit {
    std::vector<int> twists;  // sorted
    int k;
    Rational value;
};

inline std::vector<ScanHit> brute_force_nonzero(int r, int l_max, int k_max) {
    std::vector<ScanHit> hits;
    std::vector<int> twists;
    auto value_of = [&](int l, int k) -> Rational {
        if (l == 0) return Rational(-r * rspin::factorial(k - 1));
        Rational v(rspin::factorial(k + l - 1),
                   rspin::int_pow(Integer(r), unsigned(l - 1)));
        return (l - 1) % 2 == 0 ? v : -v;
    };
    auto visit = [&](auto&& self, int min_twist) -> void {
        int sum = 0;
        for (int a : twists) sum += a;
        const int l = int(twists.size());
        for (int k = 0; k <= k_max; ++k)
            if (r * (2 * l + k - 2) == (r - 2) * k + 2 * sum)
                hits.push_back({twists, k, value_of(l, k)});
        if (l == l_max) return;
        for (int a = min_twist; a <= r - 2; ++a) {
            twists.push_back(a);
            self(self, a);
            twists.pop_back();
        }
    };
    visit(visit, 0);
    std::sort(hits.begin(), hits.end(), [](const ScanHit& a, const ScanHit& b) {
        if (a.twists.size() != b.twists.size()) return a.twists.size() < b.twists.size();
        if (a.twists != b.twists) return a.twists < b.twists;
        return a.k < b.k;
    });
    return hits;
}

// One-variable reduction by repeated single steps:
//   x^e -> 0                          if e = r-1 mod r reached at e < r
//   x^e -> -(e - r + 1)/r * hbar x^{e-r}   for e >= r   (one step)
// Terminates at e <= r-2 or at zero; the library computes the same thing as
// one closed-form product.
struct StepReduction {
    bool zero;
    int basis;
    int hbar_power;
    Rational scalar;
};

inline StepReduction step_reduce(int r, int e) {
    Rational scalar(1);
    int power = 0;
    while (e >= r) {
        scalar *= Rational(Integer(-(e - r + 1)), Integer(r));
        power += 1;
        e -= r;
    }
    if (e == r - 1) return {true, 0, 0, Rational(0)};
    return {false, e, power, scalar};
}

// Stirling number of the second kind via the explicit inclusion-exclusion
// formula (the library uses the triangular recurrence instead).
inline Integer stirling_formula(int l, int h) {
    if (h > l) return 0;
    if (l == 0 && h == 0) return 1;
    if (h == 0) return 0;
    auto binom = [](int n, int k) {
        Integer out = 1;
        for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
        return out;
    };
    Integer sum = 0;
    for (int i = 0; i <= h; ++i) {
        Integer term = binom(h, i) * rspin::int_pow(Integer(h - i), unsigned(l));
        sum += (i % 2 == 0) ? term : -term;
    }
    return sum / rspin::factorial(h);
}

// Bell numbers via the Bell triangle.
inline Integer bell_triangle(int l) {
    std::vector<Integer> row = {1};
    for (int n = 1; n <= l; ++n) {
        std::vector<Integer> next = {row.back()};
        for (const Integer& v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

// Exhaustive fiber count: how many set partitions of {1..l} (positions of the
// sorted multiset) map to the given multiset partition.
inline Integer count_fiber(const rspin::TwistMultiset& m, const rspin::MultisetPartition& p) {
    Integer count = 0;
    for (const auto& q : rspin::set_partitions(m.size(), p.part_count()))
        if (rspin::image_partition(m, q) == p) ++count;
    return count;
}

}  // namespace oracle
