#pragma once

#include "rspin/combinatorics.hpp"
#include "rspin/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace rspin {

/// Index of a disk invariant: l internal twists plus k+1 boundary points,
/// encoded by the multiset of twists and k >= 0.
struct InvariantKey {
    int r;
    TwistMultiset twists;
    int k;

    friend bool operator==(const InvariantKey& a, const InvariantKey& b) {
        return a.r == b.r && a.twists == b.twists && a.k == b.k;
    }
};

/// Boundary-point count forced by the dimension condition
/// r(2l + k - 2) = (r-2)k + 2*sum(a_i): solving gives k = r - b_sum for l >= 1
/// and k = r for l = 0.  Returns nullopt when that k would be negative.
std::optional<int> forced_boundary_count(const TwistMultiset& twists);

/// Closed-form disk invariant with k+1 boundary marked points:
///   (k + l - 1)! / (-r)^(l-1)  when the dimension constraint holds,
///   0 otherwise.
/// For l = 0 the constraint forces k = r and the value is -r * (k-1)! = -r!.
Rational open_invariant(int r, const std::vector<int>& twists, int k);
Rational open_invariant(const InvariantKey& key);

/// Internal twists (all a_i <= r-2) with 0 < b_sum <= r; exactly the multisets
/// that contribute a monomial to the deformed potential.
bool is_admissible(const TwistMultiset& twists);

/// All (key, value) pairs with nonzero invariant, internal twists and the
/// closed l = 0 term; sorted by (l, twists).  Finite by the bound b_sum <= r.
std::vector<std::pair<InvariantKey, Rational>> enumerate_nonzero(int r);

}  // namespace rspin
