#pragma once

#include "rspin/combinatorics.hpp"
#include "rspin/oscillatory.hpp"
#include "rspin/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rspin {

/// First defect found while checking the expansion of one cycle integral.
struct PrimitivityFailure {
    int d = 0;          // dual-basis index
    int j = 0;          // hbar^{-j} slot where the defect sits
    std::string monomial;
    std::string coefficient;
};

struct BasisVerdict {
    int d = 0;
    bool primitive = false;  // phi_{d,j} = 0 for j < 0 and phi_{d,0} = [d == 0]
    bool flat = false;       // phi_{d,1} = t_d
    Poly phi0;
    Poly phi1;

    BasisVerdict(int d_, Poly p0, Poly p1)
        : d(d_), phi0(std::move(p0)), phi1(std::move(p1)) {}
};

struct PrimitivityReport {
    int r = 0;
    int cap = 0;
    bool primitive = false;
    bool flat = false;
    std::vector<BasisVerdict> per_basis;
    std::optional<PrimitivityFailure> first_failure;
};

/// Expands every dual-cycle integral of e^{W_t/hbar} against the canonically
/// deformed potential and checks, exactly and degree-by-degree up to `cap`:
/// no positive powers of hbar, constant term delta_{d,0}, and first-order
/// term t_d.  This is the flat-coordinate statement for the x^r model.
PrimitivityReport verify_flat_coordinates(int r, int cap);

/// Flat coordinates of the versal family: t_d = F_d(y) with F_d = phi_{d,1}
/// of x^r + sum y_d x^d, over the y-only registry, truncated at `cap`.
std::vector<Poly> versal_flat_map(int r, int cap);

/// Inverts the versal flat map and substitutes it into the versal unfolding:
/// an oracle for the deformed potential that never sees an invariant.
Poly flat_potential_from_versal(int r, int cap);

/// Aggregated obstruction sum |Aut(I)| * Lambda_I for an admissible multiset
/// with at least two points: over all set partitions Q of the marked points,
///   (-1)^{h-1} prod_{j=1..h-1} (jr + 1 - b_I)
///            * prod_blocks prod_{i=1..|block|-1} (r - b_block + i),
/// all divided by r^{l-1}.  Vanishes identically; its vanishing is what makes
/// the t-coordinates flat beyond first order.
Rational lambda_obstruction(int r, const TwistMultiset& twists);

/// Same quantity assembled the way it arises in the expansion: a sum over
/// multiset partitions weighted by 1/|Aut| and invariant values (Gamma-ratio
/// coefficients).  Used to cross-check the set-partition route.
Rational lambda_obstruction_via_partitions(int r, const TwistMultiset& twists);

/// Contribution of one set partition as a polynomial in formal b_1, ..., b_l
/// (b variables indexed by the elements appearing in Q; b_I is their sum).
Poly partition_contribution(int r, const SetPartition& q, RegistryPtr b_registry);

/// The full obstruction as a polynomial in b_1, ..., b_l; identically zero.
Poly lambda_obstruction_symbolic(int r, int l);

/// Structural recursion behind the vanishing: summing contributions of all
/// partitions of [l] that restrict to Q on [l-1], then setting b_l = 0, gives
/// (l-2) * Cont(Q).  Checked for every Q over [l-1].
bool contribution_recursion_holds(int r, int l);

}  // namespace rspin
