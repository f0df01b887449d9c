#pragma once

#include "rspin/rational.hpp"

#include <vector>

namespace rspin {

/// Unordered collection of internal twists a_1 <= ... <= a_l, each in
/// {0, ..., r-1}.  Stored sorted, so positions give a canonical labelling of
/// the marked points.
class TwistMultiset {
public:
    TwistMultiset(int r, std::vector<int> twists);

    int r() const { return r_; }
    int size() const { return int(twists_.size()); }
    bool empty() const { return twists_.empty(); }
    const std::vector<int>& twists() const { return twists_; }

    int twist_sum() const;
    /// sum a_i mod r, in {0, ..., r-1}.
    int residue() const;
    /// sum of b_i = r - a_i.
    int b_sum() const;
    std::vector<int> b_values() const;
    bool all_internal() const;  // every a_i <= r-2

    friend bool operator==(const TwistMultiset& a, const TwistMultiset& b) {
        return a.r_ == b.r_ && a.twists_ == b.twists_;
    }
    friend bool operator!=(const TwistMultiset& a, const TwistMultiset& b) { return !(a == b); }
    /// Size, then lexicographic on entries (r must agree); canonical part order.
    friend bool operator<(const TwistMultiset& a, const TwistMultiset& b);

    std::string to_string() const;

private:
    int r_;
    std::vector<int> twists_;
};

/// |Aut| of a multiset: product of m! over entry multiplicities m.
Integer aut_order(const TwistMultiset& m);
Integer aut_order(const std::vector<int>& sorted_entries);

/// Partition of {1, ..., l} into disjoint nonempty blocks.  Blocks are sorted
/// internally and listed by smallest element, so the representation is
/// canonical.
struct SetPartition {
    std::vector<std::vector<int>> blocks;

    int block_count() const { return int(blocks.size()); }
    int ground_size() const;

    friend bool operator==(const SetPartition& a, const SetPartition& b) {
        return a.blocks == b.blocks;
    }
    std::string to_string() const;
};

/// All partitions of {1, ..., l} into exactly h blocks, enumerated via
/// restricted-growth strings; deterministic order.
std::vector<SetPartition> set_partitions(int l, int h);
/// All partitions of {1, ..., l} (every block count).
std::vector<SetPartition> set_partitions_all(int l);

/// Partition of a twist multiset into nonempty sub-multisets, parts in
/// canonical order (size, then entries).
struct MultisetPartition {
    std::vector<TwistMultiset> parts;

    int part_count() const { return int(parts.size()); }
    friend bool operator==(const MultisetPartition& a, const MultisetPartition& b) {
        return a.parts == b.parts;
    }
    std::string to_string() const;
};

/// |Aut| of the collection of parts: product of m! over groups of identical
/// parts (entry-level symmetry is aut_order of each part separately).
Integer aut_order(const std::vector<TwistMultiset>& parts);

/// Image of a set partition of {1, ..., l} under position -> twist value.
MultisetPartition image_partition(const TwistMultiset& m, const SetPartition& q);

/// All distinct multiset partitions of m into exactly h parts.
std::vector<MultisetPartition> multiset_partitions(const TwistMultiset& m, int h);

/// Number of set partitions mapping onto p under image_partition:
/// |Aut(I)| / (|Aut(parts)| * prod |Aut(part_j)|).  Throws std::logic_error if
/// the division is not exact (which would mean p does not partition m).
Integer fiber_size(const TwistMultiset& m, const MultisetPartition& p);

Integer stirling_second(int l, int h);
Integer bell_number(int l);

}  // namespace rspin
