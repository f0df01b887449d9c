#include "rspin/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rspin {

TwistMultiset::TwistMultiset(int r, std::vector<int> twists) : r_(r), twists_(std::move(twists)) {
    if (r_ < 2) throw std::invalid_argument("TwistMultiset: need r >= 2");
    for (int a : twists_)
        if (a < 0 || a >= r_)
            throw std::invalid_argument("TwistMultiset: twist out of range [0, r-1]");
    std::sort(twists_.begin(), twists_.end());
}

int TwistMultiset::twist_sum() const {
    int s = 0;
    for (int a : twists_) s += a;
    return s;
}

int TwistMultiset::residue() const { return twist_sum() % r_; }

int TwistMultiset::b_sum() const { return r_ * size() - twist_sum(); }

std::vector<int> TwistMultiset::b_values() const {
    std::vector<int> b;
    b.reserve(twists_.size());
    for (int a : twists_) b.push_back(r_ - a);
    return b;
}

bool TwistMultiset::all_internal() const {
    for (int a : twists_)
        if (a > r_ - 2) return false;
    return true;
}

bool operator<(const TwistMultiset& a, const TwistMultiset& b) {
    if (a.r_ != b.r_) throw std::invalid_argument("TwistMultiset: comparing different r");
    if (a.twists_.size() != b.twists_.size()) return a.twists_.size() < b.twists_.size();
    return a.twists_ < b.twists_;
}

std::string TwistMultiset::to_string() const {
    std::string out = "{";
    for (size_t i = 0; i < twists_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(twists_[i]);
    }
    return out + "}";
}

Integer aut_order(const std::vector<int>& sorted_entries) {
    Integer out = 1;
    size_t i = 0;
    while (i < sorted_entries.size()) {
        size_t j = i;
        while (j < sorted_entries.size() && sorted_entries[j] == sorted_entries[i]) ++j;
        out *= factorial(int(j - i));
        i = j;
    }
    return out;
}

Integer aut_order(const TwistMultiset& m) { return aut_order(m.twists()); }

int SetPartition::ground_size() const {
    int n = 0;
    for (const auto& b : blocks) n += int(b.size());
    return n;
}

std::string SetPartition::to_string() const {
    std::string out = "{";
    for (size_t j = 0; j < blocks.size(); ++j) {
        if (j) out += ",";
        out += "{";
        for (size_t i = 0; i < blocks[j].size(); ++i) {
            if (i) out += ",";
            out += std::to_string(blocks[j][i]);
        }
        out += "}";
    }
    return out + "}";
}

static SetPartition from_rgs(const std::vector<int>& rgs, int h) {
    SetPartition p;
    p.blocks.assign(h, {});
    for (size_t i = 0; i < rgs.size(); ++i) p.blocks[rgs[i]].push_back(int(i) + 1);
    return p;  // blocks already sorted and ordered by least element
}

std::vector<SetPartition> set_partitions(int l, int h) {
    if (l < 0 || h < 0) throw std::invalid_argument("set_partitions: negative argument");
    std::vector<SetPartition> out;
    if (h == 0) {
        if (l == 0) out.push_back(SetPartition{});
        return out;
    }
    if (l < h) return out;
    // Restricted-growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
    std::vector<int> rgs(l, 0);
    auto rec = [&](auto&& self, int i, int maxv) -> void {
        if (i == l) {
            if (maxv + 1 == h) out.push_back(from_rgs(rgs, h));
            return;
        }
        // Prune: remaining positions must be able to reach h blocks.
        if (maxv + 1 + (l - i) < h) return;
        int cap = std::min(maxv + 1, h - 1);
        for (int v = 0; v <= cap; ++v) {
            rgs[i] = v;
            self(self, i + 1, std::max(maxv, v));
        }
    };
    rgs[0] = 0;
    rec(rec, 1, 0);
    return out;
}

std::vector<SetPartition> set_partitions_all(int l) {
    std::vector<SetPartition> out;
    for (int h = (l == 0 ? 0 : 1); h <= l; ++h) {
        auto part = set_partitions(l, h);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::string MultisetPartition::to_string() const {
    std::string out = "{";
    for (size_t j = 0; j < parts.size(); ++j) {
        if (j) out += ",";
        out += parts[j].to_string();
    }
    return out + "}";
}

Integer aut_order(const std::vector<TwistMultiset>& parts) {
    Integer out = 1;
    size_t i = 0;
    while (i < parts.size()) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        out *= factorial(int(j - i));
        i = j;
    }
    return out;
}

MultisetPartition image_partition(const TwistMultiset& m, const SetPartition& q) {
    if (q.ground_size() != m.size())
        throw std::invalid_argument("image_partition: partition of the wrong ground set");
    MultisetPartition p;
    for (const auto& block : q.blocks) {
        std::vector<int> vals;
        vals.reserve(block.size());
        for (int i : block) vals.push_back(m.twists().at(size_t(i) - 1));
        p.parts.emplace_back(m.r(), std::move(vals));
    }
    std::sort(p.parts.begin(), p.parts.end());
    return p;
}

std::vector<MultisetPartition> multiset_partitions(const TwistMultiset& m, int h) {
    std::vector<MultisetPartition> out;
    for (const auto& q : set_partitions(m.size(), h)) {
        MultisetPartition p = image_partition(m, q);
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    }
    return out;
}

Integer fiber_size(const TwistMultiset& m, const MultisetPartition& p) {
    // Sanity: parts must reassemble m.
    std::vector<int> all;
    for (const auto& part : p.parts) {
        if (part.r() != m.r()) throw std::logic_error("fiber_size: part with mismatched r");
        all.insert(all.end(), part.twists().begin(), part.twists().end());
    }
    std::sort(all.begin(), all.end());
    if (all != m.twists()) throw std::logic_error("fiber_size: parts do not partition the multiset");

    Integer denom = aut_order(p.parts);
    for (const auto& part : p.parts) denom *= aut_order(part);
    Integer num = aut_order(m);
    if (num % denom != 0) throw std::logic_error("fiber_size: non-integral count");
    return num / denom;
}

Integer stirling_second(int l, int h) {
    if (l < 0 || h < 0) throw std::invalid_argument("stirling_second: negative argument");
    if (h > l) return 0;
    if (l == 0) return 1;  // h == 0 here
    if (h == 0) return 0;
    std::vector<Integer> row(size_t(h) + 1, 0);
    row[0] = 1;  // S(0, 0)
    for (int n = 1; n <= l; ++n) {
        for (int k = std::min(n, h); k >= 1; --k) row[k] = k * row[k] + row[k - 1];
        row[0] = 0;
    }
    return row[h];
}

Integer bell_number(int l) {
    Integer total = 0;
    for (int h = 0; h <= l; ++h) total += stirling_second(l, h);
    return total;
}

}  // namespace rspin
