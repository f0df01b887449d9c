#pragma once

#include "rspin/poly.hpp"

#include <map>

namespace rspin {

/// Finite Laurent-type series sum_j coeff_j * hbar^{-j} whose coefficients are
/// x-free polynomials in the deformation parameters.
class HbarSeries {
public:
    explicit HbarSeries(RegistryPtr reg) : reg_(std::move(reg)) {
        if (!reg_) throw std::invalid_argument("HbarSeries: null registry");
    }

    const RegistryPtr& registry() const { return reg_; }
    const std::map<int, Poly>& parts() const { return parts_; }

    bool is_zero() const { return parts_.empty(); }

    /// Coefficient of hbar^{-j} (zero polynomial if absent).
    Poly coeff(int j) const {
        auto it = parts_.find(j);
        return it == parts_.end() ? Poly(reg_) : it->second;
    }

    void add(int j, const Poly& p) {
        check_x_free(p);
        auto it = parts_.find(j);
        if (it == parts_.end()) {
            if (!p.is_zero()) parts_.emplace(j, p);
        } else {
            it->second += p;
            if (it->second.is_zero()) parts_.erase(it);
        }
    }

    void add_term(int j, const Poly::Exponents& e, const Rational& c) {
        if (c.is_zero()) return;
        auto it = parts_.find(j);
        if (it == parts_.end()) it = parts_.emplace(j, Poly(reg_)).first;
        it->second.add_term(e, c);
        if (it->second.is_zero()) parts_.erase(it);
    }

    friend bool operator==(const HbarSeries& a, const HbarSeries& b) {
        return *a.reg_ == *b.reg_ && a.parts_ == b.parts_;
    }
    friend bool operator!=(const HbarSeries& a, const HbarSeries& b) { return !(a == b); }

private:
    void check_x_free(const Poly& p) const {
        auto xi = reg_->x_index();
        if (xi && p.degree_in(*xi) > 0)
            throw std::invalid_argument("HbarSeries: coefficient carries the x variable");
    }

    RegistryPtr reg_;
    std::map<int, Poly> parts_;
};

}  // namespace rspin
