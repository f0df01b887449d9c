#include "rspin/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace rspin {

Poly::Poly(RegistryPtr reg) : reg_(std::move(reg)) {
    if (!reg_) throw std::invalid_argument("Poly: null registry");
}

Poly Poly::constant(RegistryPtr reg, const Rational& c) {
    Poly p(std::move(reg));
    if (!c.is_zero()) p.terms_.emplace(Exponents(p.reg_->size(), 0), c);
    return p;
}

Poly Poly::variable(RegistryPtr reg, size_t var, int power) {
    Poly p(std::move(reg));
    if (var >= p.reg_->size()) throw std::invalid_argument("Poly::variable: index out of range");
    if (power < 0) throw std::invalid_argument("Poly::variable: negative power");
    Exponents e(p.reg_->size(), 0);
    e[var] = power;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

Poly Poly::monomial(RegistryPtr reg, Exponents exps, const Rational& c) {
    Poly p(std::move(reg));
    if (exps.size() != p.reg_->size())
        throw std::invalid_argument("Poly::monomial: exponent vector length mismatch");
    for (int e : exps)
        if (e < 0) throw std::invalid_argument("Poly::monomial: negative exponent");
    if (!c.is_zero()) p.terms_.emplace(std::move(exps), c);
    return p;
}

Rational Poly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Poly::require_same_registry(const Poly& o) const {
    if (reg_ != o.reg_ && *reg_ != *o.reg_)
        throw std::invalid_argument("Poly: mixed variable registries");
}

Poly Poly::operator-() const {
    Poly out(reg_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_registry(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same_registry(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.require_same_registry(b);
    Poly out(a.reg_);
    Poly::Exponents e(a.reg_->size());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

Poly operator*(Poly a, const Rational& s) {
    if (s.is_zero()) return Poly(a.reg_);
    for (auto& [e, c] : a.terms_) c *= s;
    return a;
}

Poly Poly::pow(unsigned n) const {
    Poly out = constant(reg_, Rational(1));
    for (unsigned i = 0; i < n; ++i) out = out * *this;
    return out;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.reg_ != b.reg_ && *a.reg_ != *b.reg_) return false;
    return a.terms_ == b.terms_;
}

int Poly::total_degree() const {
    int best = -1;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int x : e) d += x;
        best = std::max(best, d);
    }
    return best;
}

int Poly::deformation_degree() const {
    auto xi = reg_->x_index();
    int best = -1;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (size_t i = 0; i < e.size(); ++i)
            if (!xi || i != *xi) d += e[i];
        best = std::max(best, d);
    }
    return best;
}

int Poly::degree_in(size_t var) const {
    int best = 0;
    for (const auto& [e, c] : terms_) best = std::max(best, e.at(var));
    return best;
}

Poly Poly::truncate_degree(const std::vector<size_t>& vars, int max_deg) const {
    Poly out(reg_);
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (size_t v : vars) d += e.at(v);
        if (d <= max_deg) out.terms_.emplace(e, c);
    }
    return out;
}

Poly Poly::truncate_deformation(int max_deg) const {
    std::vector<size_t> vars;
    auto xi = reg_->x_index();
    for (size_t i = 0; i < reg_->size(); ++i)
        if (!xi || i != *xi) vars.push_back(i);
    return truncate_degree(vars, max_deg);
}

Poly Poly::substitute(const std::map<size_t, Poly>& assignment, RegistryPtr target) const {
    if (!target) throw std::invalid_argument("Poly::substitute: null target registry");
    for (const auto& [var, value] : assignment) {
        if (var >= reg_->size())
            throw std::invalid_argument("Poly::substitute: assigned index out of range");
        if (value.registry() != target && *value.registry() != *target)
            throw std::invalid_argument("Poly::substitute: assignment not over target registry");
    }
    // Unassigned variables map by name; resolved lazily so that variables
    // absent from the target are fine as long as they never actually occur.
    std::vector<std::optional<size_t>> direct(reg_->size());
    for (size_t i = 0; i < reg_->size(); ++i)
        if (!assignment.count(i)) direct[i] = target->find(reg_->var(i).name);

    std::map<std::pair<size_t, int>, Poly> power_cache;
    auto cached_pow = [&](size_t var, int e) -> const Poly& {
        auto key = std::make_pair(var, e);
        auto it = power_cache.find(key);
        if (it == power_cache.end())
            it = power_cache.emplace(key, assignment.at(var).pow(unsigned(e))).first;
        return it->second;
    };

    Poly out(target);
    for (const auto& [exps, c] : terms_) {
        Poly term = Poly::constant(target, c);
        Exponents passthrough(target->size(), 0);
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (assignment.count(i)) {
                term = term * cached_pow(i, exps[i]);
            } else if (direct[i]) {
                passthrough[*direct[i]] += exps[i];
            } else {
                throw std::invalid_argument("Poly::substitute: variable '" + reg_->var(i).name +
                                            "' has no image in target registry");
            }
        }
        bool any = false;
        for (int e : passthrough)
            if (e) { any = true; break; }
        if (any) term = term * Poly::monomial(target, passthrough, Rational(1));
        out += term;
    }
    return out;
}

std::vector<Poly::TermMap::const_iterator> Poly::ordered_terms() const {
    auto xi = reg_->x_index();
    auto def_deg = [&](const Exponents& e) {
        int d = 0;
        for (size_t i = 0; i < e.size(); ++i)
            if (!xi || i != *xi) d += e[i];
        return d;
    };
    auto x_deg = [&](const Exponents& e) { return xi ? e[*xi] : 0; };

    std::vector<TermMap::const_iterator> order;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) order.push_back(it);
    std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
        int da = def_deg(a->first), db = def_deg(b->first);
        if (da != db) return da < db;
        int xa = x_deg(a->first), xb = x_deg(b->first);
        if (xa != xb) return xa > xb;
        return a->first > b->first;
    });
    return order;
}

namespace {

std::string render(const Poly& p, bool latex) {
    if (p.is_zero()) return "0";
    const auto& reg = *p.registry();
    auto xi = reg.x_index();

    std::string out;
    bool first = true;
    for (const auto& it : p.ordered_terms()) {
        const auto& [exps, c] = *it;
        Rational a = c.abs();
        if (first) {
            if (c.is_negative()) out += "-";
            first = false;
        } else {
            out += c.is_negative() ? " - " : " + ";
        }

        std::vector<std::string> factors;
        auto emit_var = [&](size_t i) {
            if (exps[i] == 0) return;
            std::string f = latex ? reg.latex_name(i) : reg.var(i).name;
            if (exps[i] != 1)
                f += latex ? "^{" + std::to_string(exps[i]) + "}" : "^" + std::to_string(exps[i]);
            factors.push_back(std::move(f));
        };
        // Deformation variables first, x last: coefficients read like
        // "t2*x^2" rather than "x^2*t2".
        for (size_t i = 0; i < exps.size(); ++i)
            if (!xi || i != *xi) emit_var(i);
        if (xi) emit_var(*xi);

        bool unit = (a == Rational(1)) && !factors.empty();
        if (!unit) {
            if (latex && !a.is_integer())
                out += "\\tfrac{" + a.numerator().str() + "}{" + a.denominator().str() + "}";
            else
                out += a.to_string();
        }
        for (size_t f = 0; f < factors.size(); ++f) {
            if (!latex && (f > 0 || !unit)) out += "*";
            out += factors[f];
        }
    }
    return out;
}

}  // namespace

std::string Poly::to_text() const { return render(*this, false); }
std::string Poly::to_latex() const { return render(*this, true); }

}  // namespace rspin
