#pragma once

#include "rspin/rational.hpp"
#include "rspin/var_registry.hpp"

#include <map>
#include <vector>

namespace rspin {

/// Sparse multivariate polynomial over Rational, exponents stored positionally
/// against a VarRegistry.  Zero coefficients are never stored, so equality is
/// map equality.
class Poly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational>;

    explicit Poly(RegistryPtr reg);

    static Poly constant(RegistryPtr reg, const Rational& c);
    static Poly variable(RegistryPtr reg, size_t var, int power = 1);
    static Poly monomial(RegistryPtr reg, Exponents exps, const Rational& c);

    const RegistryPtr& registry() const { return reg_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    /// Coefficient of the given exponent vector (zero if absent).
    Rational coeff(const Exponents& e) const;

    /// In-place fused add of c * x^e; erases the entry if it cancels to zero.
    void add_term(const Exponents& e, const Rational& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& s);
    friend Poly operator*(const Rational& s, Poly a) { return std::move(a) * s; }

    Poly pow(unsigned n) const;

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Total degree over all variables (-1 for the zero polynomial).
    int total_degree() const;
    /// Total degree counting only non-FormalX variables (-1 for zero).
    int deformation_degree() const;
    /// Largest exponent of variable `var` in any term (0 for zero).
    int degree_in(size_t var) const;

    /// Drops every term whose summed exponent over `vars` exceeds `max_deg`.
    Poly truncate_degree(const std::vector<size_t>& vars, int max_deg) const;
    /// Same, over all non-FormalX variables.
    Poly truncate_deformation(int max_deg) const;

    /// Substitutes assigned variables by polynomials over `target`; unassigned
    /// variables are matched by name in `target`.  Throws if an unassigned
    /// variable occurs with positive exponent but has no counterpart, or if an
    /// assigned polynomial lives over a different registry than `target`.
    Poly substitute(const std::map<size_t, Poly>& assignment, RegistryPtr target) const;

    /// Re-expresses the polynomial over `target`, matching variables by name.
    Poly lift_to(RegistryPtr target) const { return substitute({}, std::move(target)); }

    /// Canonical rendering: ascending degree in deformation variables, then
    /// descending x-degree, then descending lexicographic exponent order.
    /// Within a term, deformation variables print first and x last, e.g.
    /// "t2*x^2" and "1/8*t2^2".
    std::string to_text() const;
    std::string to_latex() const;

    /// Terms in the canonical rendering order (used by text/LaTeX/JSON).
    std::vector<TermMap::const_iterator> ordered_terms() const;

private:
    void require_same_registry(const Poly& o) const;

    RegistryPtr reg_;
    TermMap terms_;
};

}  // namespace rspin
