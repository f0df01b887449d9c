#include "rspin/flatness.hpp"

#include "rspin/potential.hpp"
#include "rspin/series.hpp"

#include <stdexcept>

namespace rspin {

namespace {

// First term (canonical order) of a nonzero polynomial, rendered for reports.
std::pair<std::string, std::string> leading_term(const Poly& p) {
    auto order = p.ordered_terms();
    const auto& [e, c] = *order.front();
    Poly mono = Poly::monomial(p.registry(), e, Rational(1));
    return {mono.to_text(), c.to_string()};
}

}  // namespace

PrimitivityReport verify_flat_coordinates(int r, int cap) {
    if (r < 2) throw std::invalid_argument("verify_flat_coordinates: need r >= 2");
    if (cap < 1) throw std::invalid_argument("verify_flat_coordinates: need cap >= 1");
    DeformedPotential w = build_deformed_potential(r);
    RegistryPtr reg = w.poly.registry();
    auto series = expand_integral_all(r, w.poly, cap);

    PrimitivityReport report;
    report.r = r;
    report.cap = cap;
    report.primitive = true;
    report.flat = true;

    for (int d = 0; d <= r - 2; ++d) {
        const HbarSeries& s = series[size_t(d)];
        BasisVerdict verdict(d, s.coeff(0), s.coeff(1));

        Poly expected0 =
            d == 0 ? Poly::constant(reg, Rational(1)) : Poly(reg);
        bool no_negative = s.parts().empty() || s.parts().begin()->first >= 0;
        verdict.primitive = no_negative && verdict.phi0 == expected0;

        Poly expected1 = Poly::variable(reg, *reg->find("t" + std::to_string(d)));
        verdict.flat = verdict.phi1 == expected1;

        if (!verdict.primitive && !report.first_failure) {
            PrimitivityFailure f;
            f.d = d;
            if (!no_negative) {
                f.j = s.parts().begin()->first;
                auto [m, c] = leading_term(s.parts().begin()->second);
                f.monomial = m;
                f.coefficient = c;
            } else {
                f.j = 0;
                auto [m, c] = leading_term(verdict.phi0 - expected0);
                f.monomial = m;
                f.coefficient = c;
            }
            report.first_failure = std::move(f);
        }
        if (verdict.primitive && !verdict.flat && !report.first_failure) {
            PrimitivityFailure f;
            f.d = d;
            f.j = 1;
            auto [m, c] = leading_term(verdict.phi1 - expected1);
            f.monomial = m;
            f.coefficient = c;
            report.first_failure = std::move(f);
        }

        report.primitive = report.primitive && verdict.primitive;
        report.flat = report.flat && verdict.flat;
        report.per_basis.push_back(std::move(verdict));
    }
    report.flat = report.flat && report.primitive;
    return report;
}

std::vector<Poly> versal_flat_map(int r, int cap) {
    VersalUnfolding v = build_versal(r);
    auto series = expand_integral_all(r, v.poly, cap);
    RegistryPtr y_reg = VarRegistry::y_only(r);
    std::vector<Poly> maps;
    maps.reserve(size_t(r - 1));
    for (int d = 0; d <= r - 2; ++d) maps.push_back(series[size_t(d)].coeff(1).lift_to(y_reg));
    return maps;
}

Poly flat_potential_from_versal(int r, int cap) {
    std::vector<Poly> forward = versal_flat_map(r, cap);
    RegistryPtr t_reg = VarRegistry::t_only(r);
    std::vector<Poly> inverse = series_invert(forward, t_reg, cap);

    VersalUnfolding v = build_versal(r);
    RegistryPtr xt = VarRegistry::x_t(r);
    std::map<size_t, Poly> assign;
    for (int d = 0; d <= r - 2; ++d) {
        size_t yi = *v.poly.registry()->find("y" + std::to_string(d));
        assign.emplace(yi, inverse[size_t(d)].lift_to(xt));
    }
    return v.poly.substitute(assign, xt).truncate_deformation(cap);
}

Rational lambda_obstruction(int r, const TwistMultiset& twists) {
    if (twists.size() < 2) throw std::invalid_argument("lambda_obstruction: need at least 2 points");
    if (!is_admissible(twists)) throw std::invalid_argument("lambda_obstruction: inadmissible twists");
    const int l = twists.size();
    const int b_total = twists.b_sum();
    const std::vector<int> b = twists.b_values();  // aligned with sorted positions

    Integer total = 0;
    for (const auto& q : set_partitions_all(l)) {
        const int h = q.block_count();
        Integer cont = (h - 1) % 2 == 0 ? 1 : -1;
        for (int j = 1; j <= h - 1; ++j) cont *= Integer(j * r + 1 - b_total);
        for (const auto& block : q.blocks) {
            int b_block = 0;
            for (int i : block) b_block += b[size_t(i) - 1];
            for (int i = 1; i <= int(block.size()) - 1; ++i) cont *= Integer(r - b_block + i);
        }
        total += cont;
    }
    return Rational(total, int_pow(Integer(r), unsigned(l - 1)));
}

Rational lambda_obstruction_via_partitions(int r, const TwistMultiset& twists) {
    if (twists.size() < 2) throw std::invalid_argument("lambda_obstruction: need at least 2 points");
    if (!is_admissible(twists)) throw std::invalid_argument("lambda_obstruction: inadmissible twists");
    const int l = twists.size();
    const int k_total = twists.residue();

    Rational lambda(0);
    for (int h = 1; h <= l; ++h) {
        for (const auto& p : multiset_partitions(twists, h)) {
            Integer weight_den = aut_order(p.parts);
            Rational term(Integer((h - 1) % 2 == 0 ? 1 : -1), weight_den);
            // prod_{i=1..h-1} ((1 + k_I)/r + i - 1)
            for (int i = 1; i <= h - 1; ++i)
                term *= Rational(Integer(1 + k_total + r * (i - 1)), Integer(r));
            for (const auto& part : p.parts) {
                const int lj = part.size();
                const int kj = part.residue();
                term *= Rational(factorial(kj + lj - 1),
                                 factorial(kj) * aut_order(part) *
                                     int_pow(Integer(r), unsigned(lj - 1)));
            }
            lambda += term;
        }
    }
    return Rational(aut_order(twists)) * lambda;
}

Poly partition_contribution(int r, const SetPartition& q, RegistryPtr b_registry) {
    const int h = q.block_count();
    if (h == 0) throw std::invalid_argument("partition_contribution: empty partition");

    auto b_var = [&](int i) {
        auto idx = b_registry->find("b" + std::to_string(i));
        if (!idx)
            throw std::invalid_argument("partition_contribution: registry lacks b" +
                                        std::to_string(i));
        return Poly::variable(b_registry, *idx);
    };

    // b_I runs over the elements actually present in q (its ground set), so
    // the same routine serves both Part([l]) and Part([l-1]) inside the
    // recursion check.
    Poly b_total(b_registry);
    for (const auto& block : q.blocks)
        for (int i : block) b_total += b_var(i);

    Poly cont = Poly::constant(b_registry, Rational((h - 1) % 2 == 0 ? 1 : -1));
    for (int j = 1; j <= h - 1; ++j)
        cont = cont * (Poly::constant(b_registry, Rational(j * r + 1)) - b_total);
    for (const auto& block : q.blocks) {
        Poly b_block(b_registry);
        for (int i : block) b_block += b_var(i);
        for (int i = 1; i <= int(block.size()) - 1; ++i)
            cont = cont * (Poly::constant(b_registry, Rational(r + i)) - b_block);
    }
    return cont;
}

Poly lambda_obstruction_symbolic(int r, int l) {
    if (l < 2) throw std::invalid_argument("lambda_obstruction_symbolic: need l >= 2");
    RegistryPtr reg = VarRegistry::b_vars(l);
    Poly total(reg);
    for (const auto& q : set_partitions_all(l)) total += partition_contribution(r, q, reg);
    return total * Rational(Integer(1), int_pow(Integer(r), unsigned(l - 1)));
}

bool contribution_recursion_holds(int r, int l) {
    if (l < 2) throw std::invalid_argument("contribution_recursion_holds: need l >= 2");
    RegistryPtr reg = VarRegistry::b_vars(l);
    size_t last = *reg->find("b" + std::to_string(l));
    std::map<size_t, Poly> kill_last;
    kill_last.emplace(last, Poly(reg));

    for (const auto& q : set_partitions_all(l - 1)) {
        // Preimages of q under "forget the last point": either l forms its
        // own block or it joins one of the existing ones.
        Poly lhs(reg);
        {
            SetPartition extended = q;
            extended.blocks.push_back({l});
            lhs += partition_contribution(r, extended, reg);
        }
        for (size_t j = 0; j < q.blocks.size(); ++j) {
            SetPartition joined = q;
            joined.blocks[j].push_back(l);
            lhs += partition_contribution(r, joined, reg);
        }
        lhs = lhs.substitute(kill_last, reg);
        Poly rhs = partition_contribution(r, q, reg) * Rational(l - 2);
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace rspin
