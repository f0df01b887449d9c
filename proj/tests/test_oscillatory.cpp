#include "rspin/oscillatory.hpp"

#include "oracles.hpp"
#include "rspin/potential.hpp"

#include <doctest.h>

using namespace rspin;

TEST_SUITE("oscillatory") {

TEST_CASE("single-variable reduction") {
    // r = 4: x^4 -> -(1/4) hbar, x^6 -> -(3/4) hbar x^2, x^8 -> (5/16) hbar^2.
    ReducedForm r4 = reduce_monomial(4, 4);
    CHECK_FALSE(r4.zero);
    CHECK(r4.basis == std::vector<int>{0});
    CHECK(r4.hbar_power == 1);
    CHECK(r4.scalar == Rational(-1, 4));

    ReducedForm r6 = reduce_monomial(4, 6);
    CHECK(r6.basis == std::vector<int>{2});
    CHECK(r6.hbar_power == 1);
    CHECK(r6.scalar == Rational(-3, 4));

    ReducedForm r8 = reduce_monomial(4, 8);
    CHECK(r8.basis == std::vector<int>{0});
    CHECK(r8.hbar_power == 2);
    CHECK(r8.scalar == Rational(5, 16));

    // Residue r-1 is exact: zero at any height.
    CHECK(reduce_monomial(4, 3).zero);
    CHECK(reduce_monomial(4, 7).zero);
    CHECK(reduce_monomial(4, 11).zero);
    // Low exponents are already reduced.
    ReducedForm low = reduce_monomial(4, 2);
    CHECK(low.basis == std::vector<int>{2});
    CHECK(low.hbar_power == 0);
    CHECK(low.scalar == Rational(1));
    CHECK_THROWS_AS(reduce_monomial(4, -1), std::invalid_argument);
}

TEST_CASE("closed product matches iterated single steps") {
    for (int r = 2; r <= 9; ++r)
        for (int e = 0; e <= 6 * r; ++e) {
            ReducedForm fast = reduce_monomial(r, e);
            auto slow = oracle::step_reduce(r, e);
            CHECK(fast.zero == slow.zero);
            if (!fast.zero) {
                CHECK(fast.basis[0] == slow.basis);
                CHECK(fast.hbar_power == slow.hbar_power);
                CHECK(fast.scalar == slow.scalar);
            }
        }
}

TEST_CASE("multi-variable reduction multiplies axes") {
    FermatSignature sig({3, 4});
    ReducedForm both = reduce_monomial(sig, {4, 6});
    // x^4 -> -(2/3) hbar x, y^6 -> -(3/4) hbar y^2.
    CHECK_FALSE(both.zero);
    CHECK(both.basis == std::vector<int>{1, 2});
    CHECK(both.hbar_power == 2);
    CHECK(both.scalar == Rational(1, 2));
    CHECK(reduce_monomial(sig, {2, 0}).zero);  // x^2 has residue r-1 on axis 0
    CHECK_THROWS_AS(reduce_monomial(sig, {1}), std::invalid_argument);
    CHECK_THROWS_AS(FermatSignature({1}), std::invalid_argument);
}

TEST_CASE("expansion of the bare quadratic shift is exponential") {
    // W = x^2 + t0: phi_{0,j} = t0^j / j!.
    RegistryPtr reg = VarRegistry::x_t(2);
    Poly w = Poly::variable(reg, 0, 2) + Poly::variable(reg, 1);
    HbarSeries s = expand_integral(2, w, 0, 6);
    Poly t0 = Poly::variable(reg, 1);
    for (int j = 0; j <= 6; ++j)
        CHECK(s.coeff(j) == t0.pow(unsigned(j)) * Rational(1, factorial(j)));
    CHECK(s.parts().begin()->first == 0);
}

TEST_CASE("no negative hbar exponents, unit constant term") {
    for (int r : {3, 4, 5, 6, 7}) {
        Poly w = build_deformed_potential(r).poly;
        auto all = expand_integral_all(r, w, r);
        for (int d = 0; d <= r - 2; ++d) {
            const HbarSeries& s = all[size_t(d)];
            if (!s.parts().empty()) CHECK(s.parts().begin()->first >= 0);
            Poly expected0 = d == 0 ? Poly::constant(w.registry(), Rational(1))
                                    : Poly(w.registry());
            CHECK(s.coeff(0) == expected0);
        }
    }
}

TEST_CASE("directional derivative in a multiplicity-one coefficient") {
    // W(c) = x^4 + t2 x^2 + c t1 x + t0: each phi_{d,j} is linear in c on the
    // stratum where t1 appears to first order, so the finite difference at
    // step 1 equals the coefficient-extraction derivative.
    RegistryPtr reg = VarRegistry::x_t(4);
    auto build = [&](const Rational& c) {
        return Poly::variable(reg, 0, 4) +
               Poly::variable(reg, *reg->find("t2")) * Poly::variable(reg, 0, 2) +
               Poly::variable(reg, *reg->find("t1")) * Poly::variable(reg, 0) * c +
               Poly::variable(reg, *reg->find("t0"));
    };
    const int cap = 5;
    auto at0 = expand_integral_all(4, build(Rational(0)), cap);
    auto at1 = expand_integral_all(4, build(Rational(1)), cap);
    auto at2 = expand_integral_all(4, build(Rational(2)), cap);
    size_t t1_index = *reg->find("t1");
    for (int d = 0; d <= 2; ++d)
        for (const auto& [j, part] : at2[size_t(d)].parts())
            for (const auto& [e, coeff] : part.terms()) {
                if (e[t1_index] != 1) continue;
                // Linear stratum: value at c is c * (value at 1), and the
                // c = 0 series has nothing there.
                CHECK(coeff == Rational(2) * at1[size_t(d)].coeff(j).coeff(e));
                CHECK(at0[size_t(d)].coeff(j).coeff(e).is_zero());
            }
}

TEST_CASE("rejects malformed potentials") {
    RegistryPtr reg = VarRegistry::x_t(4);
    Poly bare_x = Poly::variable(reg, 0, 4) + Poly::variable(reg, 0, 2);
    CHECK_THROWS_AS(expand_integral_all(4, bare_x, 3), std::invalid_argument);
    Poly high = Poly::variable(reg, 0, 4) +
                Poly::variable(reg, *reg->find("t0")) * Poly::variable(reg, 0, 4);
    CHECK_THROWS_AS(expand_integral_all(4, high, 3), std::invalid_argument);
    Poly ok = Poly::variable(reg, 0, 4) + Poly::variable(reg, *reg->find("t0"));
    CHECK_THROWS_AS(expand_integral(4, ok, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(expand_integral(4, ok, -1, 3), std::invalid_argument);
    Poly no_x = Poly::variable(VarRegistry::t_only(4), 0);
    CHECK_THROWS_AS(expand_integral_all(4, no_x, 3), std::invalid_argument);
}

}
