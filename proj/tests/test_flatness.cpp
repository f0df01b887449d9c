#include "rspin/flatness.hpp"

#include "rspin/potential.hpp"

#include <doctest.h>

using namespace rspin;

TEST_SUITE("flatness") {

TEST_CASE("quartic report in full") {
    PrimitivityReport rep = verify_flat_coordinates(4, 4);
    CHECK(rep.primitive);
    CHECK(rep.flat);
    CHECK_FALSE(rep.first_failure);
    REQUIRE(rep.per_basis.size() == 3);
    RegistryPtr reg = build_deformed_potential(4).poly.registry();
    CHECK(rep.per_basis[0].phi0 == Poly::constant(reg, Rational(1)));
    CHECK(rep.per_basis[1].phi0.is_zero());
    CHECK(rep.per_basis[2].phi0.is_zero());
    for (int d = 0; d <= 2; ++d) {
        CHECK(rep.per_basis[size_t(d)].phi1 ==
              Poly::variable(reg, *reg->find("t" + std::to_string(d))));
        CHECK(rep.per_basis[size_t(d)].primitive);
        CHECK(rep.per_basis[size_t(d)].flat);
    }
}

TEST_CASE("all r up to 9 are exactly flat") {
    for (int r = 2; r <= 9; ++r) {
        PrimitivityReport rep = verify_flat_coordinates(r, r);
        CHECK(rep.primitive);
        CHECK(rep.flat);
    }
}

TEST_CASE("perturbed potential is caught") {
    // Breaking one coefficient must break flatness, and the report should
    // name a concrete offending term.
    RegistryPtr reg = VarRegistry::x_t(5);
    Poly w = build_deformed_potential(5).poly;
    Poly::Exponents e(reg->size(), 0);
    e[*reg->x_index()] = 1;
    e[*reg->find("t3")] = 2;
    Poly broken = w;
    broken.add_term(e, Rational(1, 7));  // 1/5 -> 12/35 on t3^2 x
    auto all = expand_integral_all(5, broken, 5);
    bool still_flat = true;
    for (int d = 0; d <= 3; ++d) {
        Poly expected = Poly::variable(reg, *reg->find("t" + std::to_string(d)));
        if (all[size_t(d)].coeff(1) != expected) still_flat = false;
    }
    CHECK_FALSE(still_flat);
}

TEST_CASE("versal flat map for the quartic") {
    auto maps = versal_flat_map(4, 4);
    REQUIRE(maps.size() == 3);
    CHECK(maps[0].to_text() == "y0 - 1/8*y2^2");
    CHECK(maps[1].to_text() == "y1");
    CHECK(maps[2].to_text() == "y2");
}

TEST_CASE("versal oracle reproduces the potential") {
    for (int r = 2; r <= 7; ++r) {
        Poly oracle = flat_potential_from_versal(r, r);
        Poly direct = build_deformed_potential(r).poly.truncate_deformation(r);
        CHECK(oracle == direct);
    }
}

TEST_CASE("obstruction sums vanish numerically") {
    for (int r = 2; r <= 9; ++r)
        for (const auto& [key, value] : enumerate_nonzero(r)) {
            if (key.twists.size() < 2) continue;
            Rational direct = lambda_obstruction(r, key.twists);
            Rational grouped = lambda_obstruction_via_partitions(r, key.twists);
            CHECK(direct.is_zero());
            CHECK(grouped.is_zero());
            CHECK(direct == grouped);
        }
}

TEST_CASE("obstruction vanishes as a polynomial identity") {
    for (int r : {3, 4, 5, 6, 7})
        for (int l = 2; l <= 5; ++l)
            CHECK(lambda_obstruction_symbolic(r, l).is_zero());
}

TEST_CASE("partition contribution recursion") {
    for (int r : {3, 4, 5, 6, 7})
        for (int l = 2; l <= 5; ++l)
            CHECK(contribution_recursion_holds(r, l));
}

TEST_CASE("contribution of a concrete partition") {
    // Q = {{1,2}} at l = 2: +(r + 1 - b1 - b2); the two-block partition
    // cancels it, which is the l = 2 case of the vanishing.
    RegistryPtr reg = VarRegistry::b_vars(2);
    SetPartition q;
    q.blocks = {{1, 2}};
    Poly cont = partition_contribution(5, q, reg);
    Poly b1 = Poly::variable(reg, 0), b2 = Poly::variable(reg, 1);
    CHECK(cont == Poly::constant(reg, Rational(6)) - b1 - b2);
    SetPartition split;
    split.blocks = {{1}, {2}};
    CHECK((cont + partition_contribution(5, split, reg)).is_zero());
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(lambda_obstruction(5, TwistMultiset(5, {0})), std::invalid_argument);
    CHECK_THROWS_AS(lambda_obstruction(5, TwistMultiset(5, {0, 0})), std::invalid_argument);
    CHECK_THROWS_AS(lambda_obstruction_symbolic(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_flat_coordinates(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(verify_flat_coordinates(4, 0), std::invalid_argument);
}

}
