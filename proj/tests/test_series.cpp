#include "rspin/series.hpp"

#include "rspin/hbar_series.hpp"

#include <doctest.h>

using namespace rspin;

TEST_SUITE("series") {

TEST_CASE("hbar series bookkeeping") {
    RegistryPtr xt = VarRegistry::x_t(3);
    HbarSeries s(xt);
    CHECK(s.is_zero());
    Poly t0 = Poly::variable(xt, *xt->find("t0"));
    s.add(1, t0);
    s.add(1, -t0);
    CHECK(s.is_zero());
    s.add(2, t0);
    CHECK(s.coeff(2) == t0);
    CHECK(s.coeff(5).is_zero());
    CHECK_THROWS_AS(s.add(0, Poly::variable(xt, 0)), std::invalid_argument);

    HbarSeries other(xt);
    other.add_term(2, {0, 1, 0}, Rational(1));
    CHECK(s == other);
}

TEST_CASE("inversion of a triangular map") {
    // t0 = y0 - 1/8 y2^2, t1 = y1, t2 = y2  =>  y0 = t0 + 1/8 t2^2.
    RegistryPtr y = VarRegistry::y_only(4);
    RegistryPtr t = VarRegistry::t_only(4);
    std::vector<Poly> f = {
        Poly::variable(y, 0) - Poly::variable(y, 2).pow(2) * Rational(1, 8),
        Poly::variable(y, 1),
        Poly::variable(y, 2),
    };
    auto g = series_invert(f, t, 6);
    CHECK(g[0] == Poly::variable(t, 0) + Poly::variable(t, 2).pow(2) * Rational(1, 8));
    CHECK(g[1] == Poly::variable(t, 1));
    CHECK(g[2] == Poly::variable(t, 2));
}

TEST_CASE("round trip both ways") {
    const int cap = 7;
    RegistryPtr y = VarRegistry::y_only(4);
    RegistryPtr t = VarRegistry::t_only(4);
    Poly y0 = Poly::variable(y, 0), y1 = Poly::variable(y, 1), y2 = Poly::variable(y, 2);
    std::vector<Poly> f = {
        y0 + y1 * y2 + y2.pow(3) * Rational(2, 3),
        y1 - y0 * y0 * Rational(1, 2) + y0 * y1 * y2,
        y2 + y0.pow(2) * y1 * Rational(5, 7),
    };
    auto g = series_invert(f, t, cap);

    std::vector<size_t> all = {0, 1, 2};
    std::map<size_t, Poly> g_assign;
    for (size_t d = 0; d < 3; ++d) g_assign.emplace(d, g[d]);
    for (size_t d = 0; d < 3; ++d) {
        Poly composed = f[d].substitute(g_assign, t).truncate_degree(all, cap);
        CHECK(composed == Poly::variable(t, d));
    }

    // The inverse is two-sided: G(F(y)) = y as well.
    std::map<size_t, Poly> f_assign;
    for (size_t d = 0; d < 3; ++d) f_assign.emplace(d, f[d]);
    for (size_t d = 0; d < 3; ++d) {
        Poly composed = g[d].substitute(f_assign, y).truncate_degree(all, cap);
        CHECK(composed == Poly::variable(y, d));
    }
}

TEST_CASE("bad linear parts rejected") {
    RegistryPtr y = VarRegistry::y_only(3);
    RegistryPtr t = VarRegistry::t_only(3);
    std::vector<Poly> scaled = {Poly::variable(y, 0) * Rational(2), Poly::variable(y, 1)};
    CHECK_THROWS_AS(series_invert(scaled, t, 3), std::invalid_argument);
    std::vector<Poly> swapped = {Poly::variable(y, 1), Poly::variable(y, 0)};
    CHECK_THROWS_AS(series_invert(swapped, t, 3), std::invalid_argument);
    std::vector<Poly> constant = {Poly::variable(y, 0) + Poly::constant(y, Rational(1)),
                                  Poly::variable(y, 1)};
    CHECK_THROWS_AS(series_invert(constant, t, 3), std::invalid_argument);
    std::vector<Poly> short_system = {Poly::variable(y, 0)};
    CHECK_THROWS_AS(series_invert(short_system, t, 3), std::invalid_argument);
}

}
