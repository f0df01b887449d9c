import math

import pytest

import rspin


def test_potential_golden():
    assert rspin.potential(4) == "x^4 + t2*x^2 + t1*x + t0 + 1/8*t2^2"
    assert rspin.potential(4, "latex") == (
        "x^{4} + t_{2}x^{2} + t_{1}x + t_{0} + \\tfrac{1}{8}t_{2}^{2}"
    )


def test_invariants_r2():
    items = rspin.invariants(2)
    assert items == [
        {"twists": [], "k": 2, "value": "-2"},
        {"twists": [0], "k": 0, "value": "1"},
    ]


def test_open_invariant():
    assert rspin.open_invariant(5, [3, 3], 1) == "-2/5"
    assert rspin.open_invariant(5, [3, 3], 2) == "0"


def test_verify_and_flat_map():
    report = rspin.verify(4)
    assert report["primitive"] and report["flat"]
    assert report["flat_coordinates"][0] == "t0 -> t0"
    assert rspin.versal_flat_map(4)[0] == "t0 = y0 - 1/8*y2^2"


def test_mirror_match():
    assert rspin.mirror_match(4)
    assert rspin.mirror_match(5)


def test_lambda_scan():
    scan = rspin.lambda_scan(8, max_l=4)
    assert scan["numeric_all_zero"]
    assert scan["symbolic_all_zero"]
    assert scan["recursion_holds"]
    assert scan["numeric_checked"] > 0


def test_reduce_monomial():
    assert rspin.reduce_monomial(4, 7) is None
    scalar, power, basis = rspin.reduce_monomial(4, 6)
    assert (scalar, power, basis) == ("-3/4", 1, 2)


def test_cycles_numerics():
    assert rspin.dual_basis_error(3, 1 + 0j) < rspin.END_TO_END_TOL
    q = rspin.ray_integral(3, 1, 0, 1 + 0j)
    c = rspin.ray_integral_closed(3, 1, 0, 1 + 0j)
    assert abs(q - c) / abs(c) < 1e-10
    assert rspin.product_dual_basis_error(2, 3, 1 + 0j) < rspin.END_TO_END_TOL
    assert rspin.gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-13)
