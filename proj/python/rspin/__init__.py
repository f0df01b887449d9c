"""Exact open r-spin disk potential engine.

Thin re-export of the compiled extension; all arithmetic is exact rational
on the C++ side, values cross the boundary as strings.
"""

from ._core import (
    END_TO_END_TOL,
    LINEAR_ALGEBRA_TOL,
    QuadratureError,
    dual_basis_error,
    gamma,
    invariants,
    lambda_scan,
    mirror_match,
    open_invariant,
    potential,
    product_dual_basis_error,
    ray_integral,
    ray_integral_closed,
    reduce_monomial,
    verify,
    versal_flat_map,
)

__all__ = [
    "END_TO_END_TOL",
    "LINEAR_ALGEBRA_TOL",
    "QuadratureError",
    "dual_basis_error",
    "gamma",
    "invariants",
    "lambda_scan",
    "mirror_match",
    "open_invariant",
    "potential",
    "product_dual_basis_error",
    "ray_integral",
    "ray_integral_closed",
    "reduce_monomial",
    "verify",
    "versal_flat_map",
]
