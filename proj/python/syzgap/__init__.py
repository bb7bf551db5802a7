"""Syzygy gap fractals over finite fields."""

from ._syzgap import (
    Cell,
    Field,
    SyzgapError,
    canonicalize,
    colength,
    colon_reduce,
    delta,
    delta_equivalent,
    grid,
    han_delta_star,
    local_maxima,
    magnify,
    mu_formula,
    newbound_lhs,
    phi_C,
    reflect,
    surface_colength,
    syzygy_gap,
    verify,
    verify_cone,
)

__all__ = [
    "Cell",
    "Field",
    "SyzgapError",
    "canonicalize",
    "colength",
    "colon_reduce",
    "delta",
    "delta_equivalent",
    "grid",
    "han_delta_star",
    "local_maxima",
    "magnify",
    "mu_formula",
    "newbound_lhs",
    "phi_C",
    "reflect",
    "surface_colength",
    "syzygy_gap",
    "verify",
    "verify_cone",
]
