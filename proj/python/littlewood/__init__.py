"""Exact limits of L^2q norms of Fekete, shifted Fekete and Galois polynomials."""

from ._core import (
    carlitz_numbers,
    composition_count,
    convergence_table,
    eulerian,
    even_block_profile_count,
    fekete,
    galois,
    is_prime,
    legendre,
    limit,
    limit_direct,
    norm_2q,
    norm_2q_quadrature,
    phi,
    phi_min,
    phi_pieces,
    shifted_fekete,
    tangent_numbers,
    triangle_row,
)

__all__ = [
    "carlitz_numbers",
    "composition_count",
    "convergence_table",
    "eulerian",
    "even_block_profile_count",
    "fekete",
    "galois",
    "is_prime",
    "legendre",
    "limit",
    "limit_direct",
    "norm_2q",
    "norm_2q_quadrature",
    "phi",
    "phi_min",
    "phi_pieces",
    "shifted_fekete",
    "tangent_numbers",
    "triangle_row",
]
