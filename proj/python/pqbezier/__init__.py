"""Lupas (p,q)-Bezier curves, surfaces and approximation operators."""

from ._core import (
    Curve,
    DegenerateError,
    DocumentError,
    DomainError,
    PQOverflowError,
    PQParams,
    Surface,
    basis_row,
    basis_single,
    convergence_table,
    elevation_matrix,
    limit_basis_row,
    limit_operator,
    lupas_operator,
    moments,
    node,
    pq_binomial,
    pq_integer,
    reflection_pair,
)

__all__ = [
    "Curve",
    "DegenerateError",
    "DocumentError",
    "DomainError",
    "PQOverflowError",
    "PQParams",
    "Surface",
    "basis_row",
    "basis_single",
    "convergence_table",
    "elevation_matrix",
    "limit_basis_row",
    "limit_operator",
    "lupas_operator",
    "moments",
    "node",
    "pq_binomial",
    "pq_integer",
    "reflection_pair",
]
