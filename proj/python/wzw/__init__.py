"""Exact WZW fusion rings, block dimensions, Dehn twists and KZ matrices."""

from fractions import Fraction

from . import _wzw
from ._wzw import (
    InvariantViolation,
    Rejection,
    alphabet,
    block_dimension,
    dual_coxeter,
    fusion_coeff,
    fusion_table,
    kohno_violation,
    npoint_block_rank,
    parallel_transport,
    run_acceptance,
    run_cli,
    three_point_rank,
)


def dehn_twist(algebra, level, label):
    """(exponent r as a Fraction, eigenvalue string) for exp(-i pi r)."""
    r, text = _wzw.dehn_twist(algebra, level, list(label))
    return Fraction(r), text


def kz_matrices(level, labels):
    """{(i, j): A_ij} with 1-based i < j and Fraction entries."""
    return {
        (i + 1, j + 1): [[Fraction(x) for x in row] for row in m]
        for (i, j), m in _wzw.kz_matrices(level, list(labels)).items()
    }


def verify_virasoro(kmax=3, degree=12):
    return [
        {"name": n, "window": w, "residual_norm": Fraction(r)}
        for n, w, r in _wzw.verify_virasoro(kmax, degree)
    ]


__all__ = [
    "InvariantViolation",
    "Rejection",
    "alphabet",
    "block_dimension",
    "dehn_twist",
    "dual_coxeter",
    "fusion_coeff",
    "fusion_table",
    "kohno_violation",
    "kz_matrices",
    "npoint_block_rank",
    "parallel_transport",
    "run_acceptance",
    "run_cli",
    "three_point_rank",
    "verify_virasoro",
]
