"""Multiplication-map kernels between dual spaces of low-degree forms on P^2.

For a linear form l, multiplication by l induces a map from the dual of the
quadratic forms (6-dimensional, dual basis indexed by monomials x_a*x_b) to
the dual of the linear forms (3-dimensional).  Stacking these maps over the
coordinate basis l in {x0, x1, x2} must leave no common kernel; the analogous
statement one degree down uses the maps into the dual of the constants.
"""

from __future__ import annotations

from .poly import scalar_rank
from .qsqrt5 import ONE, ZERO

# Dual-basis index order for quadratic monomials on P^2.
QUADRATIC_PAIRS = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]


def kappa_matrix(j: int) -> list[list]:
    """3x6 matrix of the map induced by l = x_j, quadratic duals to linear duals.

    Entry (i, (a,b)) is the pairing of the dual functional f_{ab} with x_i*x_j.
    """
    rows = []
    for i in range(3):
        pair = (min(i, j), max(i, j))
        rows.append([ONE if (a, b) == pair else ZERO for (a, b) in QUADRATIC_PAIRS])
    return rows


def kappa_prime_matrix(j: int) -> list[list]:
    """1x3 matrix of the map induced by l = x_j, linear duals to constant duals."""
    return [[ONE if i == j else ZERO for i in range(3)]]


def stacked_kappa_rank() -> int:
    """Rank of the 9x6 stack of the three coordinate kappa matrices."""
    rows = []
    for j in range(3):
        rows.extend(kappa_matrix(j))
    return scalar_rank(rows)


def stacked_kappa_prime_rank() -> int:
    """Rank of the 3x3 stack of the three coordinate kappa-prime matrices."""
    rows = []
    for j in range(3):
        rows.extend(kappa_prime_matrix(j))
    return scalar_rank(rows)


def kappa_kernel_check() -> bool:
    """True iff the stacked kernels vanish in both degrees (ranks 6 and 3)."""
    return stacked_kappa_rank() == 6 and stacked_kappa_prime_rank() == 3
