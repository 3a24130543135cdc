"""The explicit 6x6 symmetric linear determinantal representation of the
Barth sextic: transcription, exact verification, and node rank stratification.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .data import read_data
from .poly import Poly, PolyMatrix, parse_poly
from .qsqrt5 import QSqrt5
from .surface import Node

# -(4/9) * taubar^3 = (4*sqrt5 - 8)/9, the exact proportionality constant.
EXPECTED_SCALAR = QSqrt5(Fraction(-8, 9), Fraction(4, 9))


class SymmetryError(ValueError):
    """Transcribed matrix is not symmetric/linear as required."""


class NotProportional(ValueError):
    """det A is not a scalar multiple of F; reports the first bad monomial."""

    def __init__(self, monomial, det_coeff, f_coeff):
        self.monomial = monomial
        super().__init__(
            f"first mismatch at monomial {monomial}: det coefficient {det_coeff}, "
            f"F coefficient {f_coeff}"
        )


def barth_matrix_A() -> PolyMatrix:
    """The 6x6 symmetric matrix of linear forms from the checked-in file
    (21 upper-triangle entries, row-major)."""
    text = read_data("barth_matrix_A.txt")
    entries = [parse_poly(line) for line in text.splitlines() if line.strip()]
    if len(entries) != 21:
        raise SymmetryError(f"expected 21 upper-triangle entries, got {len(entries)}")
    rows = [[Poly.zero()] * 6 for _ in range(6)]
    it = iter(entries)
    for i in range(6):
        for j in range(i, 6):
            p = next(it)
            rows[i][j] = p
            rows[j][i] = p
    m = PolyMatrix(rows)
    if not m.is_linear():
        raise SymmetryError("matrix has an entry of degree > 1")
    return m


@dataclass(frozen=True)
class DetRepReport:
    scalar: QSqrt5
    symmetric: bool
    linear: bool
    rank_partition: dict[int, frozenset[int]] | None = None


def proportionality_scalar(p: Poly, q: Poly) -> QSqrt5:
    """The constant c with p = c*q, by monomial-wise exact ratio."""
    pt, qt = p.terms, q.terms
    if set(pt) != set(qt):
        extra = sorted(set(pt) ^ set(qt))
        e = extra[0]
        raise NotProportional(e, pt.get(e, QSqrt5(0)), qt.get(e, QSqrt5(0)))
    if not pt:
        raise NotProportional(None, QSqrt5(0), QSqrt5(0))
    items = sorted(pt)
    c = pt[items[0]] / qt[items[0]]
    for e in items[1:]:
        if pt[e] != c * qt[e]:
            raise NotProportional(e, pt[e], qt[e])
    return c


def verify_determinant(a: PolyMatrix, f: Poly) -> DetRepReport:
    """Exact check that det A is a constant multiple of F; the constant must
    come out as (4*sqrt5-8)/9."""
    symmetric = a.is_symmetric()
    linear = a.is_linear()
    if not symmetric:
        raise SymmetryError("matrix is not symmetric")
    scalar = proportionality_scalar(a.det(), f)
    return DetRepReport(scalar=scalar, symmetric=symmetric, linear=linear)


def rank_partition(a: PolyMatrix, nodes: list[Node]) -> dict[int, frozenset[int]]:
    """Rank of A at each node; exact elimination for certified nodes, singular
    value gap for numeric ones."""
    parts: dict[int, set[int]] = {}
    for n in nodes:
        if n.is_exact():
            r = a.rank_at(n.coords)
        else:
            m = np.array([[_float_eval(p, n.coords) for p in row] for row in a.entries])
            sv = np.linalg.svd(m, compute_uv=False)
            r = int((sv / sv[0] > 1e-8).sum()) if sv[0] else 0
        parts.setdefault(r, set()).add(n.id)
    return {r: frozenset(s) for r, s in sorted(parts.items())}


def _float_eval(p: Poly, coords) -> float:
    total = 0.0
    for e, c in p.terms.items():
        v = float(c)
        for i in range(4):
            if e[i]:
                v *= float(coords[i]) ** e[i]
        total += v
    return total
