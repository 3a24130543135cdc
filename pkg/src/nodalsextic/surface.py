"""The Barth sextic: defining polynomial, node location and certification.

The 15 nodes on the plane x0 = 0 are constructed exactly from the visible
factorization of the sextic there (six lines).  The remaining 50 are found by
multistart Gauss-Newton on the gradient system in affine charts, recognized
as elements of Q(sqrt5) by integer-relation search, and then certified by
exact gradient vanishing and an exact Hessian rank computation.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
import numpy as np

from .poly import Poly, PolyMatrix, format_poly, parse_poly
from .qsqrt5 import ONE, QSqrt5, TAU, ZERO

X0, X1, X2, X3 = (Poly.variable(i) for i in range(4))


class CertificationError(ValueError):
    """A candidate point failed exact node certification."""


class CountError(RuntimeError):
    """Node search did not end with exactly 65 certified nodes."""


def barth_polynomial() -> Poly:
    """The 65-nodal sextic with icosahedral symmetry, fully expanded."""
    t2 = Poly.constant(TAU * TAU)
    prod = (
        (t2 * X1 * X1 - X2 * X2)
        * (t2 * X2 * X2 - X3 * X3)
        * (t2 * X3 * X3 - X1 * X1)
    )
    s = X0 * X0 - X1 * X1 - X2 * X2 - X3 * X3
    corr = (X0 * X0 * s * s).scale((2 * TAU + 1) / QSqrt5(4))
    return prod - corr


def gradient(f: Poly) -> list[Poly]:
    return [f.derivative(i) for i in range(4)]


def hessian(f: Poly) -> PolyMatrix:
    return PolyMatrix([[f.derivative(i).derivative(j) for j in range(4)] for i in range(4)])


@dataclass(frozen=True)
class Node:
    """A singular point, exact-certified or numeric-approximate."""

    coords: tuple
    status: str  # "exact-certified" | "numeric-approximate"
    hessian_rank: int
    id: int | None = None
    residual: float = 0.0

    def is_exact(self) -> bool:
        return self.status == "exact-certified"

    def float_coords(self) -> tuple[float, float, float, float]:
        return tuple(float(c) for c in self.coords)


def normalize_exact(coords) -> tuple[QSqrt5, QSqrt5, QSqrt5, QSqrt5]:
    """Scale so the first nonzero coordinate is exactly 1."""
    coords = [c if isinstance(c, QSqrt5) else QSqrt5(c) for c in coords]
    pivot = next((c for c in coords if c), None)
    if pivot is None:
        raise ValueError("zero vector is not a projective point")
    inv = pivot.inverse()
    return tuple(c * inv for c in coords)


def certify_exact(f: Poly, coords, grad: list[Poly] | None = None,
                  hess: PolyMatrix | None = None) -> Node:
    """Certify an exact projective point as a node: all four partials vanish
    exactly and the Hessian has rank exactly 3."""
    coords = normalize_exact(coords)
    grad = grad if grad is not None else gradient(f)
    for g in grad:
        if g.eval(coords):
            raise CertificationError("gradient does not vanish exactly")
    hess = hess if hess is not None else hessian(f)
    rank = hess.rank_at(coords)
    if rank != 3:
        raise CertificationError(f"Hessian rank {rank} != 3")
    return Node(coords=coords, status="exact-certified", hessian_rank=rank)


def infinity_lines() -> list[tuple[QSqrt5, QSqrt5, QSqrt5]]:
    """The six lines (coefficients on x1,x2,x3) of the sextic section x0 = 0."""
    lines = []
    for sign in (ONE, -ONE):
        lines.append((TAU, -sign, ZERO))
        lines.append((ZERO, TAU, -sign))
        lines.append((-sign, ZERO, TAU))
    return lines


def infinity_nodes(f: Poly | None = None) -> list[Node]:
    """The 15 pairwise intersections of the six lines in x0 = 0, certified."""
    f = f if f is not None else barth_polynomial()
    grad, hess = gradient(f), hessian(f)
    seen: dict[tuple, Node] = {}
    for l1, l2 in itertools.combinations(infinity_lines(), 2):
        # Cross product gives the intersection point in the plane x0 = 0.
        p = (
            l1[1] * l2[2] - l1[2] * l2[1],
            l1[2] * l2[0] - l1[0] * l2[2],
            l1[0] * l2[1] - l1[1] * l2[0],
        )
        if all(not c for c in p):
            continue
        coords = normalize_exact((ZERO,) + p)
        if coords in seen:
            continue
        seen[coords] = certify_exact(f, coords, grad, hess)
    nodes = sorted(seen.values(), key=lambda n: _sort_key(n.coords))
    if len(nodes) != 15:
        raise CountError(f"expected 15 infinity nodes, found {len(nodes)}")
    return nodes


def _sort_key(coords) -> tuple:
    return tuple((c.a, c.b) for c in coords)


# -- numeric search -----------------------------------------------------------------


@dataclass(frozen=True)
class SearchConfig:
    seed: int = 20240901
    starts_per_chart: int = 600
    newton_steps: int = 80
    tolerance: float = 1e-10
    dedup_tolerance: float = 1e-6
    denominator_bound: int = 64
    mp_digits: int = 60


def _compile(polys: list[Poly]):
    """Exponent/coefficient arrays for fast batched float evaluation."""
    comps = []
    for p in polys:
        exps = np.array(list(p.terms.keys()), dtype=np.int64)
        coeffs = np.array([float(c) for c in p.terms.values()])
        comps.append((exps, coeffs))
    return comps


def _eval_batch(comp, pts: np.ndarray) -> np.ndarray:
    exps, coeffs = comp
    # pts: (N,4) -> (N,) values
    return ((pts[:, None, :] ** exps[None, :, :]).prod(axis=2) * coeffs).sum(axis=1)


def _fs_distance(p: np.ndarray, q: np.ndarray) -> float:
    """Fubini-Study style projective distance between unit-normalized points."""
    p = p / np.linalg.norm(p)
    q = q / np.linalg.norm(q)
    return float(np.sqrt(max(0.0, 1.0 - abs(np.dot(p, q)) ** 2)))


def _newton_multistart(grad: list[Poly], config: SearchConfig) -> list[np.ndarray]:
    """Batched Gauss-Newton on the 4-equation gradient system per affine chart."""
    rng = np.random.default_rng(config.seed)
    grad_comp = _compile(grad)
    jac_comp = [[_compile([g.derivative(j)])[0] for j in range(4)] for g in grad]
    found: list[np.ndarray] = []
    for chart in range(4):
        free = [i for i in range(4) if i != chart]
        pts = np.ones((config.starts_per_chart, 4))
        pts[:, free] = rng.uniform(-2.5, 2.5, size=(config.starts_per_chart, 3))
        for _ in range(config.newton_steps):
            r = np.stack([_eval_batch(c, pts) for c in grad_comp], axis=1)  # (N,4)
            J = np.stack(
                [
                    np.stack([_eval_batch(jac_comp[i][j], pts) for j in free], axis=1)
                    for i in range(4)
                ],
                axis=1,
            )  # (N,4,3)
            JtJ = J.transpose(0, 2, 1) @ J + 1e-14 * np.eye(3)
            Jtr = J.transpose(0, 2, 1) @ r[:, :, None]
            try:
                delta = np.linalg.solve(JtJ, Jtr)[:, :, 0]
            except np.linalg.LinAlgError:
                delta = np.stack(
                    [np.linalg.lstsq(a, b, rcond=None)[0][:, 0] for a, b in zip(JtJ, Jtr)]
                )
            pts[:, free] -= delta
            np.clip(pts, -1e6, 1e6, out=pts)
        r = np.stack([_eval_batch(c, pts) for c in grad_comp], axis=1)
        scale = np.abs(pts).max(axis=1) ** 5  # gradient entries are degree 5
        good = (np.abs(r).max(axis=1) / scale) < config.tolerance
        for p in pts[good]:
            found.append(p / np.abs(p).max())
    # projective dedup
    unique: list[np.ndarray] = []
    for p in found:
        if all(_fs_distance(p, q) > config.dedup_tolerance for q in unique):
            unique.append(p)
    return unique


def _polish_mp(grad: list[Poly], point: np.ndarray, config: SearchConfig) -> list:
    """High-precision Gauss-Newton polish in the chart of the largest coordinate."""
    with mpmath.workdps(config.mp_digits):
        chart = int(np.argmax(np.abs(point)))
        free = [i for i in range(4) if i != chart]
        x = mpmath.matrix([point[i] / point[chart] for i in free])

        def coords(xv):
            full = [mpmath.mpf(0)] * 4
            full[chart] = mpmath.mpf(1)
            for k, i in enumerate(free):
                full[i] = xv[k]
            return full

        sqrt5 = mpmath.sqrt(5)

        def evq(c: QSqrt5, _cache={}):
            key = (c.a, c.b)
            if key not in _cache:
                _cache[key] = mpmath.mpf(c.a.numerator) / c.a.denominator + (
                    mpmath.mpf(c.b.numerator) / c.b.denominator
                ) * sqrt5
            return _cache[key]

        def evp(p: Poly, pt):
            total = mpmath.mpf(0)
            for e, c in p.terms.items():
                v = evq(c)
                for i in range(4):
                    if e[i]:
                        v *= pt[i] ** e[i]
                total += v
            return total

        jac = [[g.derivative(j) for j in free] for g in grad]
        for _ in range(60):
            pt = coords(x)
            r = mpmath.matrix([evp(g, pt) for g in grad])
            J = mpmath.matrix(4, 3)
            for i in range(4):
                for j in range(3):
                    J[i, j] = evp(jac[i][j], pt)
            JtJ = J.T * J
            Jtr = J.T * r
            try:
                delta = mpmath.lu_solve(JtJ, Jtr)
            except ZeroDivisionError:
                break
            x = x - delta
            if mpmath.norm(delta) < mpmath.mpf(10) ** (-config.mp_digits + 10):
                break
        return coords(x)


def recognize_qsqrt5(value, denominator_bound: int, dps: int) -> QSqrt5 | None:
    """Fit a high-precision real as a + b*sqrt5 via integer-relation search."""
    with mpmath.workdps(dps):
        if abs(value) < mpmath.mpf(10) ** (-dps + 12):
            return QSqrt5(0)
        rel = mpmath.pslq(
            [mpmath.mpf(1), mpmath.sqrt(5), value],
            tol=mpmath.mpf(10) ** (-dps + 12),
            maxcoeff=10**12,
        )
    if rel is None:
        return None
    p, q, r = rel
    if r == 0:
        return None
    cand = QSqrt5(Fraction(-p, r), Fraction(-q, r))
    if cand.a.denominator > denominator_bound or cand.b.denominator > denominator_bound:
        return None
    # Guard against a spurious relation.
    with mpmath.workdps(dps):
        approx = mpmath.mpf(cand.a.numerator) / cand.a.denominator + (
            mpmath.mpf(cand.b.numerator) / cand.b.denominator
        ) * mpmath.sqrt(5)
        if abs(approx - value) > mpmath.mpf(10) ** (-dps + 15):
            return None
    return cand


def find_nodes(f: Poly | None = None, config: SearchConfig | None = None) -> list[Node]:
    """All 65 nodes: exact infinity nodes plus recognized affine solutions."""
    f = f if f is not None else barth_polynomial()
    config = config or SearchConfig()
    grad, hess = gradient(f), hessian(f)
    exact_nodes = {n.coords: n for n in infinity_nodes(f)}
    numeric_nodes: list[Node] = []

    candidates = _newton_multistart(grad, config)
    known_floats = [np.array(n.float_coords()) for n in exact_nodes.values()]
    for cand in candidates:
        arr = np.asarray(cand, dtype=float)
        if any(_fs_distance(arr, k) < config.dedup_tolerance for k in known_floats):
            continue
        polished = _polish_mp(grad, arr, config)
        rec = [recognize_qsqrt5(c, config.denominator_bound, config.mp_digits) for c in polished]
        node = None
        if all(r is not None for r in rec):
            try:
                node = certify_exact(f, rec, grad, hess)
            except (CertificationError, ValueError):
                node = None
        if node is None:
            residual = _numeric_residual(grad, polished)
            hrank = _numeric_hessian_rank(hess, polished)
            fl = [float(v) for v in polished]
            piv = max(range(4), key=lambda i: abs(fl[i]))
            node = Node(
                coords=tuple(v / fl[piv] for v in fl),
                status="numeric-approximate",
                hessian_rank=hrank,
                residual=residual,
            )
        if node.is_exact():
            if node.coords not in exact_nodes:
                exact_nodes[node.coords] = node
                known_floats.append(np.array(node.float_coords()))
        else:
            if all(_fs_distance(np.array(node.float_coords()), np.array(m.float_coords())) > config.dedup_tolerance for m in numeric_nodes):
                numeric_nodes.append(node)
                known_floats.append(np.array(node.float_coords()))

    nodes = sorted(exact_nodes.values(), key=lambda n: _sort_key(n.coords))
    nodes.extend(sorted(numeric_nodes, key=lambda n: n.float_coords()))
    if len(nodes) != 65:
        raise CountError(f"certified {len(nodes)} nodes, expected 65")
    return [Node(n.coords, n.status, n.hessian_rank, i + 1, n.residual) for i, n in enumerate(nodes)]


def _numeric_residual(grad: list[Poly], pt) -> float:
    vals = []
    with mpmath.workdps(30):
        for g in grad:
            total = mpmath.mpf(0)
            for e, c in g.terms.items():
                v = mpmath.mpf(float(c))
                for i in range(4):
                    if e[i]:
                        v *= pt[i] ** e[i]
                total += v
            vals.append(abs(total))
    return float(max(vals))


def _numeric_hessian_rank(hess: PolyMatrix, pt) -> int:
    """Rank by singular-value gap, for points not certified exactly."""
    point = np.array([[float(v) for v in pt]])
    m = np.array([[_eval_batch(_compile([p])[0], point)[0] for p in row] for row in hess.entries])
    sv = np.linalg.svd(m, compute_uv=False)
    if sv[0] == 0:
        return 0
    return int((sv / sv[0] > 1e-8).sum())


# -- JSON round trip -----------------------------------------------------------------


def nodes_to_json(nodes: list[Node]) -> str:
    records = []
    for n in nodes:
        if n.is_exact():
            coords = [format_poly(Poly.constant(c)) for c in n.coords]
        else:
            coords = [repr(float(c)) for c in n.coords]
        records.append(
            {
                "id": n.id,
                "coords": coords,
                "status": n.status,
                "hessian_rank": n.hessian_rank,
                "residual": n.residual,
            }
        )
    return json.dumps(records, indent=2)


def nodes_from_json(text: str) -> list[Node]:
    nodes = []
    for rec in json.loads(text):
        if rec["status"] == "exact-certified":
            coords = tuple(_scalar(parse_poly(c)) for c in rec["coords"])
        else:
            coords = tuple(float(c) for c in rec["coords"])
        nodes.append(
            Node(
                coords=coords,
                status=rec["status"],
                hessian_rank=rec["hessian_rank"],
                id=rec.get("id"),
                residual=rec.get("residual", 0.0),
            )
        )
    return nodes


def _scalar(p: Poly) -> QSqrt5:
    if p.degree() > 0:
        raise ValueError("expected a constant")
    return p.coefficient((0, 0, 0, 0))
