"""Acceptance suite: one criterion per test, one printed pass/fail line each.

The lines are written to the real terminal (bypassing capture) so the verdicts
read as a checklist even in a quiet pytest run.
"""

import itertools
import random
import sys
import time
from fractions import Fraction

import pytest

from nodalsextic import (
    ONE,
    SQRT5,
    TAU,
    ZERO,
    Codeword,
    Poly,
    PolyMatrix,
    QSqrt5,
    barth_matrix_A,
    barth_polynomial,
    candidate_planes,
    classify_planes,
    decompose,
    euler_characteristic,
    extended_code,
    find_nodes,
    match_labeling,
    rank_partition,
    square_root,
    table1_words,
    verify_determinant,
    xor_sum,
)
from nodalsextic.detrep import EXPECTED_SCALAR
from nodalsextic.f2code import incidence
from nodalsextic.incidence import intersection_multiset
from nodalsextic.kernels import stacked_kappa_prime_rank, stacked_kappa_rank

_cache: dict = {}


def _criterion(name):
    """Run the body under timing and print one PASS/FAIL line per criterion."""

    def decorate(fn):
        def wrapper(*args, **kwargs):
            start = time.perf_counter()
            try:
                detail = fn(*args, **kwargs)
            except BaseException as exc:
                elapsed = time.perf_counter() - start
                print(f"{name}: FAIL ({elapsed:.3f}s) {exc}", file=sys.__stdout__)
                raise
            elapsed = time.perf_counter() - start
            print(f"{name}: PASS ({elapsed:.3f}s) {detail}", file=sys.__stdout__)

        wrapper.__name__ = fn.__name__
        return wrapper

    return decorate


def _nodes():
    if "nodes" not in _cache:
        _cache["nodes"] = find_nodes(barth_polynomial())
    return _cache["nodes"]


@_criterion("A1")
def test_a1_code_census():
    start = time.perf_counter()
    code = extended_code()
    words = list(code.enumerate())
    assert code.DIMENSION == 13
    assert len(set(w.bits for w in words)) == 8192
    minwords = code.min_weight_words()
    assert minwords[0].weight() == 16 and len(minwords) == 26
    assert set(minwords) == set(table1_words())
    assert time.perf_counter() - start < 1.0
    return "rank 13, span 8192, 26 weight-16 words = Table 1"


@_criterion("A2")
def test_a2_xor_of_five():
    table1 = table1_words()
    start = time.perf_counter()
    w = xor_sum(table1[i - 1] for i in (1, 2, 3, 5, 17))
    weight, card = w.weight(), w.cardinality()
    elapsed = time.perf_counter() - start
    assert w.to_string() == (
        "111011110101100011110001010111100"
        "011111010101010010001010000011011"
    )
    assert weight == 36 and card == 35
    assert elapsed < 0.001
    return "printed 66-bit string, weight 36, cardinality 35"


@_criterion("A3")
def test_a3_decompositions():
    table1 = table1_words()
    target = xor_sum(table1[i - 1] for i in (1, 2, 3, 5, 17))
    start = time.perf_counter()
    subsets = decompose(target, 5, table1)
    elapsed = time.perf_counter() - start
    listed = [
        (1, 2, 3, 5, 17),
        (1, 6, 20, 25, 26),
        (1, 7, 19, 23, 24),
        (2, 3, 4, 8, 18),
        (2, 7, 13, 14, 17),
        (3, 6, 9, 10, 17),
    ]
    assert all(d in subsets for d in listed)
    assert elapsed < 1.0
    return f"all 6 listed decompositions among {len(subsets)} over C(26,5) subsets"


@_criterion("A4")
def test_a4_w1_nodes_and_incidence_tables():
    table1 = table1_words()
    assert sorted(table1[0].node_set()) == [
        3, 8, 10, 19, 25, 34, 40, 42, 44, 47, 48, 49, 55, 61, 63,
    ]

    def bits(js, i):
        return tuple(incidence(table1[j - 1], i) for j in js)

    assert bits((1, 2, 3, 5, 17), 40) == (1, 0, 1, 0, 1)
    assert bits((1, 6, 20, 25, 26), 40) == (1, 0, 0, 0, 0)
    assert bits((1, 7, 19, 23, 24), 42) == (1, 0, 0, 0, 0)
    return "node_set(w1) and the i=40, i=42 incidence rows match"


@_criterion("A5")
def test_a5_euler_characteristic():
    got = [euler_characteristic(m, 35) for m in range(4)]
    assert got == [6, 0, 0, 6]
    assert all(isinstance(v, Fraction) for v in got)
    return "chi(F(m)) = 6, 0, 0, 6 for m = 0..3 at 35 nodes"


@_criterion("A6")
def test_a6_determinantal_identity():
    start = time.perf_counter()
    rep = verify_determinant(barth_matrix_A(), barth_polynomial())
    elapsed = time.perf_counter() - start
    taubar_cubed = ((1 - SQRT5) / 2) ** 3
    assert taubar_cubed == 2 - SQRT5
    assert EXPECTED_SCALAR == -QSqrt5(Fraction(4, 9)) * taubar_cubed
    assert rep.scalar == EXPECTED_SCALAR
    assert elapsed < 5.0
    return "det A = -(4/9) taubar^3 F monomial-wise, taubar^3 = 2 - sqrt5"


@_criterion("A7")
def test_a7_node_census():
    start = time.perf_counter()
    nodes = _nodes()
    elapsed = time.perf_counter() - start
    assert len(nodes) == 65
    findings = [n for n in nodes if not n.is_exact()]
    for n in findings:  # recorded findings, not failures
        assert n.residual < 1e-12
    certified = [n for n in nodes if n.is_exact()]
    assert all(n.hessian_rank == 3 for n in certified)
    assert sum(1 for n in certified if n.coords[0] == ZERO) == 15
    assert elapsed < 120.0
    return f"65 nodes, {len(certified)} exact-certified, Hessian rank 3, 15 at infinity"


@_criterion("A8")
def test_a8_rank_stratification():
    nodes = _nodes()
    start = time.perf_counter()
    a = barth_matrix_A()
    parts = rank_partition(a, nodes)
    smooth = a.rank_at((ZERO, ONE, TAU, ZERO))
    elapsed = time.perf_counter() - start
    assert sorted(len(s) for s in parts.values()) == [30, 35]
    assert set(parts) == {4, 5} and len(parts[4]) == 35
    assert smooth == 5
    assert elapsed < 10.0
    return "ranks {4: 35 nodes, 5: 30 nodes}; rank 5 at a smooth point"


@_criterion("A9")
def test_a9_kernel_lemma():
    assert stacked_kappa_rank() == 6
    assert stacked_kappa_prime_rank() == 3
    return "stacked 9x6 kappa rank 6, stacked 3x3 kappa' rank 3"


@_criterion("A10")
def test_a10_incidence_and_labeling():
    nodes = _nodes()
    f = barth_polynomial()
    table1 = table1_words()
    start = time.perf_counter()
    records = classify_planes(f, candidate_planes(nodes))
    contact = [r for r in records if r.contact]
    geo = [r.node_ids for r in contact]
    rows = [frozenset(w.node_set()) for w in table1]
    assert len(contact) == 26
    assert all(len(s) == 15 for s in geo)
    assert intersection_multiset(geo) == intersection_multiset(rows)
    witness = match_labeling(geo, rows)
    for g, row in enumerate(witness.plane_perm):
        assert {witness.node_perm[i] for i in geo[g]} == rows[row - 1]
    # The rank-4 class maps to a weight-36 word of the extended code.
    rank4 = rank_partition(barth_matrix_A(), nodes)[4]
    mapped = {witness.node_perm[j] for j in rank4}
    image = Codeword.from_string(
        "1" + "".join("1" if i in mapped else "0" for i in range(1, 66))
    )
    assert image in extended_code() and image.weight() == 36
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0
    return "26 contact planes of 15 nodes; labeling witness; rank-4 class = weight-36 word"


# -- A11 property suites: 1000 randomized cases each ------------------------------


def _rand_q(rng, span=50):
    return QSqrt5(
        Fraction(rng.randint(-span, span), rng.randint(1, 9)),
        Fraction(rng.randint(-span, span), rng.randint(1, 9)),
    )


@_criterion("A11.field")
def test_a11_field_axioms():
    rng = random.Random(11001)
    for _ in range(1000):
        x, y, z = (_rand_q(rng) for _ in range(3))
        assert x + y == y + x and x * y == y * x
        assert (x + y) + z == x + (y + z) and (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + (-x) == ZERO and x * ONE == x
        if x != ZERO:
            assert x * (ONE / x) == ONE
    return "1000 random triples satisfy field axioms"


def _cofactor_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = Poly({})
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        term = rows[0][j] * _cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _rand_linear(rng):
    return Poly(
        {
            tuple(1 if j == i else 0 for j in range(4)): QSqrt5(
                Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-1, 1))
            )
            for i in range(4)
        }
    )


@_criterion("A11.det")
def test_a11_det_oracle():
    rng = random.Random(11002)
    for case in range(1000):
        n = 3 if case % 5 else 4
        rows = [[_rand_linear(rng) for _ in range(n)] for _ in range(n)]
        assert PolyMatrix(rows).det() == _cofactor_det(rows)
    return "1000 random 3x3/4x4 determinants match the cofactor oracle"


def _rand_homogeneous(rng, degree, nterms):
    terms = {}
    for _ in range(nterms):
        cuts = sorted(rng.randint(0, degree) for _ in range(3))
        e = (cuts[0], cuts[1] - cuts[0], cuts[2] - cuts[1], degree - cuts[2])
        terms[e] = QSqrt5(Fraction(rng.randint(-4, 4)), Fraction(rng.randint(-1, 1)))
    return Poly(terms)


@_criterion("A11.sqrt")
def test_a11_square_root_roundtrip():
    rng = random.Random(11003)
    done = 0
    while done < 1000:
        h = _rand_homogeneous(rng, rng.randint(1, 3), rng.randint(1, 3))
        if h.is_zero():
            continue
        done += 1
        c = _rand_q(rng, span=5)
        if c == ZERO:
            c = ONE
        g = (h * h).scale(c)
        result = square_root(g)
        assert result is not None
        scalar, root = result
        assert (root * root).scale(scalar) == g
    return "1000 random squares recovered exactly by square_root"


@_criterion("A11.rank")
def test_a11_rank_projective_invariance():
    rng = random.Random(11004)
    matrices = [
        PolyMatrix([[_rand_linear(rng) for _ in range(4)] for _ in range(4)])
        for _ in range(5)
    ]
    for case in range(1000):
        m = matrices[case % len(matrices)]
        pt = tuple(QSqrt5(Fraction(rng.randint(-5, 5))) for _ in range(4))
        if all(c == ZERO for c in pt):
            pt = (ONE, ZERO, ZERO, ZERO)
        lam = QSqrt5(Fraction(rng.randint(1, 9), rng.randint(1, 5)))
        assert m.rank_at(pt) == m.rank_at(tuple(c * lam for c in pt))
    return "1000 random point/scale pairs give scale-invariant ranks"


@_criterion("A11.code")
def test_a11_code_linearity():
    code = extended_code()
    gens = code.generators
    rng = random.Random(11005)
    for _ in range(1000):
        u = xor_sum(g for g in gens if rng.random() < 0.5)
        v = xor_sum(g for g in gens if rng.random() < 0.5)
        assert u in code and v in code
        assert u ^ v in code
        assert (u ^ v).cardinality() == (u ^ v).weight() - (u ^ v).bit(0)
    return "1000 random combinations stay in the code; cardinality consistent"
