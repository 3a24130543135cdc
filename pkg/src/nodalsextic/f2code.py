"""Binary linear-code engine for the extended code of a 65-nodal sextic.

Codewords are 66-bit vectors.  Printed column order is preserved: bit 0 is
the half-even flag, bits 1..65 index the nodes P1..P65.  Lexicographic order
on the printed string (flag bit most significant) is the canonical order.

Also houses the scalar bookkeeping formulas: the Euler-characteristic
polynomial, node-count bounds and instability thresholds, and the twist
sequences of the split two-term resolution.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .data import read_data

NBITS = 66
NNODES = 65


class LengthError(ValueError):
    """Codeword string is not exactly 66 bits."""


class RankError(ValueError):
    """Generator rows are linearly dependent over F2."""


class ParityError(ValueError):
    """Splitting-type twist is not an integer."""


@dataclass(frozen=True, order=True)
class Codeword:
    """A 66-bit vector.  ``bits`` stores printed column i at shift 65-i, so
    integer comparison equals lexicographic comparison of the printed string."""

    bits: int

    def __post_init__(self) -> None:
        if not 0 <= self.bits < (1 << NBITS):
            raise LengthError("codeword out of 66-bit range")

    @staticmethod
    def from_string(s: str) -> "Codeword":
        stripped = "".join(ch for ch in s if not ch.isspace() and ch not in "|,;")
        if any(ch not in "01" for ch in stripped):
            raise LengthError(f"non-binary character in {s!r}")
        if len(stripped) != NBITS:
            raise LengthError(f"expected {NBITS} bits, got {len(stripped)}")
        return Codeword(int(stripped, 2))

    def to_string(self) -> str:
        return format(self.bits, f"0{NBITS}b")

    def bit(self, i: int) -> int:
        if not 0 <= i < NBITS:
            raise IndexError(f"bit index {i} outside 0..{NBITS - 1}")
        return (self.bits >> (NBITS - 1 - i)) & 1

    def __xor__(self, other: "Codeword") -> "Codeword":
        return Codeword(self.bits ^ other.bits)

    def weight(self) -> int:
        return self.bits.bit_count()

    def is_half_even(self) -> bool:
        return bool(self.bit(0))

    def cardinality(self) -> int:
        """Size of the underlying node set: weight minus the flag bit."""
        return self.weight() - self.bit(0)

    def node_set(self) -> frozenset[int]:
        return frozenset(i for i in range(1, NBITS) if self.bit(i))

    def __str__(self) -> str:
        return self.to_string()


ZERO_WORD = Codeword(0)


def xor_sum(words) -> Codeword:
    """Bitwise XOR of all inputs; the empty sequence yields the zero word."""
    acc = 0
    for w in words:
        acc ^= w.bits
    return Codeword(acc)


def incidence(w: Codeword, i: int) -> int:
    """Bit i of w for a node index i in 1..65 (the curve of w passes through
    node i iff this is 1)."""
    if not 1 <= i <= NNODES:
        raise IndexError(f"node index {i} outside 1..{NNODES}")
    return w.bit(i)


def _f2_rank(rows: list[int]) -> int:
    basis: list[int] = []
    for v in rows:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return len(basis)


class Code:
    """F2-span of 13 independent generator codewords (the extended code)."""

    DIMENSION = 13

    def __init__(self, generators) -> None:
        gens = tuple(generators)
        if len(gens) != self.DIMENSION:
            raise RankError(f"expected {self.DIMENSION} generators, got {len(gens)}")
        if _f2_rank([g.bits for g in gens]) != self.DIMENSION:
            raise RankError("generator rows are dependent over F2")
        self.generators = gens
        # Row-reduced basis with pivot positions, for membership tests.
        self._reduced: list[int] = []
        for g in gens:
            v = g.bits
            for b in self._reduced:
                v = min(v, v ^ b)
            self._reduced.append(v)
            self._reduced.sort(reverse=True)

    def __len__(self) -> int:
        return 1 << self.DIMENSION

    def enumerate(self):
        """All 8192 codewords, exactly once, in a deterministic order."""
        words = [0]
        for g in self.generators:
            words.extend([w ^ g.bits for w in list(words)])
        for w in words:
            yield Codeword(w)

    def contains(self, w: Codeword) -> bool:
        v = w.bits
        for b in self._reduced:
            v = min(v, v ^ b)
        return v == 0

    __contains__ = contains

    def weight_enumerator(self) -> dict[int, int]:
        dist: dict[int, int] = {}
        for w in self.enumerate():
            k = w.weight()
            dist[k] = dist.get(k, 0) + 1
        return dict(sorted(dist.items()))

    def min_weight_words(self) -> list[Codeword]:
        """All nonzero words of minimum weight, in canonical (lex) order."""
        best: int | None = None
        words: list[Codeword] = []
        for w in self.enumerate():
            if not w.bits:
                continue
            k = w.weight()
            if best is None or k < best:
                best, words = k, [w]
            elif k == best:
                words.append(w)
        return sorted(words)


def load_code(rows) -> Code:
    """Build the extended code from 13 bitstrings (separators allowed)."""
    return Code(Codeword.from_string(r) for r in rows)


def decompose(target: Codeword, k: int, pool) -> list[tuple[int, ...]]:
    """All k-subsets of the pool whose XOR is the target.

    Returns 1-based index tuples into the pool, in canonical (sorted) order;
    the scan is exhaustive over all C(len(pool), k) combinations.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    pool = list(pool)
    out = []
    for combo in itertools.combinations(range(len(pool)), k):
        acc = 0
        for i in combo:
            acc ^= pool[i].bits
        if acc == target.bits:
            out.append(tuple(i + 1 for i in combo))
    return out


# -- data files ------------------------------------------------------------------


def _read_data(name: str) -> list[str]:
    text = read_data(name)
    return [line.strip() for line in text.splitlines() if line.strip()]


def generator_rows() -> list[str]:
    return _read_data("extended_code_generators.txt")


def minimal_codeword_rows() -> list[str]:
    return _read_data("minimal_codewords.txt")


def extended_code() -> Code:
    """The extended code of a 65-nodal sextic, from the checked-in generators."""
    return load_code(generator_rows())


def table1_words() -> list[Codeword]:
    """The 26 minimal codewords w1..w26 in printed order."""
    return [Codeword.from_string(r) for r in minimal_codeword_rows()]


# -- scalar bookkeeping --------------------------------------------------------------


def euler_characteristic(m: int, node_count: int) -> Fraction:
    """chi of the twisted half-quadratic sheaf: 11 + (3/4)(2m-1)(2m-5) - n/4."""
    return 11 + Fraction(3, 4) * (2 * m - 1) * (2 * m - 5) - Fraction(node_count, 4)


MAX_NODES_KNOWN = {2: 1, 3: 4, 4: 16, 5: 31, 6: 65}


@dataclass(frozen=True)
class Bounds:
    miyaoka: Fraction
    mu_known: int | None
    thresholds: tuple[Fraction, Fraction, Fraction]


def bounds(d: int) -> Bounds:
    """Node-count bound (4/9)d(d-1)^2, the known maxima for small d, and the
    three instability thresholds ((d/2)^3, d(d-1)^2/8, d(d-2)^2/8)."""
    if d < 2:
        raise ValueError("degree must be >= 2")
    return Bounds(
        miyaoka=Fraction(4, 9) * d * (d - 1) ** 2,
        mu_known=MAX_NODES_KNOWN.get(d),
        thresholds=(
            Fraction(d, 2) ** 3,
            Fraction(d * (d - 1) ** 2, 8),
            Fraction(d * (d - 2) ** 2, 8),
        ),
    )


@dataclass(frozen=True)
class SplittingType:
    """Diagonal degrees (d1 <= ... <= dr, all odd) of a symmetric half-even
    set on a surface of even degree d."""

    degrees: tuple[int, ...]
    surface_degree: int

    def __post_init__(self) -> None:
        if self.surface_degree % 2:
            raise ValueError("surface degree must be even")
        if any(di <= 0 or di % 2 == 0 for di in self.degrees):
            raise ValueError("diagonal degrees must be odd and positive")
        if list(self.degrees) != sorted(self.degrees):
            raise ValueError("diagonal degrees must be nondecreasing")


def resolution_twists(t: SplittingType) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Twists of the two-term resolution: target entries -(d+1-di)/2 and
    source entries (d+1-di)/2 - d - 1."""
    d = t.surface_degree
    for di in t.degrees:
        if (d + 1 - di) % 2:
            raise ParityError(f"d+1-di = {d + 1 - di} is odd")
    target = tuple(-(d + 1 - di) // 2 for di in t.degrees)
    source = tuple((d + 1 - di) // 2 - d - 1 for di in t.degrees)
    return source, target
