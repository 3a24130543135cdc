"""Sparse polynomials in x0..x3 over Q(sqrt5), with exact linear algebra.

Term order is graded lexicographic with x0 > x1 > x2 > x3, used both for
canonical printing and for the square-root recursion.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction

from .qsqrt5 import ONE, QSqrt5, ZERO

NVARS = 4
Expt = tuple[int, int, int, int]


class ShapeError(ValueError):
    """Matrix has the wrong shape for the requested operation."""


class ParseError(ValueError):
    """Input does not conform to the polynomial grammar."""


def _grlex_key(e: Expt) -> tuple:
    return (sum(e), e)


class Poly:
    """Sparse polynomial: map from exponent vectors to nonzero coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[Expt, QSqrt5] | None = None) -> None:
        clean: dict[Expt, QSqrt5] = {}
        if terms:
            for e, c in terms.items():
                if not isinstance(c, QSqrt5):
                    c = QSqrt5(c)
                if c:
                    clean[tuple(e)] = c
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return Poly()

    @staticmethod
    def constant(c) -> "Poly":
        return Poly({(0, 0, 0, 0): QSqrt5(c) if not isinstance(c, QSqrt5) else c})

    @staticmethod
    def variable(i: int) -> "Poly":
        e = [0] * NVARS
        e[i] = 1
        return Poly({tuple(e): ONE})

    # -- inspection -----------------------------------------------------------

    @property
    def terms(self) -> dict[Expt, QSqrt5]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self._terms}
        return len(degs) <= 1

    def coefficient(self, e: Expt) -> QSqrt5:
        return self._terms.get(tuple(e), ZERO)

    def leading_term(self) -> tuple[Expt, QSqrt5]:
        """(exponent, coefficient) of the graded-lex leading term."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self._terms, key=_grlex_key)
        return e, self._terms[e]

    def variables(self) -> set[int]:
        return {i for e in self._terms for i in range(NVARS) if e[i]}

    # -- ring operations --------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, ZERO) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        p = Poly.__new__(Poly)
        object.__setattr__(p, "_terms", out)
        return p

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        p = Poly.__new__(Poly)
        object.__setattr__(p, "_terms", {e: -c for e, c in self._terms.items()})
        return p

    def __mul__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        out: dict[Expt, QSqrt5] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                s = out.get(e, ZERO) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        p = Poly.__new__(Poly)
        object.__setattr__(p, "_terms", out)
        return p

    def scale(self, c) -> "Poly":
        if not isinstance(c, QSqrt5):
            c = QSqrt5(c)
        if not c:
            return Poly.zero()
        p = Poly.__new__(Poly)
        object.__setattr__(p, "_terms", {e: k * c for e, k in self._terms.items()})
        return p

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def derivative(self, var: int) -> "Poly":
        out: dict[Expt, QSqrt5] = {}
        for e, c in self._terms.items():
            if e[var]:
                e2 = list(e)
                e2[var] -= 1
                out[tuple(e2)] = c * e[var]
        return Poly(out)

    def eval(self, point) -> QSqrt5:
        """Exact evaluation at a 4-vector of QSqrt5 (or rational) values."""
        pt = [x if isinstance(x, QSqrt5) else QSqrt5(x) for x in point]
        total = ZERO
        for e, c in self._terms.items():
            v = c
            for i in range(NVARS):
                if e[i]:
                    v = v * pt[i] ** e[i]
            total = total + v
        return total

    def substitute(self, var: int, repl: "Poly") -> "Poly":
        """Replace variable ``var`` by the polynomial ``repl``."""
        out = Poly.zero()
        powers: dict[int, Poly] = {0: Poly.constant(1)}
        for e, c in self._terms.items():
            k = e[var]
            if k not in powers:
                powers[k] = repl ** k
            e2 = list(e)
            e2[var] = 0
            out = out + Poly({tuple(e2): c}) * powers[k]
        return out

    # -- comparisons --------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


# -- canonical printing ------------------------------------------------------------


def _format_coeff(c: QSqrt5) -> str:
    if not c.b:
        return str(c.a)
    if not c.a:
        sign = "-" if c.b < 0 else ""
        return f"{sign}{abs(c.b)}*r5"
    bs = "+" if c.b > 0 else "-"
    return f"({c.a}{bs}{abs(c.b)}*r5)"


def _format_monomial(e: Expt) -> str:
    parts = []
    for i in range(NVARS):
        if e[i] == 1:
            parts.append(f"x{i}")
        elif e[i] > 1:
            parts.append(f"x{i}^{e[i]}")
    return "*".join(parts)


def format_poly(p: Poly) -> str:
    """Canonical text form: graded-lex descending, grammar-compatible."""
    if p.is_zero():
        return "0"
    pieces = []
    for e in sorted(p._terms, key=_grlex_key, reverse=True):
        c = p._terms[e]
        mono = _format_monomial(e)
        cs = _format_coeff(c)
        if mono and cs == "1":
            pieces.append(mono)
        elif mono and cs == "-1":
            pieces.append(f"-{mono}")
        elif mono:
            pieces.append(f"{cs}*{mono}")
        else:
            pieces.append(cs)
    out = pieces[0]
    for piece in pieces[1:]:
        if piece.startswith("-"):
            out += f" - {piece[1:]}"
        else:
            out += f" + {piece}"
    return out


# -- parsing --------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(\d+|r5|x[0-3]|[+\-*/^()])")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ParseError(f"unexpected input at {text[pos:]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens: list[str]) -> None:
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input")
        self.pos += 1
        return tok

    def parse_expr(self) -> Poly:
        sign = 1
        while self.peek() in ("+", "-"):
            if self.next() == "-":
                sign = -sign
        out = self.parse_term().scale(sign)
        while self.peek() in ("+", "-"):
            sign = 1
            while self.peek() in ("+", "-"):
                if self.next() == "-":
                    sign = -sign
            out = out + self.parse_term().scale(sign)
        return out

    def parse_term(self) -> Poly:
        out = self.parse_factor()
        while self.peek() == "*":
            self.next()
            out = out * self.parse_factor()
        return out

    def parse_factor(self) -> Poly:
        tok = self.next()
        if tok == "(":
            inner = self.parse_expr()
            if self.next() != ")":
                raise ParseError("missing closing parenthesis")
            return inner
        if tok == "-":
            return -self.parse_factor()
        if tok == "r5":
            return Poly.constant(QSqrt5(0, 1))
        if tok.startswith("x"):
            p = Poly.variable(int(tok[1]))
            if self.peek() == "^":
                self.next()
                p = p ** int(self.next())
            return p
        if tok.isdigit():
            num = int(tok)
            if self.peek() == "/":
                self.next()
                den = self.next()
                if not den.isdigit():
                    raise ParseError(f"bad denominator {den!r}")
                return Poly.constant(Fraction(num, int(den)))
            return Poly.constant(num)
        raise ParseError(f"unexpected token {tok!r}")


def parse_poly(text: str) -> Poly:
    """Parse the grammar used for all polynomial data files and CLI I/O."""
    parser = _Parser(_tokenize(text))
    p = parser.parse_expr()
    if parser.peek() is not None:
        raise ParseError(f"trailing input at token {parser.peek()!r}")
    return p


# -- exact scalar linear algebra ----------------------------------------------------


def scalar_rank(rows: list[list[QSqrt5]]) -> int:
    """Rank of a matrix over Q(sqrt5) by exact Gaussian elimination."""
    m = [[c if isinstance(c, QSqrt5) else QSqrt5(c) for c in row] for row in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = next((r for r in range(row, nrows) if m[r][col]), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = m[row][col].inverse()
        for r in range(row + 1, nrows):
            if m[r][col]:
                f = m[r][col] * inv
                for c in range(col, ncols):
                    m[r][c] = m[r][c] - f * m[row][c]
        row += 1
        rank += 1
        if row == nrows:
            break
    return rank


class PolyMatrix:
    """Rectangular grid of Poly entries."""

    def __init__(self, entries: list[list[Poly]]) -> None:
        if entries and any(len(r) != len(entries[0]) for r in entries):
            raise ShapeError("ragged rows")
        self.entries = [list(r) for r in entries]

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.entries), len(self.entries[0]) if self.entries else 0)

    def __getitem__(self, ij: tuple[int, int]) -> Poly:
        i, j = ij
        return self.entries[i][j]

    def is_symmetric(self) -> bool:
        n, m = self.shape
        return n == m and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(n)
            for j in range(i + 1, n)
        )

    def is_linear(self) -> bool:
        return all(p.degree() <= 1 for row in self.entries for p in row)

    def det(self) -> Poly:
        """Exact determinant; Laplace expansion memoized over column subsets."""
        n, m = self.shape
        if n != m:
            raise ShapeError(f"determinant of a {n}x{m} matrix")
        if n == 0:
            return Poly.constant(1)
        memo: dict[tuple[int, ...], Poly] = {}

        def minor(row: int, cols: tuple[int, ...]) -> Poly:
            if len(cols) == 1:
                return self.entries[row][cols[0]]
            if cols in memo:
                return memo[cols]
            acc = Poly.zero()
            for idx, col in enumerate(cols):
                entry = self.entries[row][col]
                if entry.is_zero():
                    continue
                sub = minor(row + 1, cols[:idx] + cols[idx + 1:])
                term = entry * sub
                acc = acc + (term if idx % 2 == 0 else -term)
            memo[cols] = acc
            return acc

        return minor(0, tuple(range(n)))

    def evaluate(self, point) -> list[list[QSqrt5]]:
        return [[p.eval(point) for p in row] for row in self.entries]

    def rank_at(self, point) -> int:
        """Rank of the scalar matrix M(point); homogeneous entries make this
        invariant under projective rescaling of the point."""
        return scalar_rank(self.evaluate(point))


# -- polynomial square root -----------------------------------------------------------


def square_root(g: Poly) -> tuple[QSqrt5, Poly] | None:
    """Write a homogeneous G as c * h^2 with h monic in graded-lex order.

    Returns None when no such decomposition over Q(sqrt5) exists.  Coefficients
    of h are recovered one term at a time, descending in graded-lex order; each
    step is a linear solve against the matched coefficient of G.
    """
    if g.is_zero():
        return ONE, Poly.zero()
    if not g.is_homogeneous():
        raise ValueError("square_root requires a homogeneous polynomial")
    deg = g.degree()
    if deg % 2:
        return None
    lead_e, lead_c = g.leading_term()
    if any(x % 2 for x in lead_e):
        return None
    half = deg // 2
    top: Expt = tuple(x // 2 for x in lead_e)  # type: ignore[assignment]
    scaled = g.scale(lead_c.inverse())

    candidates = [
        e
        for e in _monomials_of_degree(half)
        if _grlex_key(e) < _grlex_key(top)
    ]
    candidates.sort(key=_grlex_key, reverse=True)

    known: dict[Expt, QSqrt5] = {top: ONE}
    for mono in candidates:
        target = tuple(mono[i] + top[i] for i in range(NVARS))
        conv = ZERO
        for p, cp in known.items():
            q = tuple(target[i] - p[i] for i in range(NVARS))
            if all(x >= 0 for x in q) and q in known:
                conv = conv + cp * known[q]
        coeff = (scaled.coefficient(target) - conv) / QSqrt5(2)
        if coeff:
            known[mono] = coeff
    root = Poly(known)
    if root * root == scaled:
        return lead_c, root
    return None


def _monomials_of_degree(d: int) -> list[Expt]:
    out = []
    for e0, e1, e2 in itertools.product(range(d + 1), repeat=3):
        if e0 + e1 + e2 <= d:
            out.append((e0, e1, e2, d - e0 - e1 - e2))
    return out
