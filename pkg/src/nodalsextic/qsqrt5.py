"""Exact arithmetic in the real quadratic field Q(sqrt 5).

Elements are stored as ``a + b*sqrt(5)`` with ``a, b`` rational.  The golden
ratio ``tau = (1+sqrt5)/2`` and its conjugate ``taubar = (1-sqrt5)/2`` are the
scalars that appear throughout the Barth-sextic computations.
"""

from __future__ import annotations

import math
from fractions import Fraction

RatLike = int | Fraction


class QSqrt5:
    """An element a + b*sqrt(5) with exact rational a, b."""

    __slots__ = ("a", "b")

    def __init__(self, a: RatLike = 0, b: RatLike = 0) -> None:
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, name, value):  # immutable
        raise AttributeError("QSqrt5 is immutable")

    # -- basic predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.a and not self.b

    def is_rational(self) -> bool:
        return not self.b

    def norm(self) -> Fraction:
        """Field norm a^2 - 5 b^2; zero iff the element is zero."""
        return self.a * self.a - 5 * self.b * self.b

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "QSqrt5 | None":
        if isinstance(x, QSqrt5):
            return x
        if isinstance(x, (int, Fraction)):
            return QSqrt5(x)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt5(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt5(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> "QSqrt5":
        return QSqrt5(-self.a, -self.b)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt5(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def inverse(self) -> "QSqrt5":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero in Q(sqrt5)")
        return QSqrt5(self.a / n, -self.b / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> "QSqrt5":
        if n < 0:
            return self.inverse() ** (-n)
        out = QSqrt5(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "QSqrt5":
        """Galois conjugate: sqrt5 -> -sqrt5 (sends tau to taubar)."""
        return QSqrt5(self.a, -self.b)

    # -- comparisons / hashing ------------------------------------------------

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(5.0)

    # -- text form ------------------------------------------------------------

    def __repr__(self) -> str:
        return f"QSqrt5({self.a!r}, {self.b!r})"

    def __str__(self) -> str:
        if not self.b:
            return str(self.a)
        if not self.a:
            return f"{self.b}*r5"
        return f"{self.a}{'+' if self.b > 0 else '-'}{abs(self.b)}*r5"


ZERO = QSqrt5(0)
ONE = QSqrt5(1)
SQRT5 = QSqrt5(0, 1)
TAU = QSqrt5(Fraction(1, 2), Fraction(1, 2))
TAUBAR = TAU.conjugate()
