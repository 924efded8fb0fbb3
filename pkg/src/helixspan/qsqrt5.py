"""Exact arithmetic in the quadratic field Q(sqrt 5)."""

from __future__ import annotations

import re
from fractions import Fraction
from functools import total_ordering

import mpmath

__all__ = ["QSqrt5"]

_FORMAT = re.compile(r"^\s*(?P<a>-?\d+(?:/\d+)?)\s*(?P<sign>[+-])\s*(?P<b>\d+(?:/\d+)?)\*sqrt5\s*$")


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


@total_ordering
class QSqrt5:
    """The number ``a + b*sqrt(5)`` with rational ``a`` and ``b``."""

    __slots__ = ("a", "b")

    def __init__(self, a: int | Fraction = 0, b: int | Fraction = 0) -> None:
        self.a = Fraction(a)
        self.b = Fraction(b)

    @classmethod
    def parse(cls, text: str) -> QSqrt5:
        """Inverse of :meth:`format`, e.g. ``"7/2-3/2*sqrt5"``."""
        m = _FORMAT.match(text)
        if not m:
            raise ValueError(f"cannot parse {text!r}")
        b = Fraction(m["b"])
        return cls(Fraction(m["a"]), b if m["sign"] == "+" else -b)

    def format(self) -> str:
        sign = "-" if self.b < 0 else "+"
        return f"{self.a}{sign}{abs(self.b)}*sqrt5"

    def __repr__(self) -> str:
        return f"QSqrt5({self.a}, {self.b})"

    __str__ = format

    @staticmethod
    def _lift(other) -> QSqrt5 | None:
        if isinstance(other, QSqrt5):
            return other
        if isinstance(other, (int, Fraction)):
            return QSqrt5(other)
        return None

    def __eq__(self, other: object) -> bool:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QSqrt5(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> QSqrt5:
        return QSqrt5(-self.a, -self.b)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QSqrt5(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QSqrt5(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def conjugate(self) -> QSqrt5:
        return QSqrt5(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - 5 * self.b * self.b

    def inverse(self) -> QSqrt5:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero has no inverse")
        return QSqrt5(self.a / n, -self.b / n)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def sign(self) -> int:
        """Exact sign of ``a + b*sqrt(5)``."""
        sa, sb = _sign(self.a), _sign(self.b)
        if sa == sb or sb == 0:
            return sa
        if sa == 0:
            return sb
        # opposite signs: compare a^2 with 5 b^2
        return sa * _sign(self.a * self.a - 5 * self.b * self.b)

    def __lt__(self, other) -> bool:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def to_mpf(self, prec: int = 100) -> mpmath.mpf:
        """Numeric value at ``prec`` bits, free of cancellation between the two parts."""

        def fr(x: Fraction) -> mpmath.mpf:
            return mpmath.mpf(x.numerator) / x.denominator

        with mpmath.workprec(prec + 20):
            root5 = mpmath.sqrt(5)
            if _sign(self.a) * _sign(self.b) < 0:
                value = fr(self.norm()) / (fr(self.a) - fr(self.b) * root5)
            else:
                value = fr(self.a) + fr(self.b) * root5
        with mpmath.workprec(prec):
            return +value

    def __float__(self) -> float:
        return float(self.to_mpf(80))
