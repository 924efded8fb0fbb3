"""Truncated power series with exact rational coefficients.

Also hosts the univariate generating functions of (r-canonical) secondary
structures.  Integer convolutions go through Kronecker substitution so that
series of a few thousand big-integer terms multiply in milliseconds.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

try:
    from gmpy2 import mpz as _bigint
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _bigint = int

__all__ = [
    "RationalSeries",
    "canonical_irr_series",
    "canonical_polynomials",
    "canonical_series",
    "irr_series",
    "mul_int_series",
    "secondary_series",
]

_SCHOOLBOOK_LIMIT = 48


def _schoolbook(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    out = [0] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if x:
            for j, y in enumerate(b[: n + 1 - i]):
                out[i + j] += x * y
    return out


def _kronecker_nonneg(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    a = a[: n + 1]
    b = b[: n + 1]
    bits = (
        max(x.bit_length() for x in a)
        + max(y.bit_length() for y in b)
        + min(len(a), len(b)).bit_length()
    )
    width = bits // 8 + 1
    pa = int.from_bytes(b"".join(x.to_bytes(width, "little") for x in a), "little")
    pb = int.from_bytes(b"".join(y.to_bytes(width, "little") for y in b), "little")
    prod = int(_bigint(pa) * _bigint(pb))
    raw = prod.to_bytes(width * (len(a) + len(b)), "little")
    out = [int.from_bytes(raw[k * width : (k + 1) * width], "little") for k in range(min(n + 1, len(a) + len(b) - 1))]
    return out + [0] * (n + 1 - len(out))


def mul_int_series(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    """Coefficients ``0..n`` of the product of two integer series."""
    if not a or not b:
        return [0] * (n + 1)
    if min(len(a), len(b), n + 1) <= _SCHOOLBOOK_LIMIT:
        return _schoolbook(a, b, n)
    a_pos = [x if x > 0 else 0 for x in a]
    a_neg = [-x if x < 0 else 0 for x in a]
    b_pos = [y if y > 0 else 0 for y in b]
    b_neg = [-y if y < 0 else 0 for y in b]
    out = [0] * (n + 1)
    for sign, u, v in ((1, a_pos, b_pos), (1, a_neg, b_neg), (-1, a_pos, b_neg), (-1, a_neg, b_pos)):
        if any(u) and any(v):
            for k, c in enumerate(_kronecker_nonneg(u, v, n)):
                out[k] += sign * c
    return out


def _rational_sqrt(x: Fraction) -> Fraction:
    if x < 0:
        raise ValueError(f"no real square root of {x}")
    p, q = x.numerator, x.denominator
    rp, rq = math.isqrt(p), math.isqrt(q)
    if rp * rp != p or rq * rq != q:
        raise ValueError(f"{x} is not the square of a rational")
    return Fraction(rp, rq)


class RationalSeries:
    """Power series ``c_0 + c_1 z + ... + c_N z^N`` known exactly up to order ``N``.

    Coefficients beyond the truncation order are undefined; binary operations
    truncate to the smaller order of the two operands.  Instances are immutable.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int | Fraction], order: int | None = None) -> None:
        c = [Fraction(x) for x in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("truncation order must be nonnegative")
            c = (c + [Fraction(0)] * (order + 1))[: order + 1]
        if not c:
            raise ValueError("a series needs at least one coefficient")
        self._c = tuple(c)

    @classmethod
    def polynomial(cls, coeffs: Sequence[int | Fraction], order: int) -> RationalSeries:
        return cls(coeffs, order)

    @classmethod
    def monomial(cls, k: int, order: int, coeff: int | Fraction = 1) -> RationalSeries:
        c = [0] * (order + 1)
        if k <= order:
            c[k] = coeff
        return cls(c)

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    def __getitem__(self, k: int) -> Fraction:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient {k} outside truncation order {self.order}")
        return self._c[k]

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __repr__(self) -> str:
        head = ", ".join(str(x) for x in self._c[:8])
        return f"RationalSeries([{head}{', ...' if self.order >= 8 else ''}], order={self.order})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalSeries):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def truncate(self, order: int) -> RationalSeries:
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return RationalSeries(self._c[: order + 1])

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self._c)

    def integers(self) -> list[int]:
        if not self.is_integral():
            raise ValueError("series has non-integer coefficients")
        return [x.numerator for x in self._c]

    def _coerce(self, other: RationalSeries | int | Fraction) -> RationalSeries:
        if isinstance(other, RationalSeries):
            return other
        if isinstance(other, Rational):
            return RationalSeries([other], self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = min(self.order, other.order)
        return RationalSeries(self._c[k] + other._c[k] for k in range(n + 1))

    __radd__ = __add__

    def __neg__(self) -> RationalSeries:
        return RationalSeries(-x for x in self._c)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            return RationalSeries(x * other for x in self._c)
        if not isinstance(other, RationalSeries):
            return NotImplemented
        n = min(self.order, other.order)
        if self.is_integral() and other.is_integral():
            return RationalSeries(mul_int_series(self.integers(), other.integers(), n))
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            x = self._c[i]
            if x:
                for j in range(n + 1 - i):
                    out[i + j] += x * other._c[j]
        return RationalSeries(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> RationalSeries:
        """Multiply by ``z**k``, keeping the truncation order."""
        return RationalSeries(([Fraction(0)] * k + list(self._c))[: self.order + 1])

    def inverse(self) -> RationalSeries:
        """Multiplicative inverse; requires a nonzero constant term."""
        c0 = self._c[0]
        if c0 == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        n = self.order
        inv = [Fraction(0)] * (n + 1)
        inv[0] = 1 / c0
        for k in range(1, n + 1):
            acc = sum(self._c[j] * inv[k - j] for j in range(1, k + 1) if self._c[j])
            inv[k] = -acc * inv[0]
        return RationalSeries(inv)

    def __truediv__(self, other):
        if isinstance(other, Rational):
            return RationalSeries(x / other for x in self._c)
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return self * other.inverse()

    def sqrt(self) -> RationalSeries:
        """Square root with the positive rational root of ``c_0`` as seed.

        Newton iteration ``y <- (y + f / y) / 2`` doubles the number of correct
        coefficients per step.
        """
        root0 = _rational_sqrt(self._c[0])
        if root0 == 0:
            raise ValueError("square root needs a nonzero constant term")
        n = self.order
        y = RationalSeries([root0])
        prec = 0
        while prec < n:
            prec = min(2 * prec + 1, n)
            f = self.truncate(prec)
            y = RationalSeries(list(y.coeffs) + [0] * (prec - y.order))
            y = (y + f * y.inverse()) * Fraction(1, 2)
        return y


@lru_cache(maxsize=8)
def _secondary_counts(order: int) -> tuple[int, ...]:
    s = [1, 1][: order + 1]
    for n in range(2, order + 1):
        m = n - 2
        half = sum(s[k] * s[m - k] for k in range((m + 1) // 2))
        conv = 2 * half + (s[m // 2] ** 2 if m % 2 == 0 else 0)
        s.append(s[n - 1] - s[n - 2] + conv)
    return tuple(s)


def secondary_series(order: int) -> RationalSeries:
    """Counts ``s_0..s_N`` of secondary structures of each length.

    Uses ``s_n = s_{n-1} - s_{n-2} + sum_k s_k s_{n-2-k}``, the coefficient form
    of ``z^2 S^2 - (1 - z + z^2) S + 1 = 0``.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    return RationalSeries(_secondary_counts(order))


def irr_series(order: int) -> RationalSeries:
    """Irreducible structures: ``z^2 (S(z) - 1)``."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    if order < 3:
        return RationalSeries([0] * (order + 1))
    s = _secondary_counts(order - 2)
    return RationalSeries([0, 0, 0] + list(s[1:]))


def canonical_polynomials(r: int) -> tuple[list[int], list[int], list[int]]:
    """Integer coefficient lists of ``A_r``, ``D_r = 1 - z^2 + z^{2r}`` and ``p_r``.

    ``S_r`` is the root of ``z^{2r} S^2 - A_r S + D_r = 0`` with ``S_r(0) = 1``
    and ``p_r = A_r^2 - 4 z^{2r} D_r`` is its discriminant.
    """
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    deg = 2 * r + 1
    d = [0] * (deg + 1)
    d[0] += 1
    d[2] -= 1
    d[2 * r] += 1
    # A_r = z^{2r} - (z - 1) D_r
    a = [0] * (deg + 1)
    a[2 * r] += 1
    for k, c in enumerate(d):
        if c:
            a[k] += c
            if k + 1 <= deg:
                a[k + 1] -= c
    a2 = _schoolbook(a, a, 2 * deg)
    p = list(a2)
    for k, c in enumerate(d):
        p[k + 2 * r] -= 4 * c
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    while len(d) > 1 and d[-1] == 0:
        d.pop()
    return a, d, p


@lru_cache(maxsize=32)
def _canonical_counts(r: int, order: int) -> tuple[int, ...]:
    a, d, _ = canonical_polynomials(r)
    assert a[0] == 1
    shift = 2 * r
    s: list[int] = []
    square: list[int] = []  # coefficients of S_r^2, filled lazily
    for n in range(order + 1):
        m = n - shift
        if m >= 0:
            while len(square) <= m:
                k = len(square)
                square.append(sum(s[i] * s[k - i] for i in range(k + 1)))
        value = (d[n] if n < len(d) else 0) + (square[m] if m >= 0 else 0)
        value -= sum(a[k] * s[n - k] for k in range(1, min(n, len(a) - 1) + 1))
        s.append(value)
    return tuple(s)


def canonical_series(r: int, order: int, method: str = "recurrence") -> RationalSeries:
    """Counts of ``r``-canonical secondary structures (every stack has ``>= r`` arcs).

    ``method="recurrence"`` solves the quadratic equation coefficientwise;
    ``method="sqrt"`` evaluates ``(A_r - sqrt(p_r)) / (2 z^{2r})`` with a
    Newton series square root.  Both must agree.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    if method == "recurrence":
        return RationalSeries(_canonical_counts(r, order))
    if method != "sqrt":
        raise ValueError(f"unknown method {method!r}")
    a, _, p = canonical_polynomials(r)
    full = order + 2 * r
    root = RationalSeries.polynomial(p, full).sqrt()
    numer = RationalSeries.polynomial(a, full) - root
    if any(numer[k] for k in range(2 * r)):
        raise ArithmeticError("numerator does not vanish to order 2r")
    return RationalSeries(numer[k] / 2 for k in range(2 * r, full + 1))


def canonical_irr_series(r: int, order: int) -> RationalSeries:
    """Irreducible ``r``-canonical structures: ``z^{2r} (S_r - 1) / (1 - z^2 + z^{2r})``."""
    s = canonical_series(r, order)
    _, d, _ = canonical_polynomials(r)
    t = (s - 1).shift(2 * r)
    return t / RationalSeries.polynomial(d, order)
