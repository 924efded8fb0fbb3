"""Exact distance tables ``w_r(n, d)`` extracted from the bivariate generating function.

Writing ``T = z^{2r} (S_r - 1)`` and ``D = 1 - z^2 + z^{2r}``, the non-trivial
part ``U = W_r - z / (1 - zu)`` satisfies

    ((1 - zu)^2 D - (1 - zu) u^2 T) U = u T.

Taking the coefficient of ``u^d`` gives each column ``U_d(z)`` from the three
previous ones with a single series product, so the table is built column by
column in exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .series import (
    canonical_polynomials,
    canonical_series,
    mul_int_series,
    secondary_series,
)

__all__ = [
    "DistanceTable",
    "LengthOutOfRange",
    "distance_table",
    "probability_row",
    "direct_table",
]


class LengthOutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class DistanceTable:
    """Counts ``w(n, d)`` for ``1 <= n <= N`` and ``0 <= d < n`` (``d <= d_max`` if truncated).

    ``rows[n][d]`` is ``w(n, d)``; ``rows[0]`` is empty.  ``totals[n]`` is the
    number of ``r``-canonical structures of length ``n``, which equals the row
    sum whenever the table is not truncated in ``d``.
    """

    r: int
    N: int
    rows: tuple[tuple[int, ...], ...]
    totals: tuple[int, ...]
    d_max: int | None = None

    def w(self, n: int, d: int) -> int:
        self._check(n)
        row = self.rows[n]
        if d < 0:
            raise IndexError(d)
        if d < len(row):
            return row[d]
        if d >= n:
            return 0
        raise IndexError(f"d={d} beyond truncation d_max={self.d_max}")

    def total(self, n: int) -> int:
        self._check(n)
        return self.totals[n]

    def _check(self, n: int) -> None:
        if not 1 <= n <= self.N:
            raise LengthOutOfRange(f"n={n} outside 1..{self.N}")

    @property
    def complete(self) -> bool:
        return self.d_max is None or self.d_max >= self.N - 1


def _divide_sparse(x: list[int], poly: list[int]) -> list[int]:
    """Series quotient ``x / poly`` for a polynomial with constant term 1."""
    if poly[0] != 1:
        raise ArithmeticError("divisor must have unit constant term")
    terms = [(k, c) for k, c in enumerate(poly) if k and c]
    y = list(x)
    for n in range(len(y)):
        acc = y[n]
        for k, c in terms:
            if k > n:
                break
            acc -= c * y[n - k]
        y[n] = acc
    return y


def distance_table(r: int, N: int, d_max: int | None = None) -> DistanceTable:
    """Exact ``w_r(n, d)`` for all ``n <= N``; ``d_max`` truncates the distance range."""
    if r < 1 or N < 1:
        raise ValueError(f"need r >= 1 and N >= 1, got r={r}, N={N}")
    last = N - 1 if d_max is None else min(d_max, N - 1)
    if last < 0:
        raise ValueError("d_max must be nonnegative")
    s = canonical_series(r, N).integers()
    _, dpoly, _ = canonical_polynomials(r)
    t = [0] * (N + 1)  # z^{2r} (S_r - 1)
    for n in range(2 * r + 1, N + 1):
        t[n] = s[n - 2 * r]
    zero = [0] * (N + 1)

    def z_times(col: list[int], k: int) -> list[int]:
        return ([0] * k + col)[: N + 1]

    cols: list[list[int]] = [zero]
    for d in range(1, last + 1):
        prev1 = cols[d - 1]
        prev2 = cols[d - 2] if d >= 2 else zero
        prev3 = cols[d - 3] if d >= 3 else zero
        rhs = list(t) if d == 1 else list(zero)
        if d >= 2:
            inner = [a - b for a, b in zip(prev2, z_times(prev3, 1))]
            if any(inner):
                rhs = [a + b for a, b in zip(rhs, mul_int_series(t, inner, N))]
        y = _divide_sparse(rhs, dpoly)
        two = z_times(prev1, 1)
        sq = z_times(prev2, 2)
        cols.append([a + 2 * b - c for a, b, c in zip(y, two, sq)])

    rows: list[tuple[int, ...]] = [()]
    for n in range(1, N + 1):
        width = min(n, last + 1)
        row = [cols[d][n] for d in range(width)]
        if n - 1 < width:
            row[n - 1] += 1  # the arcless structure
        if any(x < 0 for x in row):
            raise ArithmeticError(f"negative count in row {n}")
        rows.append(tuple(row))
    return DistanceTable(r, N, tuple(rows), tuple(s), None if d_max is None else last)


def direct_table(N: int) -> DistanceTable:
    """Reference path for ``r = 1``: direct division in ``z`` with dense polynomials in ``u``.

    Evaluates ``u z^2 (S-1) / ((1-zu)^2 - (1-zu)(zu)^2 (S-1)) + z/(1-zu)``
    term by term; independent of :func:`distance_table` apart from ``S``.
    """
    if N < 1:
        raise ValueError("N must be positive")
    s = secondary_series(N).integers()
    g = [0] + s[1:]  # S - 1

    def den(k: int) -> list[tuple[int, int]]:
        terms = {0: [(0, 1)], 1: [(1, -2)], 2: [(2, 1)]}.get(k, [])
        extra = []
        if k >= 2 and g[k - 2]:
            extra.append((2, -g[k - 2]))
        if k >= 3 and g[k - 3]:
            extra.append((3, g[k - 3]))
        return terms + extra

    dens = [den(k) for k in range(N + 1)]
    u_rows: list[list[int]] = []
    for n in range(N + 1):
        acc = [0] * max(n, 1)
        if n >= 2 and g[n - 2]:
            acc[1] += g[n - 2]
        for k in range(1, n + 1):
            prev = u_rows[n - k]
            for power, c in dens[k]:
                for deg, x in enumerate(prev):
                    if x:
                        acc[deg + power] -= c * x
        u_rows.append(acc)
    rows: list[tuple[int, ...]] = [()]
    for n in range(1, N + 1):
        row = (u_rows[n] + [0] * n)[:n]
        row[n - 1] += 1
        rows.append(tuple(row))
    return DistanceTable(1, N, tuple(rows), tuple(s))


def probability_row(table: DistanceTable, n: int) -> list[Fraction]:
    """``p(n, d) = w(n, d) / w(n)`` as exact fractions, one entry per stored ``d``."""
    if not 1 <= n <= table.N:
        raise LengthOutOfRange(f"n={n} outside 1..{table.N}")
    total = table.totals[n]
    if total <= 0:
        raise LengthOutOfRange(f"no structures of length {n}")
    return [Fraction(x, total) for x in table.rows[n]]
