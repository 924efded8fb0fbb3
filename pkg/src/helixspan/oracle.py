"""Exhaustive enumeration: the brute-force ground truth for every exact count."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass, field

from .diagram import SecondaryStructure, bfs_distance, is_r_canonical
from .tableaux import Tableau

__all__ = [
    "DEFAULT_CAP",
    "Histogram",
    "SizeLimitExceeded",
    "enumerate_dot_brackets",
    "enumerate_structures",
    "enumerate_tableaux",
    "histogram",
]

DEFAULT_CAP = 22


class SizeLimitExceeded(ValueError):
    pass


def _check_size(n: int, r: int, cap: int) -> None:
    if n < 1 or r < 1:
        raise ValueError(f"need n >= 1 and r >= 1, got n={n}, r={r}")
    if n > cap:
        raise SizeLimitExceeded(f"n={n} exceeds the enumeration cap {cap}")


def enumerate_dot_brackets(n: int, *, cap: int = DEFAULT_CAP) -> Iterator[str]:
    """Every secondary structure of length ``n`` as dot-bracket, in lexicographic order.

    Characters are tried in ASCII order ``(``, ``)``, ``.``; a prefix is only
    extended when some completion exists, so nothing is generated and discarded.
    """
    _check_size(n, 1, cap)
    chars: list[str] = []
    opens: list[int] = []

    def extend(pos: int) -> Iterator[str]:
        if pos == n:
            yield "".join(chars)
            return
        remaining = n - pos - 1
        # '(' needs an interior vertex before it can close
        if remaining >= len(opens) + 2:
            opens.append(pos)
            chars.append("(")
            yield from extend(pos + 1)
            chars.pop()
            opens.pop()
        if opens and opens[-1] < pos - 1:
            top = opens.pop()
            chars.append(")")
            yield from extend(pos + 1)
            chars.pop()
            opens.append(top)
        if remaining >= len(opens):
            chars.append(".")
            yield from extend(pos + 1)
            chars.pop()

    return extend(0)


def enumerate_structures(n: int, r: int = 1, *, cap: int = DEFAULT_CAP) -> Iterator[SecondaryStructure]:
    """Lazily yield every ``r``-canonical structure of length ``n`` (lexicographic order)."""
    _check_size(n, r, cap)
    for text in enumerate_dot_brackets(n, cap=cap):
        s = _from_valid_dot_bracket(text)
        if r == 1 or is_r_canonical(s, r):
            yield s


def _from_valid_dot_bracket(text: str) -> SecondaryStructure:
    stack: list[int] = []
    arcs = []
    for pos, ch in enumerate(text, start=1):
        if ch == "(":
            stack.append(pos)
        elif ch == ")":
            arcs.append((stack.pop(), pos))
    return SecondaryStructure(len(text), frozenset(arcs))


@dataclass(frozen=True)
class Histogram:
    n: int
    r: int
    counts: dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def row(self) -> list[int]:
        """Counts indexed by distance ``0..n-1``."""
        return [self.counts.get(d, 0) for d in range(self.n)]


def histogram(n: int, r: int = 1, *, cap: int = DEFAULT_CAP) -> Histogram:
    counts = Counter(bfs_distance(s) for s in enumerate_structures(n, r, cap=cap))
    return Histogram(n, r, dict(sorted(counts.items())))


def enumerate_tableaux(n: int, *, cap: int = DEFAULT_CAP) -> Iterator[Tableau]:
    """Every 1-tableau of length ``n``, generated directly from the step rules."""
    _check_size(n, 1, cap)
    shapes = [0]

    def extend(last_step: int) -> Iterator[Tableau]:
        k = len(shapes) - 1
        if k == n:
            if shapes[-1] == 0:
                yield Tableau(tuple(shapes))
            return
        size = shapes[-1]
        for step in (1, 0, -1):
            new = size + step
            if new < 0 or new > n - k - 1:
                continue
            if step == -1 and last_step == 1:
                continue
            shapes.append(new)
            yield from extend(step)
            shapes.pop()

    return extend(0)
