"""The bijection between secondary structures and 1-tableaux.

A 1-tableau of length ``n`` is stored as its sequence of ``n + 1`` one-row
shape sizes.  Structures are read from vertex ``n`` down to vertex ``1``, so
tableau index ``k`` (``k >= 1``) records the step taken at vertex ``n + 1 - k``.
In particular the rightmost irreducible of a structure is the *leftmost*
block of its tableau.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import SecondaryStructure

__all__ = [
    "EmptyShapeCensus",
    "InvalidTableau",
    "NotIrreducible",
    "Tableau",
    "beta",
    "beta_inv",
    "census",
    "gamma",
    "gamma_star",
    "irreducible_blocks",
    "is_irreducible",
    "tableau_distance",
]

ADD, REMOVE, STAY = 1, -1, 0


class InvalidTableau(ValueError):
    pass


class NotIrreducible(ValueError):
    pass


@dataclass(frozen=True)
class Tableau:
    shapes: tuple[int, ...]

    def __post_init__(self) -> None:
        shapes = tuple(int(x) for x in self.shapes)
        object.__setattr__(self, "shapes", shapes)
        if len(shapes) < 2:
            raise InvalidTableau("a tableau needs at least two shapes")
        if shapes[0] != 0 or shapes[-1] != 0:
            raise InvalidTableau("first and last shapes must be empty")
        if min(shapes) < 0:
            raise InvalidTableau("negative shape size")
        steps = self.steps
        if any(abs(s) > 1 for s in steps):
            raise InvalidTableau("shapes must change by at most one square")
        for k in range(len(steps) - 1):
            if steps[k] == ADD and steps[k + 1] == REMOVE:
                raise InvalidTableau(f"(+,-) step pair at index {k + 1}")

    @property
    def n(self) -> int:
        return len(self.shapes) - 1

    @property
    def steps(self) -> tuple[int, ...]:
        """Step marks ``+1`` (add), ``-1`` (remove) and ``0`` (stay)."""
        s = self.shapes
        return tuple(s[k + 1] - s[k] for k in range(len(s) - 1))

    @classmethod
    def from_string(cls, text: str) -> Tableau:
        """Parse the comma separated form, e.g. ``"0,1,1,0"``."""
        return cls(tuple(int(part) for part in text.split(",")))

    def __str__(self) -> str:
        return ",".join(map(str, self.shapes))


@dataclass(frozen=True)
class EmptyShapeCensus:
    count_star: int
    count_hash: int
    count_plain: int


def beta(s: SecondaryStructure) -> Tableau:
    partner = s.partners()
    shapes = [0]
    size = 0
    for v in range(s.n, 0, -1):
        p = partner[v]
        if p and p < v:
            size += 1
        elif p:
            size -= 1
        shapes.append(size)
    return Tableau(tuple(shapes))


def beta_inv(t: Tableau) -> SecondaryStructure:
    """Invert :func:`beta`: each removal step pairs with the most recent addition."""
    n = t.n
    squares: list[int] = []
    arcs = []
    for k, step in enumerate(t.steps, start=1):
        if step == ADD:
            squares.append(k)
        elif step == REMOVE:
            j = squares.pop()
            arcs.append((n + 1 - k, n + 1 - j))
    return SecondaryStructure(n, frozenset(arcs))


def irreducible_blocks(t: Tableau) -> list[tuple[int, int]]:
    """Intervals ``(a, b)`` with empty shapes at ``a`` and ``b`` and nonempty shapes strictly between.

    Blocks are listed left to right in tableau order.
    """
    blocks = []
    start = None
    for k, size in enumerate(t.shapes):
        if size == 0:
            if start is not None and k - start >= 2:
                blocks.append((start, k))
            start = k
    return blocks


def census(t: Tableau) -> EmptyShapeCensus:
    blocks = irreducible_blocks(t)
    terminals = [b for _, b in blocks]
    empties = sum(1 for size in t.shapes[1:] if size == 0)
    count_hash = 1 if terminals else 0
    count_star = max(len(terminals) - 1, 0)
    return EmptyShapeCensus(count_star, count_hash, empties - count_star - count_hash)


def tableau_distance(t: Tableau) -> int:
    c = census(t)
    if not c.count_hash:
        return t.n - 1
    return 2 * c.count_star + c.count_hash + c.count_plain


def is_irreducible(s: SecondaryStructure) -> bool:
    return s.n >= 3 and all(size > 0 for size in beta(s).shapes[1:-1])


def gamma(s: SecondaryStructure) -> SecondaryStructure:
    """Peel the spanning arc of an irreducible structure (length ``n`` to ``n - 2``)."""
    if not is_irreducible(s):
        raise NotIrreducible(f"{s} is not irreducible")
    shapes = beta(s).shapes
    inner = [shapes[0]] + [size - 1 for size in shapes[2:-2]] + [shapes[-1]]
    return beta_inv(Tableau(tuple(inner)))


def gamma_star(s: SecondaryStructure) -> SecondaryStructure:
    """Wrap ``s`` in a spanning arc, giving an irreducible of length ``n + 2``."""
    shapes = beta(s).shapes
    wrapped = (shapes[0],) + tuple(size + 1 for size in shapes) + (shapes[-1],)
    return beta_inv(Tableau(wrapped))
