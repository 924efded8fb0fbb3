"""Secondary structures as diagrams: dot-bracket I/O, stacks and the 5'-3' distance."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

__all__ = [
    "DotBracketError",
    "EmptyInput",
    "InvalidCharacter",
    "InvalidStructure",
    "OneArc",
    "SecondaryStructure",
    "StackRun",
    "UnbalancedBrackets",
    "bfs_distance",
    "is_r_canonical",
    "iter_structure_lines",
    "min_stack_length",
    "parse_dot_bracket",
    "stack_runs",
    "to_dot_bracket",
]


class InvalidStructure(ValueError):
    """Arc set violating the matching, 1-arc or noncrossing constraints."""


class DotBracketError(ValueError):
    """Base class for dot-bracket parse failures."""


class EmptyInput(DotBracketError):
    pass


class InvalidCharacter(DotBracketError):
    pass


class UnbalancedBrackets(DotBracketError):
    pass


class OneArc(DotBracketError):
    pass


@dataclass(frozen=True)
class SecondaryStructure:
    """Noncrossing partial matching on vertices ``1..n`` without 1-arcs.

    Arcs are stored as a frozenset of pairs ``(i, j)`` with ``i < j``.
    Construction validates every invariant and raises :class:`InvalidStructure`.
    """

    n: int
    arcs: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidStructure(f"length must be positive, got {self.n}")
        arcs = frozenset((int(i), int(j)) for i, j in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        seen: set[int] = set()
        for i, j in arcs:
            if not 1 <= i < j <= self.n:
                raise InvalidStructure(f"arc {(i, j)} out of range for n={self.n}")
            if j - i < 2:
                raise InvalidStructure(f"1-arc {(i, j)}")
            if i in seen or j in seen:
                raise InvalidStructure(f"vertex reused by arc {(i, j)}")
            seen.update((i, j))
        # noncrossing: a left-to-right sweep must close arcs in LIFO order
        partner = self.partners()
        stack: list[int] = []
        for v in range(1, self.n + 1):
            p = partner[v]
            if p > v:
                stack.append(v)
            elif p:
                if not stack or stack[-1] != p:
                    raise InvalidStructure(f"crossing at arc {(p, v)}")
                stack.pop()

    def partners(self) -> list[int]:
        """Return ``partner[v]`` for ``v`` in ``1..n`` (0 for unpaired); index 0 unused."""
        partner = [0] * (self.n + 1)
        for i, j in self.arcs:
            partner[i] = j
            partner[j] = i
        return partner

    @classmethod
    def from_dot_bracket(cls, text: str) -> SecondaryStructure:
        return parse_dot_bracket(text)

    def __str__(self) -> str:
        return to_dot_bracket(self)


@dataclass(frozen=True)
class StackRun:
    """Maximal run of parallel arcs ``(i, j), (i+1, j-1), ...`` of the given length."""

    outer: tuple[int, int]
    length: int

    @property
    def arcs(self) -> list[tuple[int, int]]:
        i, j = self.outer
        return [(i + k, j - k) for k in range(self.length)]


def parse_dot_bracket(text: str) -> SecondaryStructure:
    """Parse a dot-bracket string such as ``"((...))"``.

    Surrounding whitespace is ignored. Raises :class:`EmptyInput`,
    :class:`InvalidCharacter`, :class:`UnbalancedBrackets` or :class:`OneArc`.
    """
    text = text.strip()
    if not text:
        raise EmptyInput("empty dot-bracket string")
    stack: list[int] = []
    arcs = []
    for pos, ch in enumerate(text, start=1):
        if ch == "(":
            stack.append(pos)
        elif ch == ")":
            if not stack:
                raise UnbalancedBrackets(f"unmatched ')' at position {pos}")
            i = stack.pop()
            if pos == i + 1:
                raise OneArc(f"1-arc '()' at positions {i},{pos}")
            arcs.append((i, pos))
        elif ch != ".":
            raise InvalidCharacter(f"invalid character {ch!r} at position {pos}")
    if stack:
        raise UnbalancedBrackets(f"unmatched '(' at position {stack[-1]}")
    return SecondaryStructure(len(text), frozenset(arcs))


def to_dot_bracket(s: SecondaryStructure) -> str:
    chars = ["."] * s.n
    for i, j in s.arcs:
        chars[i - 1] = "("
        chars[j - 1] = ")"
    return "".join(chars)


def iter_structure_lines(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    """Yield ``(line_number, text)`` for each structure line of a dot-bracket file.

    Blank lines and lines starting with ``>`` or ``#`` are skipped.
    """
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped[0] in ">#":
            continue
        yield lineno, stripped


def bfs_distance(s: SecondaryStructure) -> int:
    """Shortest path length from vertex 1 to vertex n over backbone edges and arcs."""
    n = s.n
    if n == 1:
        return 0
    partner = s.partners()
    dist = [-1] * (n + 1)
    dist[1] = 0
    queue = deque([1])
    while queue:
        v = queue.popleft()
        for w in (v - 1, v + 1, partner[v]):
            if 1 <= w <= n and dist[w] < 0:
                dist[w] = dist[v] + 1
                if w == n:
                    return dist[w]
                queue.append(w)
    raise AssertionError("backbone guarantees connectivity")


def stack_runs(s: SecondaryStructure) -> list[StackRun]:
    """All maximal stacks, ordered by the left end of their outermost arc."""
    runs = []
    for i, j in sorted(s.arcs):
        if (i - 1, j + 1) in s.arcs:
            continue
        length = 1
        while (i + length, j - length) in s.arcs:
            length += 1
        runs.append(StackRun((i, j), length))
    return runs


def min_stack_length(s: SecondaryStructure) -> int | None:
    runs = stack_runs(s)
    return min(run.length for run in runs) if runs else None


def is_r_canonical(s: SecondaryStructure, r: int) -> bool:
    """True if every maximal stack of ``s`` has at least ``r`` arcs."""
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    shortest = min_stack_length(s)
    return shortest is None or shortest >= r
