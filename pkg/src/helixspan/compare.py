"""Empirical distance distributions of external structure sets versus exact references."""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from .diagram import EmptyInput, SecondaryStructure, bfs_distance
from .limitlaw import q_series
from .qsqrt5 import QSqrt5
from .tables import distance_table, probability_row

log = logging.getLogger(__name__)

__all__ = ["Comparison", "compare_distribution"]


@dataclass(frozen=True)
class Comparison:
    reference: str  # "exact-n" or "limit"
    length: int  # modal length (exact-n) or the finite-n proxy length (limit, r > 1)
    r: int
    rows: tuple[tuple[int, Fraction, Fraction | QSqrt5], ...]
    sample_size: int

    def mean_empirical(self) -> Fraction:
        return sum((d * emp for d, emp, _ in self.rows), Fraction(0))


def _modal_length(lengths: Sequence[int]) -> int:
    counts = Counter(lengths)
    best = max(counts.values())
    return min(n for n, c in counts.items() if c == best)


def compare_distribution(
    structures: Sequence[SecondaryStructure],
    r: int = 1,
    reference: str | None = None,
    d_max: int = 30,
    limit_n: int = 1000,
) -> Comparison:
    """Tabulate the empirical distance law of ``structures`` next to a reference.

    ``reference="exact-n"`` uses ``p_r(n, d)`` at the modal length;
    ``reference="limit"`` uses ``q(d)`` for ``r = 1`` and ``p_r(limit_n, d)``
    otherwise.  With ``reference=None`` a uniform-length sample gets ``exact-n``
    and a mixed one gets ``limit``.
    """
    if not structures:
        raise EmptyInput("no structures to compare")
    lengths = [s.n for s in structures]
    uniform = len(set(lengths)) == 1
    if reference is None:
        reference = "exact-n" if uniform else "limit"
        if not uniform:
            log.warning("mixed sequence lengths; comparing against the limit law")
    distances = Counter(bfs_distance(s) for s in structures)
    size = len(structures)
    top = max(distances)

    ref: dict[int, Fraction | QSqrt5]
    if reference == "exact-n":
        n = _modal_length(lengths)
        if not uniform:
            log.warning("mixed sequence lengths; exact reference uses the modal length n=%d", n)
        probs = probability_row(distance_table(r, n), n)
        ref = dict(enumerate(probs))
        span = max(top, n - 1)
    elif reference == "limit":
        span = max(top, d_max)
        if r == 1:
            n = 0
            law = q_series(span)
            ref = {d: law[d] for d in range(span + 1)}
        else:
            n = max(limit_n, span + 1)
            table = distance_table(r, n, d_max=span)
            ref = dict(enumerate(probability_row(table, n)))
    else:
        raise ValueError(f"unknown reference {reference!r}")

    rows = tuple(
        (d, Fraction(distances.get(d, 0), size), ref.get(d, Fraction(0))) for d in range(span + 1)
    )
    return Comparison(reference, n, r, rows, size)
