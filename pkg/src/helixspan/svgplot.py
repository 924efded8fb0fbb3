"""Deterministic SVG charts of distance distributions.

Output bytes depend only on the input data: fixed 800x600 viewport, a 1-2-5
tick policy, and coordinates rounded to two decimals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .formats import COMPARISON_HEADER, LIMIT_HEADER, TABLE_HEADER, read_csv_rows

__all__ = ["SchemaMismatch", "Series", "load_series", "render_svg"]

WIDTH, HEIGHT = 800, 600
MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, MARGIN_BOTTOM = 80, 170, 50, 60
COLORS = ("#1f4e9c", "#c0392b", "#2e8b57", "#8e44ad", "#d35400", "#555555")


class SchemaMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Series:
    label: str
    points: tuple[tuple[float, float], ...]
    marker: str = "dot"  # dot | plus | diamond


def _nice_step(span: float, target: int = 8) -> float:
    if span <= 0:
        return 1.0
    raw = span / target
    base = 10 ** math.floor(math.log10(raw))
    for mult in (1, 2, 5, 10):
        if mult * base >= raw:
            return mult * base
    return 10 * base


def _ticks(upper: float, integer: bool = False) -> tuple[list[float], float]:
    step = _nice_step(upper)
    if integer:
        step = max(1.0, math.ceil(step))
    top = step * math.ceil(upper / step) if upper > 0 else step
    count = int(round(top / step))
    return [round(k * step, 12) for k in range(count + 1)], top


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _label(v: float) -> str:
    return f"{v:g}"


def _marker(kind: str, x: float, y: float, color: str) -> str:
    if kind == "plus":
        return (
            f'<path d="M{_fmt(x - 5)} {_fmt(y)}H{_fmt(x + 5)}M{_fmt(x)} {_fmt(y - 5)}V{_fmt(y + 5)}" '
            f'stroke="{color}" stroke-width="1.5" fill="none"/>'
        )
    if kind == "diamond":
        return (
            f'<path d="M{_fmt(x)} {_fmt(y - 5)}L{_fmt(x + 5)} {_fmt(y)}L{_fmt(x)} {_fmt(y + 5)}'
            f'L{_fmt(x - 5)} {_fmt(y)}Z" stroke="{color}" fill="none"/>'
        )
    return f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3.5" fill="{color}"/>'


def render_svg(
    series: list[Series],
    title: str = "5'-3' distance distribution",
    xlabel: str = "distance d",
    ylabel: str = "probability",
    allow_empty: bool = False,
) -> str:
    points = [p for s in series for p in s.points]
    if not points and not allow_empty:
        raise SchemaMismatch("nothing to plot")
    xmax = max((x for x, _ in points), default=1.0)
    ymax = max((y for _, y in points), default=1.0)
    xticks, xtop = _ticks(max(xmax, 1.0), integer=True)
    yticks, ytop = _ticks(ymax if ymax > 0 else 1.0)
    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    def sx(x: float) -> float:
        return MARGIN_LEFT + plot_w * x / xtop

    def sy(y: float) -> float:
        return MARGIN_TOP + plot_h * (1 - y / ytop)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH // 2}" y="28" text-anchor="middle" font-size="16">{escape(title)}</text>',
    ]
    x0, y0 = sx(0), sy(0)
    out.append(
        f'<path d="M{_fmt(x0)} {_fmt(sy(ytop))}V{_fmt(y0)}H{_fmt(sx(xtop))}" stroke="black" fill="none"/>'
    )
    for t in xticks:
        x = sx(t)
        out.append(f'<path d="M{_fmt(x)} {_fmt(y0)}v5" stroke="black"/>')
        out.append(f'<text x="{_fmt(x)}" y="{_fmt(y0 + 20)}" text-anchor="middle">{_label(t)}</text>')
    for t in yticks:
        y = sy(t)
        out.append(f'<path d="M{_fmt(x0 - 5)} {_fmt(y)}h5" stroke="black"/>')
        out.append(f'<text x="{_fmt(x0 - 8)}" y="{_fmt(y + 4)}" text-anchor="end">{_label(t)}</text>')
    out.append(
        f'<text x="{_fmt(MARGIN_LEFT + plot_w / 2)}" y="{HEIGHT - 15}" text-anchor="middle">{escape(xlabel)}</text>'
    )
    out.append(
        f'<text x="20" y="{_fmt(MARGIN_TOP + plot_h / 2)}" text-anchor="middle" '
        f'transform="rotate(-90 20 {_fmt(MARGIN_TOP + plot_h / 2)})">{escape(ylabel)}</text>'
    )
    for k, s in enumerate(series):
        color = COLORS[k % len(COLORS)]
        out.append(f'<g class="series" data-label="{escape(s.label)}">')
        out.extend(_marker(s.marker, sx(x), sy(y), color) for x, y in s.points)
        out.append("</g>")
        ly = MARGIN_TOP + 20 * k + 10
        lx = WIDTH - MARGIN_RIGHT + 20
        out.append(_marker(s.marker, lx, ly, color))
        out.append(f'<text x="{lx + 12}" y="{ly + 4}">{escape(s.label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def load_series(text: str, n: int | None = None) -> list[Series]:
    """Series from a table, limit or comparison CSV document.

    Table files contribute the row of length ``n`` (the largest length present
    by default).  Raises :class:`SchemaMismatch` for unknown headers.
    """
    header, rows = read_csv_rows(text)
    try:
        if header == TABLE_HEADER:
            lengths = sorted({int(row[1]) for row in rows})
            if not lengths:
                return [Series("table (empty)", (), "plus")]
            pick = lengths[-1] if n is None else n
            pts = tuple((float(row[2]), float(row[4])) for row in rows if int(row[1]) == pick)
            r = rows[0][0]
            return [Series(f"n={pick}, r={r}", pts, "plus")]
        if header == LIMIT_HEADER:
            pts = tuple((float(row[0]), float(row[2])) for row in rows)
            return [Series("limit q(d)", pts, "dot")]
        if header == COMPARISON_HEADER:
            emp = tuple((float(row[0]), float(row[1])) for row in rows)
            ref = tuple((float(row[0]), float(row[2])) for row in rows)
            return [Series("empirical", emp, "diamond"), Series("reference", ref, "dot")]
    except (IndexError, ValueError) as exc:
        raise SchemaMismatch(f"malformed rows: {exc}") from exc
    raise SchemaMismatch(f"unrecognized header {header!r}")
