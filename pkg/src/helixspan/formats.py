"""CSV and JSON serialization of tables, histograms and limit laws.

Exact integers are always written as decimal strings so consumers never see
a silently rounded count.
"""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from decimal import Decimal, localcontext
from fractions import Fraction

import mpmath

from .limitlaw import LimitLaw, delta, rho
from .oracle import Histogram
from .tables import DistanceTable

__all__ = [
    "TABLE_HEADER",
    "LIMIT_HEADER",
    "COMPARISON_HEADER",
    "decimal_string",
    "histogram_to_csv",
    "limit_to_csv",
    "limit_to_json",
    "read_csv_rows",
    "table_to_csv",
    "table_to_json",
    "write_atomic",
]

TABLE_HEADER = ["r", "n", "d", "w", "p"]
LIMIT_HEADER = ["d", "q_exact", "q_decimal"]
COMPARISON_HEADER = ["d", "empirical", "reference", "difference"]


def decimal_string(value: Fraction | int, digits: int = 12) -> str:
    """Correctly rounded decimal with ``digits`` significant digits."""
    value = Fraction(value)
    with localcontext() as ctx:
        ctx.prec = digits
        q = Decimal(value.numerator) / Decimal(value.denominator)
        return format(q, "g")


def _table_records(table: DistanceTable, digits: int):
    for n in range(1, table.N + 1):
        total = table.totals[n]
        for d, w in enumerate(table.rows[n]):
            if w:
                yield n, d, w, Fraction(w, total)


def table_to_csv(table: DistanceTable, digits: int = 12) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(TABLE_HEADER)
    for n, d, w, p in _table_records(table, digits):
        writer.writerow([table.r, n, d, str(w), decimal_string(p, digits)])
    return buf.getvalue()


def table_to_json(table: DistanceTable, digits: int = 12) -> str:
    rows = [
        {"n": n, "d": d, "w": str(w), "p": float(decimal_string(p, digits))}
        for n, d, w, p in _table_records(table, digits)
    ]
    return json.dumps({"r": table.r, "N": table.N, "rows": rows}, indent=1) + "\n"


def histogram_to_csv(hist: Histogram, digits: int = 12) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(TABLE_HEADER)
    total = hist.total
    for d, count in sorted(hist.counts.items()):
        if count:
            writer.writerow([hist.r, hist.n, d, str(count), decimal_string(Fraction(count, total), digits)])
    return buf.getvalue()


def _constants(prec: int) -> dict[str, str]:
    digits = max(int(prec * 0.30103) - 2, 15)
    dl = delta(prec)
    with mpmath.workprec(prec):
        r = rho().to_mpf(prec)
        return {
            "rho": mpmath.nstr(r, digits),
            "inv_rho": mpmath.nstr(1 / r, digits),
            "delta": mpmath.nstr(dl, digits),
            "inv_delta": mpmath.nstr(1 / dl, digits),
        }


def _limit_rows(law: LimitLaw, prec: int, digits: int):
    for d in range(1, law.D + 1):
        yield d, law[d].format(), mpmath.nstr(law.decimal(d, prec), digits)


def limit_to_csv(law: LimitLaw, prec: int = 100, digits: int = 15) -> str:
    """Rows ``d, q_exact, q_decimal`` followed by ``#`` footer lines with the constants."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(LIMIT_HEADER)
    for row in _limit_rows(law, prec, digits):
        writer.writerow(row)
    for key, value in _constants(prec).items():
        buf.write(f"# {key}={value}\n")
    return buf.getvalue()


def limit_to_json(law: LimitLaw, prec: int = 100, digits: int = 15) -> str:
    rows = [{"d": d, "q_exact": exact, "q_decimal": float(dec)} for d, exact, dec in _limit_rows(law, prec, digits)]
    return json.dumps({"D": law.D, "rows": rows, "constants": _constants(prec)}, indent=1) + "\n"


def read_csv_rows(text: str) -> tuple[list[str], list[list[str]]]:
    """Header and data rows of a CSV document, ignoring ``#`` comment lines."""
    lines = [line for line in text.splitlines() if line.strip() and not line.startswith("#")]
    if not lines:
        return [], []
    rows = list(csv.reader(lines))
    return rows[0], rows[1:]


def write_atomic(path: str | os.PathLike, text: str) -> None:
    """Write ``text`` to a temporary file next to ``path`` and rename it into place."""
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
