"""Write the n=30 and n=200 distributions plus the limit law to one SVG file."""

from __future__ import annotations

import sys

from helixspan.formats import limit_to_csv, table_to_csv
from helixspan.limitlaw import q_series
from helixspan.svgplot import load_series, render_svg
from helixspan.tables import distance_table

out = sys.argv[1] if len(sys.argv) > 1 else "distance_distribution.svg"

table = table_to_csv(distance_table(1, 200, d_max=30))
series = load_series(table, n=30) + load_series(table, n=200) + load_series(limit_to_csv(q_series(30)))
with open(out, "w") as fh:
    fh.write(render_svg(series))
print("wrote", out)
