"""Growth rates of r-canonical structures and how the mean distance shifts with r."""

from __future__ import annotations

import numpy as np

from helixspan.limitlaw import dominant_singularity
from helixspan.series import canonical_series
from helixspan.tables import distance_table, probability_row

N = 400
for r in (1, 2, 3, 4):
    s = canonical_series(r, N + 1).integers()
    rho = float(dominant_singularity(r))
    ratio = s[N + 1] / s[N]
    corrected = ratio * ((N + 1) / N) ** 1.5
    table = distance_table(r, N, d_max=40)
    p = np.array([float(x) for x in probability_row(table, N)])
    mean = np.arange(len(p)) @ p
    print(
        f"r={r}: rho={rho:.6f}  1/rho={1 / rho:.6f}  "
        f"s_{N + 1}/s_{N}={ratio:.6f} (n^-3/2 corrected {corrected:.6f})  "
        f"mean distance at n={N}: {mean:.3f}"
    )
