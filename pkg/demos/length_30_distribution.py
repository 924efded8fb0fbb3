"""Exact distance distribution for structures of length 30 next to the limit law."""

from __future__ import annotations

import numpy as np

from helixspan.limitlaw import q_series
from helixspan.tables import distance_table, probability_row

table = distance_table(1, 30)
p = np.array([float(x) for x in probability_row(table, 30)])
q = np.array([float(q_series(29).decimal(d)) for d in range(30)])

print(f"{table.total(30)} structures of length 30")
print(" d      p(30,d)         q(d)")
for d in range(1, 30):
    print(f"{d:2d}  {p[d]:.4e}  {q[d]:.4e}")

d = np.arange(30)
print("mean distance at n=30: %.4f" % (d @ p))
tail = q_series(200)
print("mean of the limit law: %.4f" % sum(k * float(tail.decimal(k)) for k in range(201)))
print("total variation:       %.4f" % (0.5 * np.abs(p - q).sum()))
