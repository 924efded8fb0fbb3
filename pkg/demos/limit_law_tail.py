"""The limit law q(d): exact values in Q(sqrt 5) and its Gamma-shaped tail."""

from __future__ import annotations

import math

import numpy as np

from helixspan.limitlaw import delta, gamma_density, q_series

law = q_series(80)
for d in range(1, 6):
    print(f"q({d}) = {law[d].format():>22}  = {float(law.decimal(d)):.10f}")
print("sum of q(1..80) - 1 =", float(law.partial_sum(80).to_mpf()) - 1)

dl = float(delta())
print(f"delta = {dl:.10f}, 1/delta = {1 / dl:.10f}")

# q(d) behaves like c * d * delta**-d, i.e. a Gamma(ln delta, 2) profile
d = np.arange(20, 81)
q = np.array([float(law.decimal(k)) for k in d])
profile = np.array([gamma_density(math.log(dl), 2, k) for k in d])
scale = q / profile
print("q(d) / Gamma density at d=20, 40, 60, 80:", np.round(scale[[0, 20, 40, 60]], 6))

ratios = q[1:] / q[:-1]
predicted = (d[:-1] + 2) / (d[:-1] + 1) / dl
print("max |ratio - predicted| for d in [20,80]: %.2e" % np.abs(ratios - predicted).max())
