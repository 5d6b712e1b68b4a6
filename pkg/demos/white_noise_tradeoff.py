"""
Noisy Bell measurement
======================

Mixing the Bell measurement with white noise trades correlations between
the swapped pair (1,4) against the original pairs (1,2) and (3,4).
The total never reaches 2 except at the two ends.
"""

import numpy as np

from swapinfo.experiments import sweep
from swapinfo.measure import white_noise_closed_forms

rows = sweep("white-noise", 0.0, 1.0, 11)
print(f"{'lambda':>7} {'I14':>8} {'I12':>8} {'total':>8}")
for r in rows:
    print(f"{r.lam:7.2f} {r.I14_bar:8.4f} {r.I12_bar:8.4f} {r.Itot_12:8.4f}")

# the dip is deepest at lambda = 2/3, where both pairs hold 8/9
closed = white_noise_closed_forms(2 / 3)
print("\nat lambda = 2/3:", closed, "total", sum(closed.values()), "vs 16/9 =", 16 / 9)

# a finer grid around the minimum
lam = np.linspace(0.6, 0.75, 16)
tot = [sum(white_noise_closed_forms(x).values()) for x in lam]
print("grid minimum near lambda =", lam[int(np.argmin(tot))])
