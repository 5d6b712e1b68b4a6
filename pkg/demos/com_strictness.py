"""
Projective measurement on partially entangled states
====================================================

A complete orthogonal measurement whose basis vectors have Schmidt
coefficients (alpha, beta) leaves strictly less than 2 in the total.
"""

import numpy as np

from swapinfo.experiments import com_comparison

print(f"{'alpha^2':>8} {'I14':>8} {'I12':>8} {'sum':>8} {'deficit':>9}")
for a2 in np.linspace(0.5, 1.0, 6):
    c = com_comparison(a2)
    total = c["I14"] + c["I12"]
    print(f"{a2:8.2f} {c['I14']:8.4f} {c['I12']:8.4f} {total:8.4f} {2 - total:9.4f}")

# the simulated values agree with 1 + 4 a^2 b^2 and (a^2 - b^2)^4
c = com_comparison(0.8)
print("\nalpha^2 = 0.8 differences from closed forms:", c["I14_diff"], c["I12_diff"])
