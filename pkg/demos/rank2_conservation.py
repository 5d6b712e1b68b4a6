"""
Rank-2 measurement conserves information
========================================

Each element mixes two Bell projectors. For every lambda the gain on (1,4)
equals the loss on (1,2), even at lambda = 1/2 where all pairs are separable.
"""

from swapinfo.measure import tradeoff_report
from swapinfo.povm import normalized_element, rank2_family
from swapinfo.states import is_ppt_separable
from swapinfo.swap import run_swap

for lam in (0.0, 0.25, 0.5, 0.75, 1.0):
    rep = tradeoff_report(run_swap(rank2_family(lam)))
    print(f"lambda={lam:.2f}  I14={rep.I14_bar:.4f}  I12={rep.I12_bar:.4f}  "
          f"slack={rep.slack12_bar:+.1e}  conserved={rep.conserved}")

# at the midpoint nothing is entangled, yet the budget is still full
records = run_swap(rank2_family(0.5))
print("\nelements separable:", all(is_ppt_separable(normalized_element(e)) for e in rank2_family(0.5)))
for r in records:
    flags = [is_ppt_separable(x) for x in (r.rho12, r.rho34, r.rho14)]
    print(f"outcome {r.outcome}: rho12/rho34/rho14 separable = {flags}")
