"""
One-arm decay
=============

Probability that a single fluid connects the center cell to the
boundary, as the lattice step shrinks.  The estimate falls steadily
with n; the table prints the point estimate with a 4-sigma binomial
band so the downward trend is visibly outside the noise.
"""
import math

from hexpotts.montecarlo import one_arm_curve

K = 40000

rows = one_arm_curve([5, 10, 20, 40, 80], K, master_seed=2)

print(f"{'n':>4}  {'estimate':>9}  {'4-sigma band':>22}")
for n, est, sigma in rows:
    lo, hi = est - 4 * sigma, est + 4 * sigma
    print(f"{n:4d}  {est:9.5f}  [{lo:.5f}, {hi:.5f}]")

# consecutive bands never overlap at these sizes
for (n0, e0, s0), (n1, e1, s1) in zip(rows, rows[1:]):
    margin = (e0 - e1) / math.sqrt(s0 ** 2 + s1 ** 2)
    assert margin > 4, (n0, n1, margin)
print("\neach step down is more than 4 combined sigma")
