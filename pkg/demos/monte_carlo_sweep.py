"""
Monte Carlo sweeps
==================

Seeded, worker-count-independent estimates of the center-to-boundary
tallies, checked against exact values where exact values exist, plus
the side-crossing dependence gap at a size the exact pipelines cannot
reach.
"""
import math

from hexpotts.exact import exact_by_enumeration
from hexpotts.hexlattice import build_region
from hexpotts.montecarlo import (format_csv, run_center_experiment,
                                 run_sides_experiment)

K = 50000

# the tally triple is nested: colorings where fluid 1 reaches the rim,
# where fluids 1 and 2 both do, where all three do
rows = [run_center_experiment(n, K, master_seed=11) for n in (3, 5, 10, 25)]
print(format_csv(rows))

# at n=3 the exact answer is known; the estimates should sit within a
# few binomial standard errors of it
exact = exact_by_enumeration(build_region(3), "center")
st = rows[0]
for tally, p in zip((st.T1, st.T2, st.T3),
                    (exact.singles[0], exact.pairs[0], exact.triple)):
    p = float(p)
    z = (tally / K - p) / math.sqrt(p * (1 - p) / K)
    print(f"exact {p:.9f}  estimate {tally / K:.5f}  z = {z:+.2f}")

# rerunning with another worker count reproduces the tallies bit for bit
again = run_center_experiment(10, K, master_seed=11, workers=2)
assert (again.T1, again.T2, again.T3) == (rows[2].T1, rows[2].T2, rows[2].T3)
print("\ntallies are independent of the worker count")

# side-to-opposite-side crossings: the triple gap with its standard error
print()
for n in (10, 15):
    sr = run_sides_experiment(n, 200000, master_seed=11)
    print(f"n = {n:2d}: gap estimate {sr.gap:+.6f} "
          f"(sigma {sr.gap_sigma:.6f}), marginals "
          + " ".join(f"{x:.4f}" for x in sr.marginals))
