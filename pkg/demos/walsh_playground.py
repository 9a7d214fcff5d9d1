"""
Transform playground
====================

Coefficients of a few tiny boolean functions, the pivotal-probability
shortcut for increasing ones, and the singleton bound that makes the
side-crossing dependence argument work.
"""
import numpy as np

from hexpotts import walsh
from hexpotts.exact import spin_indicator_tables
from hexpotts.hexlattice import build_region

# tables index inputs by bitmask, bit i-1 clear meaning x_i = +1;
# majority of three sign coordinates:
maj = walsh.TruthTable([1, 1, 1, 0, 1, 0, 0, 0])
F = walsh.transform(maj)
print("majority coefficients:", F.coeffs)
print("variance:", walsh.variance(F))

# every coordinate of an increasing function is pivotal (flip changes
# the value, with the coordinate at +1) exactly as often as its
# singleton coefficient says
for i in (1, 2, 3):
    assert walsh.pivotal_probability(maj, i) == F.coeffs[1 << (i - 1)]
print("pivotal probabilities:",
      [walsh.pivotal_probability(maj, i) for i in (1, 2, 3)])

# round trip through the inverse transform is exact
back = walsh.inverse_transform(F)
assert np.array_equal(back.values, maj.values)

# random monotone DNFs: no coefficient of a nonempty subset beats the
# smallest singleton inside the subset
rng = np.random.default_rng(7)
f = walsh.random_monotone_dnf(9, rng)
rep = walsh.check_coefficient_inequality(f)
print("\nrandom 9-coordinate monotone DNF:")
print("  inequality holds:", rep.ok)
print("  largest nonempty coefficient sits at a singleton:",
      rep.max_at_singleton, f"(|coeff| = {rep.max_value:.6f})")

# the same bound on the real thing: the n=3 side-crossing indicator
table = spin_indicator_tables(build_region(3), "sides")[0]
rep = walsh.check_coefficient_inequality(table)
G = walsh.transform(table)
print("\nn=3 side-crossing indicator (7 cells):")
print("  mean (= crossing probability):", G.coeffs[0], "= 23/128")
print("  inequality holds:", rep.ok)
# the top coefficient equals the mean, which says the cell behind it
# is a mandatory cut: every crossing for this fluid passes through it
cut = rep.max_subset.bit_length() - 1
print(f"  max nonempty coefficient: {rep.max_value} at cell {cut}")
assert rep.max_value == G.coeffs[0]
assert rep.max_subset == 1 << cut
