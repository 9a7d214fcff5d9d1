"""Percolation laboratory for a three-fluid four-state color model on a
honeycomb region.

Cells of a hexagon-shaped patch of the honeycomb lattice get one of four
colors, independently and uniformly. Color 0 is passable to all three
fluids, color k is passable to fluid k only. The package computes
crossing probabilities exactly (small regions, by enumeration and by a
spin-system transform) and by Monte Carlo (any region), and ships the
Boolean-function toolkit the transform route rests on.
"""

from .errors import (CapacityError, InternalInvariantError,
                     InvalidParameterError)
from .hexlattice import (CellCoord, HexRegion, boundary_cells, build_region,
                         region_to_json, rotate60, rotation_permutation,
                         side_cells)
from .potts import (PottsColoring, SpinColoring, enumerate_potts,
                    merge_colorings, random_potts, split_coloring)
from .percolation import (Wall, beetle_check, build_wall, percolates_between,
                          percolates_from, ray_parity,
                          spin_percolates_between, spin_percolates_from)
from .walsh import (CoefficientReport, FourierTable, TruthTable,
                    check_coefficient_inequality, inverse_transform,
                    pivotal_probability, random_monotone_dnf,
                    read_fourier_table, read_truth_table, transform,
                    triple_coefficient_sum, variance, write_fourier_table,
                    write_truth_table)
from .exact import (ExactReport, IdentityReport, exact_by_enumeration,
                    exact_by_fourier, report_json, spin_indicator_tables,
                    verify_identities)
from .montecarlo import (EstimateRow, SidesResult, TrialStats, binomial_ci,
                         estimate_row, format_csv, format_json,
                         one_arm_curve, run_center_experiment,
                         run_one_arm_experiment, run_sides_experiment)

__version__ = "0.1.0"
