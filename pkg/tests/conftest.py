"""Shared fixtures.

The compiled kernels pay a one-time JIT cost on first call.  The session
fixture below triggers every kernel once before any test runs, so the
timed budgets in the acceptance suite measure the algorithms and not the
compiler.  The kernels cache to disk, so subprocess invocations of the
command line tool also start warm after this.
"""

import pytest

from hexpotts.exact import exact_by_enumeration, spin_indicator_tables
from hexpotts.hexlattice import build_region
from hexpotts.montecarlo import (run_center_experiment, run_one_arm_experiment,
                                 run_sides_experiment)


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    region = build_region(3)
    exact_by_enumeration(region, "sides")
    spin_indicator_tables(region, "center")
    run_center_experiment(3, 64, master_seed=0, workers=1)
    run_center_experiment(3, 64, master_seed=0, workers=1, algorithm="beetle")
    run_sides_experiment(3, 64, master_seed=0, workers=1)
    run_one_arm_experiment(3, 64, master_seed=0, workers=1)
