"""Seeded, parallel Monte Carlo for the center, sides and one-arm events.

Reproducibility contract: trial i of a run is a pure function of
(master_seed, mode, n, i).  A 64-bit key is derived from the first
three through SeedSequence; the compiled kernels expand (key, i) into
the trial's coloring with a counter construction.  Trials are cut into
fixed-size batches and the per-batch integer tallies are added up, so
the worker count changes scheduling only, never a single bit of the
result.

Estimates follow the tally layout T_p = number of trials where fluids
1..p all percolate, and the headline ratio P = (T3/k) / (T1/k)^3.
"""
import json
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import InternalInvariantError, InvalidParameterError
from .hexlattice import build_region
from . import _kernels

BATCH = 4096
CSV_HEADER = "n,k,T1,T2,T3,P,P_minus_1"
_MODE_CODES = {"center": 1, "sides": 2, "one_arm": 3}


@dataclass(frozen=True)
class TrialStats:
    """Raw tallies of one experiment; T3 <= T2 <= T1 <= k always."""
    n: int
    k: int
    mode: str
    T1: int
    T2: int
    T3: int
    master_seed: int
    elapsed: float

    def __post_init__(self):
        if not 0 <= self.T3 <= self.T2 <= self.T1 <= self.k:
            raise InternalInvariantError(
                f"tallies not nested: {self.T1}, {self.T2}, {self.T3} of {self.k}")


@dataclass(frozen=True)
class EstimateRow:
    """Point estimates and binomial standard errors for one stats row."""
    p1: float
    p2: float
    p3: float
    P: float
    P_minus_1: float
    sigma1: float
    sigma2: float
    sigma3: float


@dataclass(frozen=True)
class SidesResult:
    """Sides tallies plus the independence-gap estimate.

    counts holds the seven joint tallies (1, 2, 3, 12, 13, 23, 123);
    gap estimates P(all three) - P(1)P(2)P(3) with a delta-method
    standard error.
    """
    stats: TrialStats
    counts: tuple
    marginals: tuple
    pairs: tuple
    gap: float
    gap_sigma: float


def _validate_run(n, k, master_seed, workers):
    if not isinstance(n, (int, np.integer)) or n < 2:
        raise InvalidParameterError(f"n must be an integer >= 2, got {n!r}")
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise InvalidParameterError(f"trial count must be >= 1, got {k!r}")
    if not isinstance(master_seed, (int, np.integer)) or master_seed < 0:
        raise InvalidParameterError(f"master seed must be >= 0, got {master_seed!r}")
    if workers is None:
        workers = os.cpu_count() or 1
    if not isinstance(workers, (int, np.integer)) or workers < 1:
        raise InvalidParameterError(f"workers must be >= 1, got {workers!r}")
    return int(workers)


def _derive_key(master_seed, mode, n):
    ss = np.random.SeedSequence([int(master_seed), _MODE_CODES[mode], int(n)])
    return np.uint64(ss.generate_state(1, np.uint64)[0])


def _sum_batches(worker_fn, k, workers):
    batches = [(lo, min(k, lo + BATCH)) for lo in range(0, k, BATCH)]
    if workers == 1 or len(batches) == 1:
        parts = [worker_fn(lo, hi) for lo, hi in batches]
    else:
        # kernels drop the GIL, so threads give real parallelism
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda b: worker_fn(b[0], b[1]), batches))
    return [int(sum(col)) for col in zip(*parts)]


def _center_sources(region):
    return np.array(region.adjacency[region.center_index], np.int64)


def run_center_experiment(n, k, master_seed=0, workers=None, algorithm="bfs"):
    """Tallies of nested center-to-boundary percolations over k trials."""
    workers = _validate_run(n, k, master_seed, workers)
    if algorithm not in ("bfs", "beetle"):
        raise InvalidParameterError(f"algorithm must be bfs or beetle, got {algorithm!r}")
    t0 = time.perf_counter()
    region = build_region(n)
    key = _derive_key(master_seed, "center", n)
    if region.boundary_mask[region.center_index]:
        # the start cell is itself a boundary cell: nothing to percolate
        t1 = t2 = t3 = k
    elif algorithm == "bfs":
        def batch(lo, hi):
            return _kernels.center_trials(
                key, lo, hi, region.m, region.nbr_start, region.nbr_flat,
                _center_sources(region), region.boundary_mask)
        t1, t2, t3 = _sum_batches(batch, k, workers)
    else:
        span = region.n
        width = 2 * span + 1
        grid = np.full(width * width, -1, np.int64)
        for i in range(region.m):
            grid[(int(region.qs[i]) + span) * width + (int(region.rs[i]) + span)] = i
        qs64 = region.qs.astype(np.int64)
        rs64 = region.rs.astype(np.int64)
        below64 = region.below.astype(np.int64)

        def batch(lo, hi):
            return _kernels.beetle_center_trials(
                key, lo, hi, region.m, region.nbr_start, region.nbr_flat,
                _center_sources(region), region.boundary_mask,
                qs64, rs64, grid, span, below64, region.center_index)
        t1, t2, t3, bad = _sum_batches(batch, k, workers)
        if bad:
            raise InternalInvariantError(
                f"wall walk hit an impossible state in {bad} of {k} trials")
    return TrialStats(n=int(n), k=int(k), mode="center", T1=t1, T2=t2, T3=t3,
                      master_seed=int(master_seed),
                      elapsed=time.perf_counter() - t0)


def run_sides_experiment(n, k, master_seed=0, workers=None):
    """Joint side-event tallies and the independence-gap estimate."""
    workers = _validate_run(n, k, master_seed, workers)
    t0 = time.perf_counter()
    region = build_region(n)
    key = _derive_key(master_seed, "sides", n)
    srcs = [np.array(sorted(region.side_members[j]), np.int64) for j in (1, 2, 3)]
    tgts = []
    for j in (4, 5, 6):
        mask = np.zeros(region.m, np.bool_)
        mask[list(region.side_members[j])] = True
        tgts.append(mask)

    def batch(lo, hi):
        return _kernels.sides_trials(
            key, lo, hi, region.m, region.nbr_start, region.nbr_flat,
            srcs[0], srcs[1], srcs[2], tgts[0], tgts[1], tgts[2])
    s1, s2, s3, s12, s13, s23, s123 = _sum_batches(batch, k, workers)
    stats = TrialStats(n=int(n), k=int(k), mode="sides", T1=s1, T2=s12,
                       T3=s123, master_seed=int(master_seed),
                       elapsed=time.perf_counter() - t0)
    kf = float(k)
    y = (s1 / kf, s2 / kf, s3 / kf)
    pairs = (s12 / kf, s13 / kf, s23 / kf)
    x = s123 / kf
    gap = x - y[0] * y[1] * y[2]
    # delta method for g = x - y1 y2 y3; all covariances are estimable
    # from the joint tallies (the events are nested in x)
    grad = (1.0, -y[1] * y[2], -y[0] * y[2], -y[0] * y[1])
    cov = np.empty((4, 4))
    cov[0, 0] = x * (1 - x)
    for i in range(3):
        cov[0, i + 1] = cov[i + 1, 0] = x * (1 - y[i])
        cov[i + 1, i + 1] = y[i] * (1 - y[i])
    cov[1, 2] = cov[2, 1] = pairs[0] - y[0] * y[1]
    cov[1, 3] = cov[3, 1] = pairs[1] - y[0] * y[2]
    cov[2, 3] = cov[3, 2] = pairs[2] - y[1] * y[2]
    g = np.array(grad)
    gap_sigma = math.sqrt(max(0.0, float(g @ cov @ g)) / kf)
    return SidesResult(stats=stats, counts=(s1, s2, s3, s12, s13, s23, s123),
                       marginals=y, pairs=pairs, gap=gap, gap_sigma=gap_sigma)


def run_one_arm_experiment(n, k, master_seed=0, workers=None):
    """Tally of the spin one-arm event (each cell +-1 with probability 1/2)."""
    workers = _validate_run(n, k, master_seed, workers)
    t0 = time.perf_counter()
    region = build_region(n)
    key = _derive_key(master_seed, "one_arm", n)
    if region.boundary_mask[region.center_index]:
        t1 = k
    else:
        def batch(lo, hi):
            return (_kernels.one_arm_trials(
                key, lo, hi, region.m, region.nbr_start, region.nbr_flat,
                _center_sources(region), region.boundary_mask),)
        (t1,) = _sum_batches(batch, k, workers)
    return TrialStats(n=int(n), k=int(k), mode="one_arm", T1=t1, T2=0, T3=0,
                      master_seed=int(master_seed),
                      elapsed=time.perf_counter() - t0)


def one_arm_curve(n_list, k, master_seed=0, workers=None):
    """(n, estimate, sigma) per n; the decay probe for the one-arm event."""
    out = []
    for n in n_list:
        stats = run_one_arm_experiment(n, k, master_seed, workers)
        p = stats.T1 / stats.k
        out.append((int(n), p, math.sqrt(p * (1 - p) / stats.k)))
    return out


def binomial_ci(successes, trials, z):
    """Normal-approximation interval for a binomial proportion."""
    if trials == 0:
        raise InvalidParameterError("cannot form an interval from zero trials")
    if not 0 <= successes <= trials:
        raise InvalidParameterError(
            f"successes {successes} outside 0..{trials}")
    p = successes / trials
    half = z * math.sqrt(p * (1 - p) / trials)
    return (max(0.0, p - half), min(1.0, p + half))


def estimate_row(stats):
    """Point estimates, the P ratio, and binomial standard errors."""
    kf = float(stats.k)
    p1, p2, p3 = stats.T1 / kf, stats.T2 / kf, stats.T3 / kf
    if stats.mode == "one_arm" or stats.T1 == 0:
        ratio = float("nan")
    else:
        ratio = (stats.T3 / kf) / (stats.T1 / kf) ** 3
    return EstimateRow(
        p1=p1, p2=p2, p3=p3, P=ratio, P_minus_1=ratio - 1.0,
        sigma1=math.sqrt(p1 * (1 - p1) / kf),
        sigma2=math.sqrt(p2 * (1 - p2) / kf),
        sigma3=math.sqrt(p3 * (1 - p3) / kf))


def _g12(x):
    return "%.12g" % x


def format_csv(stats_list):
    """Tally-table CSV; one row per stats entry."""
    lines = [CSV_HEADER]
    for st in stats_list:
        row = estimate_row(st)
        lines.append(",".join([str(st.n), str(st.k), str(st.T1), str(st.T2),
                               str(st.T3), _g12(row.P), _g12(row.P_minus_1)]))
    return "\n".join(lines) + "\n"


def _base_jsonable(st):
    row = estimate_row(st)
    return {
        "mode": st.mode, "n": st.n, "k": st.k, "master_seed": st.master_seed,
        "tallies": {"T1": st.T1, "T2": st.T2, "T3": st.T3},
        "estimates": {
            "p1": row.p1, "p2": row.p2, "p3": row.p3,
            "sigma1": row.sigma1, "sigma2": row.sigma2, "sigma3": row.sigma3,
            "P": None if math.isnan(row.P) else row.P,
            "P_minus_1": None if math.isnan(row.P_minus_1) else row.P_minus_1,
        },
    }


def format_json(results):
    """JSON export; accepts TrialStats and SidesResult entries.

    Wall-clock time is deliberately excluded so equal-seed runs are
    byte-identical.
    """
    out = []
    for res in results:
        if isinstance(res, SidesResult):
            entry = _base_jsonable(res.stats)
            c = res.counts
            entry["gap"] = {"counts": {"n1": c[0], "n2": c[1], "n3": c[2],
                                       "n12": c[3], "n13": c[4], "n23": c[5],
                                       "n123": c[6]},
                            "marginals": list(res.marginals),
                            "pairs": list(res.pairs),
                            "estimate": res.gap, "sigma": res.gap_sigma}
        else:
            entry = _base_jsonable(res)
        out.append(entry)
    return json.dumps(out, indent=2) + "\n"
