"""Command-line front end.

Four subcommands: ``simulate`` runs the Monte Carlo experiments,
``exact`` prints dual-pipeline exact probabilities, ``verify`` runs the
identity and property suite, ``walsh`` transforms a truth-table file.

Exit codes: 0 success, 1 a verification failed, 2 bad usage or input,
3 a requested size exceeds a documented cap.
"""

import argparse
import dataclasses
import sys
from fractions import Fraction

import numpy as np

from .errors import CapacityError, InvalidParameterError
from .hexlattice import build_region
from .potts import merge_colorings, random_potts, split_coloring
from .percolation import beetle_check, percolates_from
from . import walsh
from .exact import (ENUMERATION_CAP, exact_by_enumeration, exact_by_fourier,
                    report_json, verify_identities)
from .montecarlo import (format_csv, format_json, run_center_experiment,
                         run_one_arm_experiment, run_sides_experiment)

# color -> (spin1, spin2, spin3); the verify suite checks split_coloring
# against this and the --inject-fault hook corrupts one row of it
_SPIN_TABLE = {0: (1, 1, 1), 1: (1, -1, -1), 2: (-1, 1, -1), 3: (-1, -1, 1)}


def _g12(x):
    return "%.12g" % x


def parse_n_list(text):
    """Parse ``3``, ``3,5,7``, or ``5..10`` into a sorted list of ints."""
    out = []
    for token in text.split(","):
        token = token.strip()
        if ".." in token:
            lo, _, hi = token.partition("..")
            try:
                lo, hi = int(lo), int(hi)
            except ValueError:
                raise InvalidParameterError(
                    f"bad range {token!r}; expected a..b") from None
            if lo > hi:
                raise InvalidParameterError(f"empty range {token!r}")
            out.extend(range(lo, hi + 1))
        else:
            try:
                out.append(int(token))
            except ValueError:
                raise InvalidParameterError(
                    f"bad value {token!r} in --n") from None
    if not out:
        raise InvalidParameterError("--n parsed to an empty list")
    return sorted(set(out))


def _emit(text, out_path):
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w") as fh:
            fh.write(text)


def cmd_simulate(args):
    n_list = parse_n_list(args.n)
    if args.algorithm == "beetle" and args.mode != "center":
        raise InvalidParameterError(
            "the beetle algorithm only applies to --mode center")
    results = []
    for n in n_list:
        if args.mode == "center":
            res = run_center_experiment(n, args.trials, args.seed,
                                        args.workers, algorithm=args.algorithm)
        elif args.mode == "sides":
            res = run_sides_experiment(n, args.trials, args.seed, args.workers)
        else:
            res = run_one_arm_experiment(n, args.trials, args.seed,
                                         args.workers)
        results.append(res)
    if args.fluids < 3:
        # report only the first --fluids nested tallies; the rest print as 0
        masked = []
        for res in results:
            st = res.stats if hasattr(res, "stats") else res
            st = dataclasses.replace(st, T2=st.T2 if args.fluids >= 2 else 0,
                                     T3=0)
            masked.append(st)
        results = masked
    if args.format == "json":
        _emit(format_json(results), args.out)
    else:
        rows = [res.stats if hasattr(res, "stats") else res for res in results]
        _emit(format_csv(rows), args.out)
    return 0


def _report_lines(rep):
    label = "A" if rep.family == "center" else "B"
    names = [f"{label}1", f"{label}2", f"{label}3"]
    lines = [f"exact: n={rep.n} family={rep.family} m={rep.m} "
             f"method={rep.method}"]

    def frac_line(tag, value):
        return f"P({tag}) = {value} = {_g12(float(value))}"

    for name, s in zip(names, rep.singles):
        lines.append(frac_line(name, s))
    for (i, j), p in zip(((0, 1), (0, 2), (1, 2)), rep.pairs):
        lines.append(frac_line(f"{names[i]}&{names[j]}", p))
    lines.append(frac_line("&".join(names), rep.triple))
    lines.append(f"gap = {rep.gap} = {_g12(float(rep.gap))}")
    if rep.ratio is None:
        lines.append("ratio = undefined (product is 0)")
    else:
        lines.append(f"ratio = {rep.ratio} = {_g12(float(rep.ratio))}")
    return lines


def cmd_exact(args):
    n_list = parse_n_list(args.n)
    families = ["center", "sides"] if args.family == "both" else [args.family]
    blocks = []
    reports = []
    for n in n_list:
        region = build_region(n)
        for family in families:
            four = exact_by_fourier(region, family)
            if args.fourier_only:
                rep = four
            else:
                enum = exact_by_enumeration(region, family)
                same = (enum.singles == four.singles
                        and enum.pairs == four.pairs
                        and enum.triple == four.triple)
                if not same:
                    print(f"error: enumeration and fourier disagree at "
                          f"n={n} family={family}", file=sys.stderr)
                    return 1
                rep = dataclasses.replace(enum,
                                          method="enumeration+fourier")
            reports.append(rep)
            blocks.append("\n".join(_report_lines(rep)))
    if args.format == "json":
        _emit("[" + ",\n".join(report_json(r) for r in reports) + "]\n",
              args.out)
    else:
        _emit("\n\n".join(blocks) + "\n", args.out)
    return 0


def _check_bijection(fault):
    table = dict(_SPIN_TABLE)
    if fault:
        table[2] = (1, 1, -1)
    rng = np.random.default_rng(20240917)
    region = build_region(3)
    for _ in range(50):
        c = random_potts(region, rng)
        s1, s2, s3 = split_coloring(c)
        for i, color in enumerate(c.colors):
            if (s1.spin(i), s2.spin(i), s3.spin(i)) != table[color]:
                return (False, f"cell {i} color {color} maps to "
                               f"{(s1.spin(i), s2.spin(i), s3.spin(i))}, "
                               f"expected {table[color]}")
            if s3.spin(i) != s1.spin(i) * s2.spin(i):
                return (False, f"third spin is not the product at cell {i}")
        if merge_colorings(s1, s2) != c:
            return (False, "merge(split(c)) != c")
    return (True, "color<->spin bijection holds on 50 random colorings")


def _check_identities(n):
    region = build_region(n)
    report = verify_identities(region)
    if report.ok:
        return (True, f"{len(report.checks)}/{len(report.checks)} identity "
                      f"checks pass at n={n}")
    first = next(line for line in report.lines() if "[FAIL]" in line)
    return (False, first)


def _check_beetle(n, trials):
    region = build_region(n)
    rng = np.random.default_rng(771)
    center = region.index_of(0, 0)
    boundary = region.boundary
    for t in range(trials):
        c = random_potts(region, rng)
        ref = percolates_from(c, 1, center, boundary, region)
        if beetle_check(c, region) != ref:
            return (False, f"disagreement at n={n} trial {t}: "
                           f"coloring {c.to_line()}")
    return (True, f"beetle == reference search on {trials} random "
                  f"colorings at n={n}")


def _check_parseval():
    rng = np.random.default_rng(5150)
    for m in (4, 8, 10):
        f = walsh.TruthTable(rng.integers(0, 2, 1 << m).astype(float))
        F = walsh.transform(f)
        lhs = float(np.dot(F.coeffs, F.coeffs))
        rhs = float(np.mean(f.values ** 2))
        if abs(lhs - rhs) > 1e-10 * max(1.0, abs(rhs)):
            return (False, f"parseval off at m={m}: {lhs} vs {rhs}")
    return (True, "sum of squared coefficients matches mean square, m=4,8,10")


def _check_pivotal():
    rng = np.random.default_rng(2718)
    tables = [walsh.random_monotone_dnf(8, rng) for _ in range(5)]
    for f in tables:
        F = walsh.transform(f)
        scale = 1 << f.m
        for i in range(1, f.m + 1):
            counted = Fraction(round(walsh.pivotal_probability(f, i) * scale),
                               scale)
            coeff = Fraction(round(F.coeffs[1 << (i - 1)] * scale), scale)
            if counted != coeff:
                return (False, f"pivotal({i}) {counted} != singleton "
                               f"coefficient {coeff}")
    return (True, "pivotal probability equals the singleton coefficient "
                  "on 5 monotone tables, m=8")


def _check_inequality():
    rng = np.random.default_rng(98765)
    for t in range(20):
        f = walsh.random_monotone_dnf(int(rng.integers(3, 11)), rng)
        rep = walsh.check_coefficient_inequality(f)
        if not rep.ok:
            return (False, f"violation on table {t}: {rep.violation}")
    return (True, "singleton coefficients dominate on 20 monotone tables")


def cmd_verify(args):
    checks = [
        ("bijection", lambda: _check_bijection(args.inject_fault)),
        ("identities", lambda: _check_identities(args.n)),
        ("beetle", lambda: _check_beetle(5, 400)),
        ("parseval", lambda: _check_parseval()),
        ("pivotal", lambda: _check_pivotal()),
        ("inequality", lambda: _check_inequality()),
    ]
    first_fail = None
    for name, fn in checks:
        ok, detail = fn()
        print(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
        if not ok and first_fail is None:
            first_fail = name
    if first_fail is not None:
        print(f"verify: FAIL (first failure: {first_fail})")
        return 1
    print("verify: ok")
    return 0


def cmd_walsh(args):
    f = walsh.read_truth_table(args.table)
    F = walsh.transform(f)
    dump = walsh.format_table(F.coeffs, F.m)
    if args.out is not None:
        with open(args.out, "w") as fh:
            fh.write(dump)
    else:
        sys.stdout.write(dump)
    if args.pivotal:
        print(f"variance = {_g12(walsh.variance(F))}")
        for i in range(1, f.m + 1):
            print(f"pivotal {i} = {_g12(walsh.pivotal_probability(f, i))}")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hexpotts",
        description="percolation laboratory for a three-fluid four-state "
                    "model on a honeycomb region")
    sub = parser.add_subparsers(dest="subcommand", metavar="command")

    sim = sub.add_parser("simulate", help="run Monte Carlo experiments")
    sim.add_argument("--n", required=True,
                     help="region size: one value, a comma list, or a..b")
    sim.add_argument("--mode", choices=("center", "sides", "one-arm"),
                     default="center")
    sim.add_argument("--trials", type=int, default=100000)
    sim.add_argument("--fluids", type=int, choices=(1, 2, 3), default=3,
                     help="how many nested tallies to report; deeper "
                          "tallies print as 0 and the P column degenerates")
    sim.add_argument("--seed", type=int, default=0)
    sim.add_argument("--workers", type=int, default=None,
                     help="defaults to the available parallelism")
    sim.add_argument("--algorithm", choices=("bfs", "beetle"), default="bfs",
                     help="center-mode connectivity algorithm")
    sim.add_argument("--format", choices=("csv", "json"), default="csv")
    sim.add_argument("--out", default=None, help="write here, not stdout")
    sim.set_defaults(func=cmd_simulate)

    ex = sub.add_parser("exact",
                        help="exact probabilities via both pipelines")
    ex.add_argument("--n", default="3",
                    help="region size: one value, a comma list, or a..b")
    ex.add_argument("--family", choices=("center", "sides", "both"),
                    default="both")
    ex.add_argument("--fourier-only", action="store_true",
                    help=f"skip enumeration (needed once the cell count "
                         f"passes {ENUMERATION_CAP})")
    ex.add_argument("--format", choices=("text", "json"), default="text")
    ex.add_argument("--out", default=None, help="write here, not stdout")
    ex.set_defaults(func=cmd_exact)

    ver = sub.add_parser("verify",
                         help="identity and property suite, exit 0 iff clean")
    ver.add_argument("--n", type=int, default=3,
                     help="region size for the identity suite")
    ver.add_argument("--inject-fault", action="store_true",
                     help="corrupt one row of the expected color-to-spin "
                          "table (negative control; must exit 1)")
    ver.set_defaults(func=cmd_verify)

    wal = sub.add_parser("walsh",
                         help="transform a truth-table file")
    wal.add_argument("table", help="truth-table file: first line m, "
                                   "then 2^m values in {0,1}")
    wal.add_argument("--pivotal", action="store_true",
                     help="also print variance and per-coordinate "
                          "pivotal probabilities")
    wal.add_argument("--out", default=None,
                     help="write the coefficient table here, not stdout")
    wal.set_defaults(func=cmd_walsh)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "func", None) is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.func(args)
    except InvalidParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
