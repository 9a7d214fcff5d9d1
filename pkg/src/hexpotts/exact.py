"""Exact event probabilities by two independent routes.

Route one enumerates all 4^m colorings and tallies the three fluid
events jointly, giving rationals over 4^m.  Route two never touches
4-colorings: it builds the 2^m truth tables of the spin indicator
functions, Fourier-transforms them, and reads the probabilities off
the coefficients:

    P(single)      = coeff[empty set]
    P(pair)        = product of the two singles (distinct spin
                     colorings are independent, and the third is their
                     product, which integrates out)
    P(triple)      = sum over S of f1[S] f2[S] f3[S]
    gap            = the same sum over nonempty S only

The {0,1} tables make every butterfly intermediate an integer below
2^53, so the float transform is exact and scaling by 2^m recovers
integer coefficients; all reported values are true rationals.  The two
routes share no counting code, which is the point: each checks the
other.
"""
import json
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import CapacityError, InvalidParameterError
from .walsh import TruthTable, transform
from ._kernels import color_event_tallies, spin_event_table

ENUMERATION_CAP = 12
FOURIER_CAP = 24
_FAMILIES = ("center", "sides")


@dataclass(frozen=True)
class ExactReport:
    """Exact single/pair/triple probabilities for one event family."""
    n: int
    m: int
    family: str
    method: str
    singles: tuple     # P(E1), P(E2), P(E3)
    pairs: tuple       # P(E1 and E2), P(E1 and E3), P(E2 and E3)
    triple: Fraction
    gap: Fraction      # triple minus the product of the singles
    ratio: object      # triple over the product, None if product is 0

    def to_jsonable(self):
        def frac(x):
            return {"num": x.numerator, "den": x.denominator,
                    "float": float(x)}
        out = {"n": self.n, "m": self.m, "family": self.family,
               "method": self.method,
               "singles": [frac(s) for s in self.singles],
               "pairs": [frac(p) for p in self.pairs],
               "triple": frac(self.triple), "gap": frac(self.gap),
               "ratio": None if self.ratio is None else frac(self.ratio)}
        return out


def report_json(report):
    return json.dumps(report.to_jsonable(), indent=2)


def _check_family(family):
    if family not in _FAMILIES:
        raise InvalidParameterError(f"family must be center or sides, got {family!r}")


def _neighbor_masks(region):
    masks = np.zeros(region.m, np.int64)
    for i, nbrs in enumerate(region.adjacency):
        acc = 0
        for j in nbrs:
            acc |= 1 << j
        masks[i] = acc
    return masks


def _cell_mask(cells):
    acc = 0
    for i in cells:
        acc |= 1 << int(i)
    return np.int64(acc)


def _event_masks(region, family):
    # per fluid: (source mask, target mask) in region cell bits
    if family == "sides":
        out = []
        for k in (1, 2, 3):
            out.append((_cell_mask(region.side_members[k]),
                        _cell_mask(region.side_members[k + 3])))
        return out
    src = _cell_mask(region.adjacency[region.center_index])
    tgt = _cell_mask(region.boundary)
    return [(src, tgt)] * 3


def _degenerate_center(region, family):
    # a boundary center reaches the boundary with no chain at all
    return family == "center" and bool(region.boundary_mask[region.center_index])


def _assemble(n, m, family, method, singles, pairs, triple):
    product = singles[0] * singles[1] * singles[2]
    gap = triple - product
    ratio = None if product == 0 else triple / product
    return ExactReport(n=n, m=m, family=family, method=method,
                       singles=tuple(singles), pairs=tuple(pairs),
                       triple=triple, gap=gap, ratio=ratio)


def _all_ones_report(region, family, method):
    one = Fraction(1)
    return _assemble(region.n, region.m, family, method,
                     (one, one, one), (one, one, one), one)


def exact_by_enumeration(region, family):
    """Joint event probabilities from the full 4^m coloring scan."""
    _check_family(family)
    if region.m > ENUMERATION_CAP:
        raise CapacityError(
            f"exhaustive enumeration is capped at m = {ENUMERATION_CAP} "
            f"cells (4^m colorings); region has m = {region.m}")
    if _degenerate_center(region, family):
        return _all_ones_report(region, family, "enumeration")
    masks = _neighbor_masks(region)
    (s1, t1), (s2, t2), (s3, t3) = _event_masks(region, family)
    c1, c2, c3, c12, c13, c23, c123 = [
        int(v) for v in color_event_tallies(region.m, masks,
                                            s1, s2, s3, t1, t2, t3)]
    total = 4 ** region.m
    return _assemble(
        region.n, region.m, family, "enumeration",
        [Fraction(c, total) for c in (c1, c2, c3)],
        [Fraction(c, total) for c in (c12, c13, c23)],
        Fraction(c123, total))


def spin_indicator_tables(region, family):
    """The three spin truth tables behind an event family.

    For sides these are the three side-to-opposite-side indicators;
    for center all three fluids share one center-to-boundary indicator,
    returned three times.
    """
    _check_family(family)
    if region.m > FOURIER_CAP:
        raise CapacityError(
            f"spin truth tables are capped at m = {FOURIER_CAP} cells "
            f"(2^m entries); region has m = {region.m}")
    masks = _neighbor_masks(region)
    pairs = _event_masks(region, family)
    if family == "center":
        src, tgt = pairs[0]
        table = TruthTable(spin_event_table(region.m, masks, src, tgt))
        return table, table, table
    return tuple(
        TruthTable(spin_event_table(region.m, masks, src, tgt))
        for src, tgt in pairs)


def _integer_coeffs(table):
    # 2^m times the Fourier coefficients, exactly
    scaled = transform(table).coeffs * (1 << table.m)
    return np.rint(scaled).astype(np.int64)


def _triple_sums(g1, g2, g3, m):
    # full and nonempty-only sums of g1 g2 g3, as integers
    if m <= 20:
        prod = g1 * g2 * g3
        full = int(prod.sum())
        nonempty = int(prod[1:].sum())
    else:
        # products can pass 2^63 here; take the slow exact path
        full = sum(int(a) * int(b) * int(c) for a, b, c in zip(g1, g2, g3))
        nonempty = full - int(g1[0]) * int(g2[0]) * int(g3[0])
    return full, nonempty


def exact_by_fourier(region, family):
    """Event probabilities from spin tables and coefficient sums.

    2^m work in place of 4^m; the pair probabilities are products of
    singles because distinct spin colorings are independent.
    """
    _check_family(family)
    if _degenerate_center(region, family):
        return _all_ones_report(region, family, "fourier")
    tables = spin_indicator_tables(region, family)
    m = region.m
    g = [_integer_coeffs(t) for t in tables]
    singles = [Fraction(int(gk[0]), 1 << m) for gk in g]
    pairs = [singles[0] * singles[1], singles[0] * singles[2],
             singles[1] * singles[2]]
    full, _ = _triple_sums(g[0], g[1], g[2], m)
    triple = Fraction(full, 1 << (3 * m))
    return _assemble(region.n, region.m, family, "fourier",
                     singles, pairs, triple)


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class IdentityReport:
    n: int
    m: int
    checks: tuple

    @property
    def ok(self):
        return all(c.passed for c in self.checks)

    def lines(self):
        return [f"[{'PASS' if c.passed else 'FAIL'}] {c.name}: {c.detail}"
                for c in self.checks]


def verify_identities(region):
    """Cross-check every exact identity the two routes must satisfy.

    With enumeration feasible (m <= 12) the routes are compared value
    by value; otherwise the fourier route is checked for internal
    consistency (Parseval, pair products, gap decomposition).
    """
    if region.m > FOURIER_CAP:
        raise CapacityError(
            f"identity verification needs m <= {FOURIER_CAP}; "
            f"region has m = {region.m}")
    checks = []

    def add(name, passed, detail):
        checks.append(IdentityCheck(name, bool(passed), detail))

    for family in _FAMILIES:
        fo = exact_by_fourier(region, family)
        if not _degenerate_center(region, family):
            tables = spin_indicator_tables(region, family)
            g = [_integer_coeffs(t) for t in tables]
            for k, (tab, gk) in enumerate(zip(tables, g), start=1):
                ones = int(tab.values.sum())
                add(f"{family}: Parseval, fluid {k}",
                    int((gk.astype(object) ** 2).sum()) == (1 << region.m) * ones,
                    f"sum of squared coefficients = 2^m * count({ones})")
            full, nonempty = _triple_sums(g[0], g[1], g[2], region.m)
            prod_heads = int(g[0][0]) * int(g[1][0]) * int(g[2][0])
            add(f"{family}: gap equals nonempty coefficient sum",
                full - prod_heads == nonempty
                and fo.gap == Fraction(nonempty, 1 << (3 * region.m)),
                f"nonempty sum {nonempty} / 2^(3m)")
        if region.m <= ENUMERATION_CAP:
            en = exact_by_enumeration(region, family)
            add(f"{family}: singles agree across routes",
                en.singles == fo.singles,
                f"{[str(s) for s in en.singles]}")
            add(f"{family}: intersection agrees across routes",
                en.triple == fo.triple, f"{en.triple}")
            prods = (en.singles[0] * en.singles[1],
                     en.singles[0] * en.singles[2],
                     en.singles[1] * en.singles[2])
            add(f"{family}: pairwise independence",
                en.pairs == prods,
                f"pairs {[str(p) for p in en.pairs]} equal single products")
            add(f"{family}: gap agrees across routes",
                en.gap == fo.gap, f"{en.gap} = {float(en.gap):.12g}")
        else:
            add(f"{family}: pairs are single products",
                fo.pairs == (fo.singles[0] * fo.singles[1],
                             fo.singles[0] * fo.singles[2],
                             fo.singles[1] * fo.singles[2]),
                "fourier route internal consistency")
    return IdentityReport(region.n, region.m, tuple(checks))
