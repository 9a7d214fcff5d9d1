"""Fourier-Walsh analysis of real functions on {-1,+1}^m.

Inputs are indexed by bitmask: bit (i-1) of the index is clear exactly
when coordinate x_i = +1, so index 0 is the all-(+1) input.  Subsets
S of {1..m} use the same packing, bit (i-1) set when i is in S.  The
transform returns coefficients normalized so that coeffs[0] is the
mean: coeffs[S] = 2^-m * sum_x f(x) * sigma_S(x) with sigma_S the
product of the coordinates named by S.

For {0,1}-valued tables the unnormalized butterfly stays in integers
well below 2^53, so coefficients come out as exact dyadic rationals and
the monotonicity-based coefficient comparisons can use exact equality.
"""
from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, InvalidParameterError

TRANSFORM_CAP = 24
SUBSET_SCAN_CAP = 20


def _infer_m(values, what):
    size = len(values)
    m = size.bit_length() - 1
    if size <= 0 or (1 << m) != size:
        raise InvalidParameterError(f"{what} length {size} is not a power of 2")
    if m > TRANSFORM_CAP:
        raise CapacityError(
            f"tables are capped at m = {TRANSFORM_CAP} coordinates "
            f"(2^{TRANSFORM_CAP} doubles); got m = {m}")
    return m


class TruthTable:
    """Dense table of f over all 2^m sign vectors."""

    __slots__ = ("m", "values")

    def __init__(self, values):
        values = np.array(values, np.float64)
        if values.ndim != 1:
            raise InvalidParameterError("truth table must be a flat array")
        self.m = _infer_m(values, "truth table")
        values.flags.writeable = False
        self.values = values

    def _require_boolean(self):
        ok = (self.values == 0.0) | (self.values == 1.0)
        if not ok.all():
            raise InvalidParameterError("table values must all be 0 or 1")


class FourierTable:
    """Dense table of Fourier-Walsh coefficients over all 2^m subsets."""

    __slots__ = ("m", "coeffs")

    def __init__(self, coeffs):
        coeffs = np.array(coeffs, np.float64)
        if coeffs.ndim != 1:
            raise InvalidParameterError("coefficient table must be a flat array")
        self.m = _infer_m(coeffs, "coefficient table")
        coeffs.flags.writeable = False
        self.coeffs = coeffs


def _butterfly(values, m):
    # in-place fast Walsh-Hadamard, O(m 2^m)
    for j in range(m):
        bit = 1 << j
        v = values.reshape(-1, 2 * bit)
        a = v[:, :bit].copy()
        v[:, :bit] += v[:, bit:]
        v[:, bit:] = a - v[:, bit:]
    return values


def transform(f):
    """Fourier table of f; coeffs[S] = E(f * sigma_S)."""
    vals = _butterfly(f.values.copy(), f.m)
    vals /= 1 << f.m
    return FourierTable(vals)


def inverse_transform(F):
    """Truth table of the function with the given coefficients."""
    return TruthTable(_butterfly(F.coeffs.copy(), F.m))


def variance(F):
    """Var(f) = sum of squared coefficients over nonempty subsets."""
    tail = F.coeffs[1:]
    return float(tail @ tail)


def is_increasing(f):
    """Does flipping any coordinate from +1 to -1 never raise f?"""
    f._require_boolean()
    for j in range(f.m):
        bit = 1 << j
        v = f.values.reshape(-1, 2 * bit)
        if (v[:, bit:] > v[:, :bit]).any():
            return False
    return True


def pivotal_probability(f, i):
    """P(x_i = +1 and flipping x_i changes f); coordinate i in 1..m.

    Note the x_i = +1 condition: this is half the standard influence
    for a coordinate whose flip always matters.
    """
    f._require_boolean()
    if not 1 <= i <= f.m:
        raise InvalidParameterError(f"coordinate {i} outside 1..{f.m}")
    bit = 1 << (i - 1)
    v = f.values.reshape(-1, 2 * bit)
    return float(np.count_nonzero(v[:, :bit] != v[:, bit:])) / (1 << f.m)


@dataclass(frozen=True)
class CoefficientReport:
    """Outcome of the singleton-bound scan over all nonempty subsets."""
    ok: bool
    violation: tuple          # (subset mask, coefficient, bound) or None
    max_subset: int           # argmax of |coeff| over nonempty subsets
    max_value: float
    max_at_singleton: bool


def check_coefficient_inequality(f):
    """Verify |coeff[S]| <= min over i in S of coeff[{i}] for all S != {}.

    Requires an increasing {0,1}-valued table, whose singleton
    coefficients are pivotal probabilities and hence nonnegative.  Also
    reports whether the largest nonempty coefficient magnitude is
    attained at a singleton.  All comparisons are exact: the values are
    dyadic rationals.
    """
    if f.m > SUBSET_SCAN_CAP:
        raise CapacityError(
            f"full-subset scans are capped at m = {SUBSET_SCAN_CAP}; got m = {f.m}")
    if not is_increasing(f):
        raise InvalidParameterError("coefficient inequality needs an increasing table")
    coeffs = transform(f).coeffs
    size = 1 << f.m
    # bound[S] = min over i in S of coeff at the singleton {i}
    bound = np.full(size, np.inf)
    for j in range(f.m):
        bit = 1 << j
        view = bound.reshape(-1, 2 * bit)[:, bit:]
        np.minimum(view, coeffs[bit], out=view)
    magnitude = np.abs(coeffs)
    bad = np.nonzero(magnitude > bound)[0]
    violation = None
    if bad.size:
        s = int(bad[0])
        violation = (s, float(coeffs[s]), float(bound[s]))
    max_subset = int(np.argmax(magnitude[1:])) + 1
    max_value = float(magnitude[max_subset])
    singles = [float(coeffs[1 << j]) for j in range(f.m)]
    max_at_singleton = max(singles) == max_value
    return CoefficientReport(ok=violation is None and max_at_singleton,
                             violation=violation,
                             max_subset=max_subset,
                             max_value=max_value,
                             max_at_singleton=max_at_singleton)


def triple_coefficient_sum(F1, F2, F3, nonempty_only=False):
    """sum over subsets S of F1[S] * F2[S] * F3[S]."""
    if not F1.m == F2.m == F3.m:
        raise InvalidParameterError("coefficient tables must share m")
    start = 1 if nonempty_only else 0
    return float(np.sum(F1.coeffs[start:] * F2.coeffs[start:] * F3.coeffs[start:]))


def random_monotone_dnf(m, rng, clauses=None):
    """Truth table of an OR of random AND-clauses; always increasing.

    A clause is a nonempty coordinate set, satisfied when all its
    coordinates are +1, so the all-(+1) input gives 1 and the all-(-1)
    input gives 0.
    """
    if m < 1:
        raise InvalidParameterError("need at least one coordinate")
    if clauses is None:
        clauses = m
    idx = np.arange(1 << m)
    values = np.zeros(1 << m)
    for _ in range(clauses):
        size = 1 + rng.binomial(m - 1, min(1.0, 2.0 / m))
        mask = 0
        for j in rng.choice(m, size=size, replace=False):
            mask |= 1 << int(j)
        values[(idx & mask) == 0] = 1.0
    return TruthTable(values)


def _read_table(path, what):
    try:
        with open(path) as fh:
            tokens = fh.read().split()
    except OSError as exc:
        raise InvalidParameterError(f"cannot read {what} file: {exc}") from None
    if not tokens:
        raise InvalidParameterError(f"empty {what} file")
    try:
        m = int(tokens[0])
    except ValueError:
        raise InvalidParameterError(
            f"first token of a {what} file must be m, got {tokens[0]!r}") from None
    if m < 0:
        raise InvalidParameterError(f"negative m in {what} file")
    if m > TRANSFORM_CAP:
        raise CapacityError(
            f"{what} file declares m = {m}, over the m = {TRANSFORM_CAP} cap")
    need = 1 << m
    if len(tokens) - 1 != need:
        raise InvalidParameterError(
            f"{what} file declares m = {m} but carries {len(tokens) - 1} "
            f"values instead of {need}")
    try:
        values = np.array([float(t) for t in tokens[1:]])
    except ValueError as exc:
        raise InvalidParameterError(f"bad value in {what} file: {exc}") from None
    return values


def format_table(values, m):
    """Render the table format as text: first line m, then 2^m values."""
    lines = [str(m)]
    for row in range(0, len(values), 8):
        lines.append(" ".join("%.17g" % v for v in values[row:row + 8]))
    return "\n".join(lines) + "\n"


def _write_table(values, m, path):
    with open(path, "w") as fh:
        fh.write(format_table(values, m))


def read_truth_table(path):
    """Parse the table format: first line m, then 2^m values."""
    return TruthTable(_read_table(path, "truth-table"))


def write_truth_table(f, path):
    _write_table(f.values, f.m, path)


def read_fourier_table(path):
    """Same layout as a truth table, holding coefficients."""
    return FourierTable(_read_table(path, "coefficient-table"))


def write_fourier_table(F, path):
    _write_table(F.coeffs, F.m, path)
