"""Transform toolkit tests, mostly definition-style cross-checks."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hexpotts.errors import CapacityError, InvalidParameterError
from hexpotts import walsh


def parity_column(m, mask):
    # chi_S(x) over the truth-table index order; a clear index bit means
    # that coordinate is +1, so the sign is the popcount of idx & mask
    v = np.arange(1 << m) & mask
    count = np.zeros(1 << m, np.int64)
    while v.any():
        count += v & 1
        v = v >> 1
    return np.where(count % 2 == 0, 1.0, -1.0)


def brute_transform(values, m):
    # definition: F[S] = mean over x of f(x) * chi_S(x)
    return np.array([np.mean(values * parity_column(m, S))
                     for S in range(1 << m)])


def table(vals):
    return walsh.TruthTable(np.array(vals, float))


def test_dictator_coefficients():
    f = table([1, 0, 1, 0])  # passes iff coordinate 1 is +1
    F = walsh.transform(f)
    assert np.array_equal(F.coeffs, [0.5, 0.5, 0.0, 0.0])


def test_majority_of_three_coefficients():
    # +1 coordinates are the clear index bits
    vals = [1 if 3 - bin(i).count("1") >= 2 else 0 for i in range(8)]
    F = walsh.transform(table(vals))
    assert F.coeffs[0] == 0.5
    assert all(F.coeffs[1 << b] == 0.25 for b in range(3))
    assert F.coeffs[0b111] == -0.25
    assert F.coeffs[0b011] == F.coeffs[0b101] == F.coeffs[0b110] == 0.0


@pytest.mark.parametrize("m", [1, 2, 3, 5])
def test_transform_matches_definition(m):
    rng = np.random.default_rng(m)
    vals = rng.integers(0, 2, 1 << m).astype(float)
    F = walsh.transform(table(vals))
    assert np.allclose(F.coeffs, brute_transform(vals, m), atol=1e-12)


def test_parity_columns_are_orthonormal():
    m = 6
    rng = np.random.default_rng(60)
    masks = rng.integers(0, 1 << m, 12)
    for a in masks:
        for b in masks:
            dot = np.dot(parity_column(m, int(a)), parity_column(m, int(b)))
            assert dot / (1 << m) == (1.0 if a == b else 0.0)


@given(st.integers(1, 8), st.integers(0, 2**32 - 1))
@settings(max_examples=40)
def test_roundtrip_is_exact_on_boolean_tables(m, seed):
    vals = np.random.default_rng(seed).integers(0, 2, 1 << m).astype(float)
    back = walsh.inverse_transform(walsh.transform(table(vals)))
    # butterfly sums of {0,1} tables stay integral: equality is exact
    assert np.array_equal(back.values, vals)


@given(st.integers(1, 10), st.integers(0, 2**32 - 1))
@settings(max_examples=40)
def test_parseval(m, seed):
    vals = np.random.default_rng(seed).integers(0, 2, 1 << m).astype(float)
    F = walsh.transform(table(vals))
    lhs = np.dot(F.coeffs, F.coeffs)
    rhs = np.mean(vals ** 2)
    assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-15)


def test_variance_matches_moments():
    rng = np.random.default_rng(4)
    vals = rng.integers(0, 2, 64).astype(float)
    F = walsh.transform(table(vals))
    expect = np.mean(vals ** 2) - np.mean(vals) ** 2
    assert walsh.variance(F) == pytest.approx(expect, abs=1e-14)


def brute_pivotal(vals, m, i):
    # fraction of inputs with x_i = +1 whose value flips when x_i does
    bit = 1 << (i - 1)
    hits = sum(1 for x in range(1 << m)
               if not x & bit and vals[x] != vals[x | bit])
    return hits / (1 << m)


@pytest.mark.parametrize("m", [2, 3, 5])
def test_pivotal_probability_matches_count(m):
    rng = np.random.default_rng(m + 100)
    vals = rng.integers(0, 2, 1 << m).astype(float)
    f = table(vals)
    for i in range(1, m + 1):
        assert walsh.pivotal_probability(f, i) == brute_pivotal(vals, m, i)
    with pytest.raises(InvalidParameterError):
        walsh.pivotal_probability(f, 0)
    with pytest.raises(InvalidParameterError):
        walsh.pivotal_probability(f, m + 1)


@given(st.integers(2, 9), st.integers(0, 2**32 - 1))
@settings(max_examples=60)
def test_pivotal_equals_singleton_coefficient_when_monotone(m, seed):
    rng = np.random.default_rng(seed)
    f = walsh.random_monotone_dnf(m, rng)
    F = walsh.transform(f)
    scale = 1 << m
    for i in range(1, m + 1):
        counted = round(walsh.pivotal_probability(f, i) * scale)
        coeff = round(F.coeffs[1 << (i - 1)] * scale)
        assert counted == coeff


def test_is_increasing():
    rng = np.random.default_rng(9)
    assert walsh.is_increasing(walsh.random_monotone_dnf(6, rng))
    parity = table([(1 - (-1) ** bin(i).count("1")) // 2 for i in range(16)])
    assert not walsh.is_increasing(parity)
    assert walsh.is_increasing(table([1, 1, 1, 1]))


@given(st.integers(2, 10), st.integers(0, 2**32 - 1))
@settings(max_examples=60)
def test_coefficient_inequality_on_monotone_tables(m, seed):
    rng = np.random.default_rng(seed)
    f = walsh.random_monotone_dnf(m, rng)
    rep = walsh.check_coefficient_inequality(f)
    assert rep.ok and rep.violation is None
    assert rep.max_at_singleton


def test_coefficient_inequality_rejects_non_monotone():
    parity = table([0, 1, 1, 0])
    with pytest.raises(InvalidParameterError):
        walsh.check_coefficient_inequality(parity)


def test_triple_sum_matches_definition():
    rng = np.random.default_rng(31)
    tables = [table(rng.integers(0, 2, 16).astype(float)) for _ in range(3)]
    Fs = [walsh.transform(f) for f in tables]
    total = sum(Fs[0].coeffs[S] * Fs[1].coeffs[S] * Fs[2].coeffs[S]
                for S in range(16))
    nonempty = total - np.prod([F.coeffs[0] for F in Fs])
    assert walsh.triple_coefficient_sum(*Fs) == pytest.approx(total, abs=1e-15)
    assert walsh.triple_coefficient_sum(*Fs, nonempty_only=True) == \
        pytest.approx(nonempty, abs=1e-15)


def test_table_validation():
    # real-valued tables transform fine; boolean-only operations refuse
    halves = walsh.TruthTable(np.array([0.0, 0.5]))
    walsh.transform(halves)
    with pytest.raises(InvalidParameterError):
        walsh.pivotal_probability(halves, 1)
    with pytest.raises(InvalidParameterError):
        walsh.is_increasing(halves)
    with pytest.raises(InvalidParameterError):
        walsh.TruthTable(np.array([0.0, 1.0, 0.0]))


def test_file_roundtrip(tmp_path):
    rng = np.random.default_rng(8)
    vals = rng.integers(0, 2, 32).astype(float)
    p = tmp_path / "t.txt"
    walsh.write_truth_table(table(vals), p)
    back = walsh.read_truth_table(p)
    assert np.array_equal(back.values, vals)
    F = walsh.transform(back)
    q = tmp_path / "F.txt"
    walsh.write_fourier_table(F, q)
    assert np.array_equal(walsh.read_fourier_table(q).coeffs, F.coeffs)


def test_file_rejects_malformed(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("2\n1 0 1\n")
    with pytest.raises(InvalidParameterError):
        walsh.read_truth_table(bad)
    bad.write_text("x\n")
    with pytest.raises(InvalidParameterError):
        walsh.read_truth_table(bad)
    bad.write_text("")
    with pytest.raises(InvalidParameterError):
        walsh.read_truth_table(bad)
    bad.write_text("25\n0\n")
    with pytest.raises(CapacityError):
        walsh.read_truth_table(bad)


def test_random_monotone_dnf_properties():
    rng = np.random.default_rng(12)
    f = walsh.random_monotone_dnf(7, rng, clauses=4)
    assert f.m == 7
    assert walsh.is_increasing(f)
    assert set(np.unique(f.values)) <= {0.0, 1.0}
