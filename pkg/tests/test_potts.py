"""Color model tests: the four-color/three-spin dictionary."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hexpotts.errors import CapacityError, InvalidParameterError
from hexpotts.hexlattice import build_region
from hexpotts.potts import (PottsColoring, SpinColoring, enumerate_potts,
                            merge_colorings, random_potts, split_coloring)

# color -> (spin1, spin2, spin3)
SPIN_TABLE = {0: (1, 1, 1), 1: (1, -1, -1), 2: (-1, 1, -1), 3: (-1, -1, 1)}

colorings = st.lists(st.integers(0, 3), min_size=1, max_size=40).map(
    lambda xs: PottsColoring(np.array(xs, np.uint8)))


def test_spin_table_rows():
    c = PottsColoring(np.array([0, 1, 2, 3], np.uint8))
    s1, s2, s3 = split_coloring(c)
    for i, color in enumerate(c.colors):
        assert (s1.spin(i), s2.spin(i), s3.spin(i)) == SPIN_TABLE[color]


@given(colorings)
def test_split_then_merge_roundtrip(c):
    s1, s2, s3 = split_coloring(c)
    assert merge_colorings(s1, s2) == c


@given(colorings)
def test_third_spin_is_the_product(c):
    s1, s2, s3 = split_coloring(c)
    assert s3 == s1.product(s2)
    arr = s1.to_spin_array() * s2.to_spin_array()
    assert np.array_equal(arr, s3.to_spin_array())


@given(colorings)
def test_passability_translates_to_plus_spins(c):
    # fluid k moves through colors {0, k}; spin table k is +1 exactly there
    for k, s in zip((1, 2, 3), split_coloring(c)):
        passable = np.isin(c.colors, (0, k))
        assert np.array_equal(s.minus_mask_array() == 0, passable)


def test_spin_array_roundtrip():
    spins = np.array([1, -1, -1, 1, 1], np.int8)
    s = SpinColoring.from_spin_array(spins)
    assert np.array_equal(s.to_spin_array(), spins)
    assert s.spin(0) == 1 and s.spin(1) == -1
    with pytest.raises(InvalidParameterError):
        SpinColoring.from_spin_array(np.array([1, 0, -1]))


def test_line_snapshot_roundtrip():
    c = PottsColoring(np.array([3, 0, 1, 2, 2], np.uint8))
    assert c.to_line() == "30122"
    assert PottsColoring.from_line("30122") == c
    with pytest.raises(InvalidParameterError):
        PottsColoring.from_line("3014x")


def test_color_range_checked():
    with pytest.raises(InvalidParameterError):
        PottsColoring(np.array([0, 4], np.uint8))
    with pytest.raises(InvalidParameterError):
        PottsColoring(np.array([[0, 1], [2, 3]], np.uint8))


def test_merge_length_mismatch():
    a = SpinColoring.from_spin_array(np.array([1, 1], np.int8))
    b = SpinColoring.from_spin_array(np.array([1, 1, -1], np.int8))
    with pytest.raises(InvalidParameterError):
        merge_colorings(a, b)


def test_random_potts_is_seed_stable():
    region = build_region(4)
    a = random_potts(region, np.random.default_rng(17))
    b = random_potts(region, np.random.default_rng(17))
    assert a == b
    assert a.m == region.m
    assert a.colors.dtype == np.uint8
    assert set(np.unique(a.colors)) <= {0, 1, 2, 3}


def test_enumeration_counts_and_order():
    region = build_region(3)
    seen = list(enumerate_potts(region))
    assert len(seen) == 4 ** 7
    # cell 0 is the fastest-moving digit
    assert seen[0].to_line() == "0000000"
    assert seen[1].to_line() == "1000000"
    assert seen[4].to_line() == "0100000"
    assert seen[-1].to_line() == "3333333"
    assert len({c.to_line() for c in seen[:256]}) == 256


def test_enumeration_cap():
    with pytest.raises(CapacityError):
        next(enumerate_potts(build_region(4)))
