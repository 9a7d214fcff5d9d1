"""Connectivity tests: reference search, walls, and the wall-walking
center algorithm."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import frozen
from hexpotts.errors import InvalidParameterError
from hexpotts.hexlattice import build_region
from hexpotts.percolation import (Wall, beetle_check, build_wall,
                                  percolates_between, percolates_from,
                                  ray_parity, spin_percolates_between,
                                  spin_percolates_from)
from hexpotts.potts import PottsColoring, enumerate_potts, split_coloring

R3 = build_region(3)
R5 = build_region(5)
R7 = build_region(7)

SIDE1, SIDE4 = frozen.ROSETTE_SIDES[1], frozen.ROSETTE_SIDES[4]
CENTER = frozen.ROSETTE_CENTER


def coloring(region, blocked=(), fill=0, blocked_color=2):
    arr = np.full(region.m, fill, np.uint8)
    for q, r in blocked:
        i = region.index_of(q, r)
        assert i >= 0, (q, r)
        arr[i] = blocked_color
    return PottsColoring(arr)


def test_between_goes_around_a_blocked_center():
    c = coloring(R3, blocked=[(0, 0)], fill=1)
    assert percolates_between(c, 1, SIDE1, SIDE4, R3)
    assert not percolates_between(c, 2, SIDE1, SIDE4, R3)
    assert not percolates_between(c, 3, SIDE1, SIDE4, R3)


def test_between_needs_passable_endpoints():
    # side-1 cell itself blocked: no fluid-1 chain can start there
    c = coloring(R3, blocked=[(1, 0)], fill=1)
    assert not percolates_between(c, 1, SIDE1, SIDE4, R3)


def test_between_empty_sets():
    c = coloring(R3, fill=0)
    assert not percolates_between(c, 1, set(), SIDE4, R3)
    assert not percolates_between(c, 1, SIDE1, set(), R3)


def test_from_ignores_start_color():
    c = coloring(R3, blocked=[(0, 0)], fill=1)
    assert percolates_from(c, 1, CENTER, frozen.ROSETTE_BOUNDARY, R3)
    # all neighbors blocked for fluid 2
    assert not percolates_from(c, 2, CENTER, frozen.ROSETTE_BOUNDARY, R3)


def test_from_start_inside_targets():
    c = coloring(R3, fill=3, blocked=[], blocked_color=3)
    assert percolates_from(c, 1, 4, {4}, R3)


def test_fluid_validation():
    c = coloring(R3)
    with pytest.raises(InvalidParameterError):
        percolates_between(c, 0, SIDE1, SIDE4, R3)
    with pytest.raises(InvalidParameterError):
        percolates_from(c, 4, CENTER, frozen.ROSETTE_BOUNDARY, R3)
    with pytest.raises(InvalidParameterError):
        percolates_between(c, 1, {99}, SIDE4, R3)


colors3 = st.lists(st.integers(0, 3), min_size=7, max_size=7).map(
    lambda xs: PottsColoring(np.array(xs, np.uint8)))


@given(colors3)
def test_spin_routes_agree_with_color_routes(c):
    # fluid k connectivity must look identical through spin table k
    tables = split_coloring(c)
    for k, s in zip((1, 2, 3), tables):
        assert (percolates_between(c, k, SIDE1, SIDE4, R3)
                == spin_percolates_between(s, SIDE1, SIDE4, R3))
        assert (percolates_from(c, k, CENTER, frozen.ROSETTE_BOUNDARY, R3)
                == spin_percolates_from(s, CENTER, frozen.ROSETTE_BOUNDARY,
                                        R3))


@given(colors3)
def test_recoloring_to_zero_never_disconnects(c):
    # color 0 is passable to everything: opening one cell is monotone
    before = percolates_between(c, 1, SIDE1, SIDE4, R3)
    arr = c.colors.copy()
    arr[int(np.argmax(arr))] = 0
    after = percolates_between(PottsColoring(arr), 1, SIDE1, SIDE4, R3)
    assert after or not before


def test_wall_around_one_blocked_cell():
    c = coloring(R5, blocked=[(0, -1)])
    w = build_wall(c, ((0, 0), (0, -1)), R5)
    assert w.closed and len(w) == 6
    assert all(b == (0, -1) for _, b in w.segments)
    assert {p for p, _ in w.segments} == {(0, 0), (1, -1), (1, -2), (0, -2),
                                          (-1, -1), (-1, 0)}
    assert ray_parity(w, R5) == 0


def test_wall_reaching_the_rim_stays_open():
    c = coloring(R5, blocked=[(0, -2)])
    w = build_wall(c, ((0, -1), (0, -2)), R5)
    assert not w.closed
    with pytest.raises(InvalidParameterError):
        ray_parity(w, R5)


def test_wall_start_edge_validation():
    c = coloring(R5, blocked=[(0, -1)])
    with pytest.raises(InvalidParameterError):
        build_wall(c, ((0, 0), (1, -1)), R5)      # not the bottom edge
    with pytest.raises(InvalidParameterError):
        build_wall(c, ((0, -1), (0, -2)), R5)     # nothing blocked there
    with pytest.raises(InvalidParameterError):
        build_wall(c, ((0, 9), (0, 8)), R5)       # outside the region
    blocked_above = coloring(R5, blocked=[(0, 0)])
    with pytest.raises(InvalidParameterError):
        build_wall(blocked_above, ((0, 0), (0, -1)), R5)


def test_same_interface_from_another_edge():
    # a closed interface is one cycle; both start edges walk it
    c = coloring(R7, blocked=[(-1, -1), (0, -1), (1, -1)])
    w1 = build_wall(c, ((0, 0), (0, -1)), R7)
    w2 = build_wall(c, ((-1, 0), (-1, -1)), R7)
    assert w1.closed and w2.closed and len(w1) == len(w2) == 14
    assert set(w1.segments) == set(w2.segments)


def test_trace_open_wall_ends_at_the_rim():
    # a blocked ridge hanging to the bottom rim: its wall stays open,
    # which already proves a way around exists
    c = coloring(R7, blocked=[(0, -1), (0, -2), (0, -3)])
    lines = []
    assert beetle_check(c, R7, trace=lines)
    text = "\n".join(lines)
    assert "open, ends between boundary cells" in text
    assert "END1: percolation from the center to the boundary" in text


def test_trace_closed_ring_odd_parity():
    ring = [(0, 1), (1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1)]
    c = coloring(R7, blocked=ring)
    lines = []
    assert not beetle_check(c, R7, trace=lines)
    text = "\n".join(lines)
    assert "wall below: 6 segments, closed" in text
    assert "ray crossings: 1" in text
    assert "END2: no percolation from the center to the boundary" in text


def test_trace_even_parity_bypasses_the_bar():
    c = coloring(R7, blocked=[(-1, -1), (0, -1), (1, -1)])
    lines = []
    assert beetle_check(c, R7, trace=lines)
    text = "\n".join(lines)
    assert "wall below: 14 segments, closed" in text
    assert "ray crossings: 2" in text
    assert "bypasses the wall to (0, -2)" in text
    assert "END1: percolation from the center to the boundary" in text


def test_beetle_matches_reference_exhaustively_n3():
    boundary = R3.boundary
    bad = 0
    for c in enumerate_potts(R3):
        ref = percolates_from(c, 1, CENTER, boundary, R3)
        if beetle_check(c, R3) != ref:
            bad += 1
    assert bad == 0


@pytest.mark.parametrize("n,trials", [(5, 400), (7, 300)])
def test_beetle_matches_reference_random(n, trials):
    region = build_region(n)
    center = region.index_of(0, 0)
    rng = np.random.default_rng(n * 1000 + 7)
    for _ in range(trials):
        c = PottsColoring(rng.integers(0, 4, region.m).astype(np.uint8))
        ref = percolates_from(c, 1, center, region.boundary, region)
        assert beetle_check(c, region) == ref


def test_wall_is_frozen_and_sized():
    c = coloring(R5, blocked=[(0, -1)])
    w = build_wall(c, ((0, 0), (0, -1)), R5)
    assert isinstance(w, Wall)
    with pytest.raises(AttributeError):
        w.closed = False
