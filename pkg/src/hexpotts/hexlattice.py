"""Hexagonal region geometry.

A region is the set of honeycomb cells of side 1/n contained in a
regular hexagon of side 1 centered on the central cell.  Cells are
flat-top oriented (horizontal top and bottom edges), so every cell has
a well-defined cell directly below it, and the big hexagon's sides are
parallel to cell sides.  Axial coordinates (q, r) address cells; the
center of cell (q, r) sits at x = 1.5*s*q, y = sqrt(3)*s*(r + q/2)
with s = 1/n.

Regions are immutable after construction and safe to share read-only
across threads.
"""
import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError

SQRT3 = math.sqrt(3.0)

# axial neighbor steps, clockwise starting from north
NEIGHBOR_DELTAS = ((0, 1), (1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1))
DIR_N, DIR_NE, DIR_SE, DIR_S, DIR_SW, DIR_NW = range(6)

# absolute tolerance for boundary-touching vertices and side-distance ties
GEOM_TOL = 1e-9

# outward unit normals of the big hexagon's sides 1..6, counterclockwise;
# side j has its normal at 30 + 60*(j-1) degrees
_SIDE_NORMALS = tuple(
    (math.cos(math.radians(30 + 60 * j)), math.sin(math.radians(30 + 60 * j)))
    for j in range(6)
)
_APOTHEM = SQRT3 / 2

# vertex offsets of a flat-top cell with side s = 1, scaled at use site
_VERTEX_OFFSETS = tuple(
    (math.cos(math.radians(60 * t)), math.sin(math.radians(60 * t)))
    for t in range(6)
)


@dataclass(frozen=True)
class CellCoord:
    """Axial coordinates of one honeycomb cell."""

    q: int
    r: int

    def neighbors(self):
        return tuple(CellCoord(self.q + dq, self.r + dr)
                     for dq, dr in NEIGHBOR_DELTAS)


def cell_center(n, q, r):
    """Euclidean center of cell (q, r) on the step-1/n lattice."""
    s = 1.0 / n
    return 1.5 * s * q, SQRT3 * s * (r + q / 2.0)


def rotate60(q, r):
    """Axial coordinates after a 60-degree counterclockwise turn."""
    return -r, q + r


def _cell_inside(n, q, r):
    # all six cell vertices must lie in the closed big hexagon
    s = 1.0 / n
    cx, cy = cell_center(n, q, r)
    for ox, oy in _VERTEX_OFFSETS:
        vx, vy = cx + s * ox, cy + s * oy
        for nx, ny in _SIDE_NORMALS:
            if nx * vx + ny * vy > _APOTHEM + GEOM_TOL:
                return False
    return True


class HexRegion:
    """All cells of the step-1/n lattice contained in the big hexagon.

    Attributes
    ----------
    n : refinement; cell side is 1/n
    cells : tuple of CellCoord in (r, q) lexicographic order
    m : cell count
    center_index : index of the central cell O
    adjacency : per-cell tuple of in-region neighbor indices
    boundary : frozenset of indices with at least one neighbor outside
    side_members : dict side (1..6) -> frozenset of boundary indices
    nbr_flat, nbr_start : CSR form of adjacency (int32, for kernels)
    below : int32 array, index of the cell directly below, -1 if outside
    boundary_mask : bool array over cells
    """

    def __init__(self, n):
        if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
            raise InvalidParameterError(f"n must be an integer, got {n!r}")
        if n < 2:
            raise InvalidParameterError(f"n must be at least 2, got {n}")
        self.n = int(n)

        found = [(q, r)
                 for q in range(-n, n + 1)
                 for r in range(-n, n + 1)
                 if _cell_inside(n, q, r)]
        found.sort(key=lambda c: (c[1], c[0]))
        self.cells = tuple(CellCoord(q, r) for q, r in found)
        self.m = len(self.cells)
        self._index = {(c.q, c.r): i for i, c in enumerate(self.cells)}
        self.center_index = self._index[(0, 0)]

        self.adjacency = tuple(
            tuple(self._index[(c.q + dq, c.r + dr)]
                  for dq, dr in NEIGHBOR_DELTAS
                  if (c.q + dq, c.r + dr) in self._index)
            for c in self.cells
        )
        self.boundary = frozenset(
            i for i, nbrs in enumerate(self.adjacency) if len(nbrs) < 6)

        centers = np.array([cell_center(n, c.q, c.r) for c in self.cells])
        self.centers = centers
        # membership: boundary cells whose distance to the side line is
        # minimal over all six lines, ties kept
        dists = np.stack(
            [_APOTHEM - (nx * centers[:, 0] + ny * centers[:, 1])
             for nx, ny in _SIDE_NORMALS], axis=1)
        nearest = dists.min(axis=1)
        self.side_members = {
            j: frozenset(
                int(i) for i in np.nonzero(
                    dists[:, j - 1] <= nearest + GEOM_TOL)[0]
                if i in self.boundary)
            for j in range(1, 7)
        }

        # kernel-friendly arrays
        self.nbr_start = np.zeros(self.m + 1, np.int32)
        for i, nbrs in enumerate(self.adjacency):
            self.nbr_start[i + 1] = self.nbr_start[i] + len(nbrs)
        self.nbr_flat = np.fromiter(
            (j for nbrs in self.adjacency for j in nbrs),
            np.int32, count=int(self.nbr_start[-1]))
        self.below = np.array(
            [self._index.get((c.q, c.r - 1), -1) for c in self.cells],
            np.int32)
        self.boundary_mask = np.zeros(self.m, bool)
        self.boundary_mask[list(self.boundary)] = True
        self.qs = np.array([c.q for c in self.cells], np.int32)
        self.rs = np.array([c.r for c in self.cells], np.int32)

    def index_of(self, q, r):
        """Dense index of cell (q, r), or -1 when outside the region."""
        return self._index.get((q, r), -1)

    def contains(self, q, r):
        return (q, r) in self._index

    def __repr__(self):
        return f"HexRegion(n={self.n}, m={self.m})"


def build_region(n):
    """Build the region for refinement n (n >= 2)."""
    return HexRegion(n)


def boundary_cells(region):
    """Indices of cells with at least one lattice neighbor outside."""
    return set(region.boundary)


def side_cells(region, side):
    """Boundary cells nearest to the line containing the given side.

    Sides are numbered 1..6 counterclockwise; a corner cell can belong
    to two sides.
    """
    if side not in (1, 2, 3, 4, 5, 6):
        raise InvalidParameterError(f"side must be in 1..6, got {side}")
    return set(region.side_members[side])


def rotation_permutation(region):
    """Cell index permutation induced by a 60-degree counterclockwise turn."""
    perm = np.empty(region.m, np.int64)
    for i, c in enumerate(region.cells):
        q2, r2 = rotate60(c.q, c.r)
        perm[i] = region.index_of(q2, r2)
    if (perm < 0).any():
        raise InvalidParameterError("rotation does not map region to itself")
    return perm


def region_to_json(region):
    """Serialize the region for debugging and cross-language checks."""
    payload = {
        "n": region.n,
        "m": region.m,
        "cells": [
            {"q": c.q, "r": c.r,
             "x": region.centers[i, 0], "y": region.centers[i, 1]}
            for i, c in enumerate(region.cells)
        ],
        "boundary": sorted(region.boundary),
        "sides": {str(j): sorted(region.side_members[j]) for j in range(1, 7)},
    }
    return json.dumps(payload, indent=2)
