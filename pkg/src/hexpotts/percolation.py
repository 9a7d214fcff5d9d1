"""Percolation predicates: graph-search reference and the beetle checker.

Fluid k moves through cells colored 0 or k.  The reference predicates
answer side-to-side and cell-to-boundary connectivity questions by
breadth-first search.  beetle_check answers the fluid-1 center question
by a different route: walk straight down until blocked, trace the
interface between passable and blocked cells (the wall), and classify
closed walls by the parity of their crossings with the downward
vertical ray from the center.  Every step is integer arithmetic on
axial coordinates.

A wall is a sequence of cell edges, each kept as an ordered pair
(passable cell, blocked cell), so the side assignment travels with the
segment.  The walk keeps the passable side on a fixed hand, which makes
the successor of each wall state unique and the walk reversible; the
first repeated state is therefore the starting one, and any other
repeat is a bug, not a property of the input.
"""
from dataclasses import dataclass

import numpy as np

from .errors import InternalInvariantError, InvalidParameterError
from .hexlattice import DIR_S, NEIGHBOR_DELTAS


def _check_cellset(cells, m, name):
    for i in cells:
        if not 0 <= int(i) < m:
            raise InvalidParameterError(f"{name} contains {i}, not a cell index")


def _bfs(region, passable, sources, targets):
    # endpoints count: sources are filtered to passable cells, and targets
    # are only ever tested on cells already admitted to the search
    targets = set(int(i) for i in targets)
    todo = [int(i) for i in sources if passable[i]]
    seen = bytearray(region.m)
    for i in todo:
        seen[i] = 1
    adjacency = region.adjacency
    while todo:
        i = todo.pop()
        if i in targets:
            return True
        for j in adjacency[i]:
            if passable[j] and not seen[j]:
                seen[j] = 1
                todo.append(j)
    return False


def _fluid_passable(c, k, region):
    if k not in (1, 2, 3):
        raise InvalidParameterError(f"fluid must be 1, 2 or 3, got {k!r}")
    if c.m != region.m:
        raise InvalidParameterError("coloring and region sizes differ")
    colors = c.colors
    return (colors == 0) | (colors == k)


def percolates_between(c, k, A, B, region):
    """True iff fluid k joins A to B through cells colored 0 or k."""
    passable = _fluid_passable(c, k, region)
    _check_cellset(A, region.m, "A")
    _check_cellset(B, region.m, "B")
    if not A or not B:
        return False
    return _bfs(region, passable, A, B)


def percolates_from(c, k, start, A, region):
    """True iff fluid k flows from `start` to A; start's color is ignored."""
    passable = _fluid_passable(c, k, region)
    if not 0 <= int(start) < region.m:
        raise InvalidParameterError(f"start cell {start} outside the region")
    _check_cellset(A, region.m, "A")
    start = int(start)
    if start in set(int(i) for i in A):
        return True
    return _bfs(region, passable, region.adjacency[start], A)


def _spin_passable(s, region):
    if s.m != region.m:
        raise InvalidParameterError("spin coloring and region sizes differ")
    return s.minus_mask_array() == 0


def spin_percolates_between(s, A, B, region):
    """True iff a chain of +1 cells joins A to B, endpoints included."""
    passable = _spin_passable(s, region)
    _check_cellset(A, region.m, "A")
    _check_cellset(B, region.m, "B")
    if not A or not B:
        return False
    return _bfs(region, passable, A, B)


def spin_percolates_from(s, start, A, region):
    """True iff +1 cells chain from a neighbor of `start` to A."""
    passable = _spin_passable(s, region)
    if not 0 <= int(start) < region.m:
        raise InvalidParameterError(f"start cell {start} outside the region")
    _check_cellset(A, region.m, "A")
    start = int(start)
    if start in set(int(i) for i in A):
        return True
    return _bfs(region, passable, region.adjacency[start], A)


@dataclass(frozen=True)
class Wall:
    """Interface between passable and blocked cells.

    segments: ordered tuple of ((q, r) passable cell, (q, r) blocked cell)
    closed:   True when the segments enclose an area, False when the walk
              stopped between two boundary cells.
    """
    segments: tuple
    closed: bool

    def __len__(self):
        return len(self.segments)


def _walk_wall(region, passable, p, i):
    """Trace the wall from state (cell p, blocked neighbor direction i).

    The candidate cell t across the forward endpoint of the current
    segment decides each step: t absent stops the wall at the region
    edge, blocked t pivots the segment around p, passable t advances to
    t using the delta identity d[i-1] + d[i+1] = d[i].
    """
    qs, rs = region.qs, region.rs
    start = (p, i)
    segments = []
    seen = set()
    while True:
        state = (p, i)
        if state in seen:
            raise InternalInvariantError(
                "wall walk revisited a segment other than its start")
        seen.add(state)
        dq, dr = NEIGHBOR_DELTAS[i]
        segments.append(((int(qs[p]), int(rs[p])),
                         (int(qs[p]) + dq, int(rs[p]) + dr)))
        if len(segments) > 6 * region.m:
            raise InternalInvariantError("wall walk failed to terminate")
        fq, fr = NEIGHBOR_DELTAS[(i + 1) % 6]
        t = region.index_of(int(qs[p]) + fq, int(rs[p]) + fr)
        if t < 0:
            return tuple(segments), False
        if passable[t]:
            p, i = t, (i - 1) % 6
        else:
            i = (i + 1) % 6
        if (p, i) == start:
            return tuple(segments), True


def build_wall(c, start_edge, region):
    """The unique wall through `start_edge`, walked left-first.

    start_edge is ((q, r) of a cell colored 0 or 1, (q, r) of the cell
    directly below it colored 2 or 3), the situation produced by a
    blocked downward move.
    """
    if c.m != region.m:
        raise InvalidParameterError("coloring and region sizes differ")
    try:
        (pq, pr), (bq, br) = start_edge
    except (TypeError, ValueError):
        raise InvalidParameterError(f"bad start edge: {start_edge!r}") from None
    p = region.index_of(int(pq), int(pr))
    b = region.index_of(int(bq), int(br))
    if p < 0 or b < 0:
        raise InvalidParameterError("start edge cells must lie in the region")
    if (int(bq) - int(pq), int(br) - int(pr)) != NEIGHBOR_DELTAS[DIR_S]:
        raise InvalidParameterError(
            "start edge must be the bottom side of its first cell")
    colors = c.colors
    if colors[p] > 1:
        raise InvalidParameterError("first start-edge cell must be colored 0 or 1")
    if colors[b] <= 1:
        raise InvalidParameterError("cell below the start edge must be colored 2 or 3")
    segments, closed = _walk_wall(region, colors <= 1, p, DIR_S)
    return Wall(segments, closed)


def _ray_crossings(wall):
    # the downward ray from the center meets exactly the horizontal edges
    # of the q = 0 column that lie below the center cell's midline
    return [seg for seg in wall.segments
            if seg[0][0] == 0 and seg[1][0] == 0
            and max(seg[0][1], seg[1][1]) <= 0]


def ray_parity(w, region):
    """Crossing count mod 2 of the downward center ray with a closed wall."""
    if not w.closed:
        raise InvalidParameterError("ray parity is defined for closed walls only")
    for (pq, pr), _ in w.segments:
        if region.index_of(pq, pr) < 0:
            raise InvalidParameterError("wall does not belong to this region")
    return len(_ray_crossings(w)) % 2


def beetle_check(c, region, trace=None):
    """Does fluid 1 reach the boundary from the center?

    Walks down through cells colored 0 or 1; a blocked move builds the
    wall below the beetle.  An open wall ends between two boundary
    cells, so the beetle can follow it out.  A closed wall either traps
    the beetle (odd ray parity) or is bypassed by moving to the cell
    below its lowest ray crossing.  The center's own color never
    matters, so it is treated as 0.  `trace`, when given, is a list
    collecting one line per step.
    """
    if c.m != region.m:
        raise InvalidParameterError("coloring and region sizes differ")
    colors = c.colors.copy()
    colors[region.center_index] = 0
    passable = colors <= 1
    log = trace.append if trace is not None else (lambda line: None)
    qs, rs = region.qs, region.rs
    beetle = region.center_index
    for _ in range(region.m + 2):
        log(f"beetle at ({qs[beetle]}, {rs[beetle]})")
        if region.boundary_mask[beetle]:
            log("END1: percolation from the center to the boundary")
            return True
        below = region.below[beetle]
        if passable[below]:
            log("moves down")
            beetle = below
            continue
        segments, closed = _walk_wall(region, passable, beetle, DIR_S)
        wall = Wall(segments, closed)
        log(f"wall below: {len(wall)} segments, "
            + ("closed" if closed else "open, ends between boundary cells"))
        if not closed:
            log("END1: percolation from the center to the boundary")
            return True
        crossings = _ray_crossings(wall)
        log(f"ray crossings: {len(crossings)}")
        if len(crossings) % 2 == 1:
            log("END2: no percolation from the center to the boundary")
            return False
        dest_r = min(min(pr, br) for (_, pr), (_, br) in crossings)
        dest = region.index_of(0, dest_r)
        # the bypass cell is provably passable and inside the region; a
        # failure here is a bug report, never a property of a coloring
        if dest < 0 or not passable[dest]:
            raise InternalInvariantError(
                f"bypass destination (0, {dest_r}) is not a passable region cell")
        log(f"bypasses the wall to (0, {dest_r})")
        beetle = dest
    raise InternalInvariantError("beetle failed to terminate")
