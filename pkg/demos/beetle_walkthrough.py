"""
Walking the beetle
==================

The beetle decides center-to-boundary percolation for fluid 1 without
any graph search: it drops straight down from the center, and when a
blocked cell stops it, it walks the wall of that obstacle.  A closed
wall whose downward ray crossings have odd parity encircles the
beetle; anything else lets it slip past and resume the descent.

Three hand-built colorings on the n=7 region show the moves.
"""
import numpy as np

from hexpotts.hexlattice import build_region
from hexpotts.percolation import beetle_check, percolates_from
from hexpotts.potts import PottsColoring

region = build_region(7)


def coloring(blocked):
    colors = np.zeros(region.m, np.uint8)
    for q, r in blocked:
        colors[region.index_of(q, r)] = 2   # color 2 blocks fluid 1
    return PottsColoring(colors)


def show(title, blocked):
    print(title)
    lines = []
    verdict = beetle_check(coloring(blocked), region, trace=lines)
    for line in lines:
        print("   ", line)
    reference = percolates_from(coloring(blocked), 1, region.center_index,
                                region.boundary, region)
    assert verdict == reference
    print()


# nothing in the way: the beetle marches straight to the rim
show("clear column below the center", [])

# a one-cell ridge with open ends; the wall is walked, found open, and
# bypassed along the spot where it ends between boundary cells
show("open ridge under the center",
     [(0, -1), (0, -2), (0, -3)])

# the whole first ring is blocked: the wall closes around the beetle
# and the downward ray pierces it an odd number of times, so the
# center is sealed in
show("blocked ring around the center",
     [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)])

# a short bar: closed wall, but the ray crosses it twice (even), so
# the beetle pops out underneath and keeps going
show("short bar below the center",
     [(-1, -1), (0, -1), (1, -1)])
