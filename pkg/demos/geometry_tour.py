"""
Tour of the hexagonal region builder
====================================

Cell counts, the boundary ring, side membership, and the sixfold
symmetry of the region a step-1/n honeycomb cuts out of a regular
hexagon.
"""
import json

from hexpotts.hexlattice import (build_region, region_to_json, rotate60,
                                 rotation_permutation)

# cell count grows roughly like the hexagon area over the cell area
for n in (2, 3, 4, 5, 10, 25):
    region = build_region(n)
    print(f"n = {n:3d}: m = {region.m:5d} cells, "
          f"{len(region.boundary)} on the boundary")

region = build_region(5)
print()
print("n = 5 center cell:", region.cells[region.center_index])

# each of the six sides owns a run of boundary cells; corner cells sit
# at a distance tie and belong to two sides at once
for side in range(1, 7):
    members = sorted(region.side_members[side])
    print(f"side {side}: cells {members}")

shared = [i for i in range(region.m)
          if sum(i in region.side_members[s] for s in range(1, 7)) == 2]
print("corner cells on two sides:", shared)

# quarter-turn of the hexagon: rotating a cell by 60 degrees sends side
# j to side j+1 (wrapping), and the permutation has order 6
perm = rotation_permutation(region)
i = min(region.side_members[1])
print()
print(f"cell {region.cells[i]} on side 1 maps to cell "
      f"{region.cells[perm[i]]} on side 2")

cell = region.cells[i]
q, r = cell.q, cell.r
for step in range(6):
    q, r = rotate60(q, r)
print("six rotations come home:", (q, r) == (cell.q, cell.r))

# machine-readable description, e.g. for an external plotting script
small = build_region(3)
blob = json.loads(region_to_json(small))
print()
print("n = 3 as json:", sorted(blob))
print("neighbors of the center:",
      sorted(small.adjacency[small.center_index]))
