"""Compiled inner loops: trial sampling, mask searches, tally scans.

Randomness is a keyed counter construction so that trial i of a run is
a pure function of (key, i) and any slicing of the trial range across
workers reproduces the same tallies.  The key comes from the caller
(derived off the master seed); per-trial and per-block values are
splitmix64 outputs, mix(seed + index * golden), the standard 64-bit
finalizer chain.  Each 64-bit draw yields 32 two-bit colors or 64 spin
bits.

Graph work comes in two shapes: stamp-marked breadth-first search over
CSR adjacency for sampled trials at any n, and bitmask reachability
(the whole region packed in one integer) for the exhaustive scans at
small m.
"""
import numpy as np
from numba import njit, prange

U64 = np.uint64
_GOLDEN = U64(0x9E3779B97F4A7C15)
_MIX1 = U64(0xBF58476D1CE4E5B9)
_MIX2 = U64(0x94D049BB133111EB)


@njit(cache=True, nogil=True)
def _mix64(z):
    z = (z ^ (z >> U64(30))) * _MIX1
    z = (z ^ (z >> U64(27))) * _MIX2
    return z ^ (z >> U64(31))


@njit(cache=True, nogil=True)
def _trial_seed(key, trial):
    return _mix64(key + (U64(trial) + U64(1)) * _GOLDEN)


@njit(cache=True, nogil=True)
def _fill_colors(seed, colors):
    # 32 two-bit colors per 64-bit word
    m = colors.size
    w = U64(0)
    have = 0
    cur = U64(0)
    for c in range(m):
        if have == 0:
            w += U64(1)
            cur = _mix64(seed + w * _GOLDEN)
            have = 32
        colors[c] = np.uint8(cur & U64(3))
        cur >>= U64(2)
        have -= 1


@njit(cache=True, nogil=True)
def _fill_spins(seed, minus):
    # one bit per cell, set = spin -1
    m = minus.size
    w = U64(0)
    have = 0
    cur = U64(0)
    for c in range(m):
        if have == 0:
            w += U64(1)
            cur = _mix64(seed + w * _GOLDEN)
            have = 64
        minus[c] = np.uint8(cur & U64(1))
        cur >>= U64(1)
        have -= 1


@njit(cache=True, nogil=True)
def _bfs_colors(colors, k, sources, target_mask, nbr_start, nbr_flat,
                visited, stack, stamp):
    # stamp-marked search through cells colored 0 or k
    top = 0
    for s in sources:
        col = colors[s]
        if (col == 0 or col == k) and visited[s] != stamp:
            visited[s] = stamp
            stack[top] = s
            top += 1
    while top > 0:
        top -= 1
        i = stack[top]
        if target_mask[i]:
            return True
        for e in range(nbr_start[i], nbr_start[i + 1]):
            j = nbr_flat[e]
            col = colors[j]
            if (col == 0 or col == k) and visited[j] != stamp:
                visited[j] = stamp
                stack[top] = j
                top += 1
    return False


@njit(cache=True, nogil=True)
def center_trials(key, lo, hi, m, nbr_start, nbr_flat, center_nbrs,
                  boundary_mask):
    """Tallies (T1, T2, T3) of nested center percolations over [lo, hi)."""
    t1 = 0
    t2 = 0
    t3 = 0
    colors = np.empty(m, np.uint8)
    visited = np.zeros(m, np.int64)
    stack = np.empty(m, np.int64)
    stamp = 0
    for trial in range(lo, hi):
        _fill_colors(_trial_seed(key, trial), colors)
        stamp += 1
        if not _bfs_colors(colors, 1, center_nbrs, boundary_mask,
                           nbr_start, nbr_flat, visited, stack, stamp):
            continue
        t1 += 1
        stamp += 1
        if not _bfs_colors(colors, 2, center_nbrs, boundary_mask,
                           nbr_start, nbr_flat, visited, stack, stamp):
            continue
        t2 += 1
        stamp += 1
        if _bfs_colors(colors, 3, center_nbrs, boundary_mask,
                       nbr_start, nbr_flat, visited, stack, stamp):
            t3 += 1
    return t1, t2, t3


@njit(cache=True, nogil=True)
def sides_trials(key, lo, hi, m, nbr_start, nbr_flat,
                 src1, src2, src3, tgt1, tgt2, tgt3):
    """All seven side-event tallies (1, 2, 3, 12, 13, 23, 123)."""
    s1 = 0
    s2 = 0
    s3 = 0
    s12 = 0
    s13 = 0
    s23 = 0
    s123 = 0
    colors = np.empty(m, np.uint8)
    visited = np.zeros(m, np.int64)
    stack = np.empty(m, np.int64)
    stamp = 0
    for trial in range(lo, hi):
        _fill_colors(_trial_seed(key, trial), colors)
        stamp += 1
        e1 = _bfs_colors(colors, 1, src1, tgt1, nbr_start, nbr_flat,
                         visited, stack, stamp)
        stamp += 1
        e2 = _bfs_colors(colors, 2, src2, tgt2, nbr_start, nbr_flat,
                         visited, stack, stamp)
        stamp += 1
        e3 = _bfs_colors(colors, 3, src3, tgt3, nbr_start, nbr_flat,
                         visited, stack, stamp)
        if e1:
            s1 += 1
        if e2:
            s2 += 1
        if e3:
            s3 += 1
        if e1 and e2:
            s12 += 1
        if e1 and e3:
            s13 += 1
        if e2 and e3:
            s23 += 1
        if e1 and e2 and e3:
            s123 += 1
    return s1, s2, s3, s12, s13, s23, s123


@njit(cache=True, nogil=True)
def one_arm_trials(key, lo, hi, m, nbr_start, nbr_flat, center_nbrs,
                   boundary_mask):
    """Tally of +1-spin chains from a center neighbor to the boundary."""
    t1 = 0
    minus = np.empty(m, np.uint8)
    visited = np.zeros(m, np.int64)
    stack = np.empty(m, np.int64)
    stamp = 0
    for trial in range(lo, hi):
        _fill_spins(_trial_seed(key, trial), minus)
        stamp += 1
        # spin +1 is passable; reuse the color search with fluid 0
        if _bfs_colors(minus, 0, center_nbrs, boundary_mask,
                       nbr_start, nbr_flat, visited, stack, stamp):
            t1 += 1
    return t1


@njit(cache=True, nogil=True)
def _beetle_closed_walk(passable, qs, rs, grid, span, p, seen, mark):
    """Wall walk from the blocked bottom edge of cell p.

    Returns (closed, parity, dest_r): parity of downward-ray crossings
    and the r of the cell under the lowest crossing.  States are
    (cell, blocked direction); the candidate cell over the forward
    endpoint decides each step.  seen/mark implement a stamp set.
    """
    deltas_q = (0, 1, 1, 0, -1, -1)
    deltas_r = (1, 0, -1, -1, 0, 1)
    start_p = p
    i = 3
    crossings = 0
    dest_r = np.int64(2) * span
    while True:
        if seen[p * 6 + i] == mark:
            # revisit of a non-start state: walk is not a simple cycle
            return -1, 0, np.int64(0)
        seen[p * 6 + i] = mark
        pq = qs[p]
        pr = rs[p]
        bq = pq + deltas_q[i]
        br = pr + deltas_r[i]
        if pq == 0 and bq == 0 and (pr if pr > br else br) <= 0:
            crossings += 1
            low = br if br < pr else pr
            if low < dest_r:
                dest_r = low
        fi = (i + 1) % 6
        fq = pq + deltas_q[fi]
        fr = pr + deltas_r[fi]
        t = np.int64(-1)
        if -span <= fq <= span and -span <= fr <= span:
            t = grid[(fq + span) * (2 * span + 1) + (fr + span)]
        if t < 0:
            return 0, 0, np.int64(0)
        if passable[t]:
            p = t
            i = (i - 1) % 6
        else:
            i = fi
        if p == start_p and i == 3:
            return 1, crossings % 2, dest_r


@njit(cache=True, nogil=True)
def _beetle_reaches(passable, qs, rs, grid, span, below, boundary_mask,
                    center, seen, mark_base):
    """The walk-down / wall / ray-parity percolation check for fluid 1."""
    beetle = center
    walls = 0
    for _ in range(passable.size + 2):
        if boundary_mask[beetle]:
            return 1
        nxt = below[beetle]
        if passable[nxt]:
            beetle = nxt
            continue
        walls += 1
        closed, parity, dest_r = _beetle_closed_walk(
            passable, qs, rs, grid, span, beetle, seen, mark_base + walls)
        if closed < 0:
            return -1
        if closed == 0:
            return 1
        if parity == 1:
            return 0
        dest = grid[span * (2 * span + 1) + (dest_r + span)]
        if dest < 0 or not passable[dest]:
            return -1
        beetle = dest
    return -1


@njit(cache=True, nogil=True)
def beetle_center_trials(key, lo, hi, m, nbr_start, nbr_flat, center_nbrs,
                         boundary_mask, qs, rs, grid, span, below, center):
    """center_trials with the fluid-1 leg decided by the wall algorithm.

    Returns (T1, T2, T3, invariant_failures); a nonzero failure count
    means the walk hit an impossible state and the caller must raise.
    """
    t1 = 0
    t2 = 0
    t3 = 0
    bad = 0
    colors = np.empty(m, np.uint8)
    passable = np.empty(m, np.bool_)
    visited = np.zeros(m, np.int64)
    stack = np.empty(m, np.int64)
    seen = np.zeros(m * 6, np.int64)
    stamp = 0
    for trial in range(lo, hi):
        _fill_colors(_trial_seed(key, trial), colors)
        for c in range(m):
            passable[c] = colors[c] <= 1
        passable[center] = True
        res = _beetle_reaches(passable, qs, rs, grid, span, below,
                              boundary_mask, center, seen,
                              (trial - lo) * (m + 2))
        if res < 0:
            bad += 1
            continue
        if res == 0:
            continue
        t1 += 1
        stamp += 1
        if not _bfs_colors(colors, 2, center_nbrs, boundary_mask,
                           nbr_start, nbr_flat, visited, stack, stamp):
            continue
        t2 += 1
        stamp += 1
        if _bfs_colors(colors, 3, center_nbrs, boundary_mask,
                       nbr_start, nbr_flat, visited, stack, stamp):
            t3 += 1
    return t1, t2, t3, bad


@njit(cache=True, nogil=True)
def _mask_reaches(nbr_masks, frontier, target_mask, passable, m):
    # whole-region reachability on one integer per state set
    reach = frontier
    while frontier != 0:
        if frontier & target_mask:
            return True
        grow = np.int64(0)
        for c in range(m):
            if frontier & (np.int64(1) << c):
                grow |= nbr_masks[c]
        frontier = grow & passable & ~reach
        reach |= frontier
    return False


@njit(cache=True, nogil=True, parallel=True)
def spin_event_table(m, nbr_masks, source_mask, target_mask):
    """Truth table of a spin connectivity event over all 2^m sign vectors.

    Table index bit c set means cell c carries spin -1 (blocked).
    """
    size = np.int64(1) << m
    out = np.empty(size, np.uint8)
    full = size - 1
    for b in prange(size):
        passable = ~b & full
        hit = _mask_reaches(nbr_masks, source_mask & passable, target_mask,
                            passable, m)
        out[b] = 1 if hit else 0
    return out


@njit(cache=True, nogil=True, parallel=True)
def color_event_tallies(m, nbr_masks, src1, src2, src3, tgt1, tgt2, tgt3):
    """Joint tallies of the three fluid events over all 4^m colorings."""
    s1 = 0
    s2 = 0
    s3 = 0
    s12 = 0
    s13 = 0
    s23 = 0
    s123 = 0
    total = np.int64(1) << (2 * m)
    for code in prange(total):
        p1 = np.int64(0)
        p2 = np.int64(0)
        p3 = np.int64(0)
        for c in range(m):
            col = (code >> (2 * c)) & 3
            bit = np.int64(1) << c
            if col == 0:
                p1 |= bit
                p2 |= bit
                p3 |= bit
            elif col == 1:
                p1 |= bit
            elif col == 2:
                p2 |= bit
            else:
                p3 |= bit
        e1 = _mask_reaches(nbr_masks, src1 & p1, tgt1, p1, m)
        e2 = _mask_reaches(nbr_masks, src2 & p2, tgt2, p2, m)
        e3 = _mask_reaches(nbr_masks, src3 & p3, tgt3, p3, m)
        if e1:
            s1 += 1
        if e2:
            s2 += 1
        if e3:
            s3 += 1
        if e1 and e2:
            s12 += 1
        if e1 and e3:
            s13 += 1
        if e2 and e3:
            s23 += 1
        if e1 and e2 and e3:
            s123 += 1
    return s1, s2, s3, s12, s13, s23, s123
