"""Colorings of a region and the 4-color/2x2-spin correspondence.

A PottsColoring assigns each cell one of four colors, sampled i.i.d.
uniform (infinite temperature).  Every 4-coloring corresponds to a pair
of +-1 spin colorings, one per fluid 1 and 2, via

    color 0 -> (+1, +1, +1)      color 1 -> (+1, -1, -1)
    color 2 -> (-1, +1, -1)      color 3 -> (-1, -1, +1)

where the third spin coloring is the elementwise product of the first
two.  Spin +1 in coloring k marks exactly the cells with color 0 or k,
i.e. the cells passable to fluid k, and the pair map is a bijection, so
it carries the uniform measure on 4-colorings to the product of uniform
measures on the two spin colorings.

Colorings are plain values; generators are never shared between trials.
"""
import numpy as np

from .errors import CapacityError, InvalidParameterError

ENUMERATION_CAP = 12


class PottsColoring:
    """A cell -> {0,1,2,3} assignment, one value per region cell index."""

    __slots__ = ("colors",)

    def __init__(self, colors):
        colors = np.asarray(colors, np.uint8)
        if colors.ndim != 1:
            raise InvalidParameterError("colors must be a flat array")
        if colors.size and colors.max() > 3:
            raise InvalidParameterError("colors must lie in {0,1,2,3}")
        self.colors = colors

    @property
    def m(self):
        return self.colors.size

    def to_line(self):
        """Snapshot: one line of m digits in cell-index order."""
        return "".join(str(int(v)) for v in self.colors)

    @classmethod
    def from_line(cls, line):
        text = line.strip()
        if not text or any(ch not in "0123" for ch in text):
            raise InvalidParameterError(f"bad coloring snapshot: {line!r}")
        return cls(np.frombuffer(text.encode(), np.uint8) - ord("0"))

    def __eq__(self, other):
        return (isinstance(other, PottsColoring)
                and np.array_equal(self.colors, other.colors))

    def __repr__(self):
        return f"PottsColoring({self.to_line()})"


class SpinColoring:
    """A cell -> {-1,+1} assignment, stored as a bitmask.

    Bit i of ``bits`` is set exactly when cell i carries spin -1, so the
    all-zero mask is the all-(+1) coloring.
    """

    __slots__ = ("m", "bits")

    def __init__(self, m, bits):
        if bits < 0 or bits >> m:
            raise InvalidParameterError("bits outside the m-cell mask")
        self.m = m
        self.bits = bits

    def spin(self, i):
        return -1 if (self.bits >> i) & 1 else +1

    def to_spin_array(self):
        return np.array([self.spin(i) for i in range(self.m)], np.int8)

    def minus_mask_array(self):
        """uint8 array with 1 where the spin is -1."""
        return np.array([(self.bits >> i) & 1 for i in range(self.m)],
                        np.uint8)

    @classmethod
    def from_spin_array(cls, spins):
        spins = np.asarray(spins)
        bits = 0
        for i, s in enumerate(spins):
            if s == -1:
                bits |= 1 << i
            elif s != 1:
                raise InvalidParameterError("spins must be -1 or +1")
        return cls(spins.size, bits)

    def product(self, other):
        """Elementwise spin product; -1 * -1 = +1 is XOR on the masks."""
        if self.m != other.m:
            raise InvalidParameterError("spin coloring lengths differ")
        return SpinColoring(self.m, self.bits ^ other.bits)

    def __eq__(self, other):
        return (isinstance(other, SpinColoring)
                and self.m == other.m and self.bits == other.bits)

    def __repr__(self):
        return f"SpinColoring(m={self.m}, bits={self.bits:#x})"


def _mask_from_bool(flags):
    packed = np.packbits(flags.astype(np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def random_potts(region, rng):
    """One uniform coloring; fully determined by the generator state."""
    return PottsColoring(rng.integers(0, 4, region.m, dtype=np.uint8))


def split_coloring(c):
    """The two spin colorings of a 4-coloring, plus their product."""
    colors = c.colors
    s1 = SpinColoring(c.m, _mask_from_bool(colors >= 2))
    s2 = SpinColoring(c.m, _mask_from_bool((colors & 1) == 1))
    return s1, s2, s1.product(s2)


def merge_colorings(s1, s2):
    """Inverse of split_coloring restricted to its first two outputs."""
    if s1.m != s2.m:
        raise InvalidParameterError("spin coloring lengths differ")
    colors = 2 * s1.minus_mask_array() + s2.minus_mask_array()
    return PottsColoring(colors)


def enumerate_potts(region):
    """Yield all 4^m colorings, base-4 odometer, cell 0 least significant."""
    m = region.m
    if m > ENUMERATION_CAP:
        raise CapacityError(
            f"exhaustive 4-color enumeration is capped at m = "
            f"{ENUMERATION_CAP} cells; region has m = {m}")
    shifts = 2 * np.arange(m, dtype=np.uint64)
    for code in range(4 ** m):
        yield PottsColoring((code >> shifts) & 3)
