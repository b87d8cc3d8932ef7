"""Axis-aligned bounding boxes with optional (infinite) bounds.

A missing bound (None) means minus infinity on the lower side and plus
infinity on the upper side. Boxes justify search pruning: no point inside a
box can be closer to a query than the box's closest edge point.
"""

from dataclasses import dataclass
from typing import Optional, Sequence

from .metrics import DataPoint

Bound = Optional[int]


@dataclass(frozen=True)
class BoundingBox:
    mins: tuple[Bound, ...]
    maxs: tuple[Bound, ...]

    def __post_init__(self):
        if len(self.mins) != len(self.maxs):
            raise ValueError("mins and maxs must have equal length")

    @property
    def dims(self) -> int:
        return len(self.mins)


def unbounded_box(k: int) -> BoundingBox:
    """The box with no constraints in any of the k dimensions."""
    if k <= 0:
        raise ValueError("dimensionality must be positive")
    return BoundingBox((None,) * k, (None,) * k)


def bb_contains(bb: BoundingBox, p: Sequence[int]) -> bool:
    """Inclusive containment: mins[i] <= p[i] <= maxs[i] where bounds exist."""
    if len(p) != bb.dims:
        raise ValueError(f"dimension mismatch: {len(p)} vs {bb.dims}")
    return all(
        (lo is None or lo <= c) and (hi is None or c <= hi)
        for c, lo, hi in zip(p, bb.mins, bb.maxs)
    )


def bb_split(bb: BoundingBox, axis: int, v: int) -> tuple[BoundingBox, BoundingBox]:
    """Split a box at value v along an axis into (lower, upper) halves.

    The splitting plane itself belongs to both halves.
    """
    if axis >= bb.dims:
        raise IndexError(f"axis {axis} out of range for {bb.dims}-d box")
    maxs = bb.maxs[:axis] + (v,) + bb.maxs[axis + 1:]
    mins = bb.mins[:axis] + (v,) + bb.mins[axis + 1:]
    return BoundingBox(bb.mins, maxs), BoundingBox(mins, bb.maxs)


def closest_edge_point(q: Sequence[int], bb: BoundingBox) -> DataPoint:
    """The point inside bb minimizing the Manhattan distance to q.

    Per coordinate this is the median of (q[i], mins[i], maxs[i]), i.e. q
    clamped into the box; if q is inside the box the result is q itself.
    """
    if len(q) != bb.dims:
        raise ValueError(f"dimension mismatch: {len(q)} vs {bb.dims}")
    out = []
    for c, lo, hi in zip(q, bb.mins, bb.maxs):
        if lo is not None and c < lo:
            c = lo
        if hi is not None and c > hi:
            c = hi
        out.append(c)
    return tuple(out)
