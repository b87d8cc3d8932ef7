"""Data points, per-dimension comparators, and the Manhattan distance."""

from collections.abc import Sequence

# Points are fixed-length tuples of non-negative integers.
DataPoint = tuple[int, ...]


def as_point(coords: Sequence[int], dims: int | None = None) -> DataPoint:
    """Validate and normalize a coordinate sequence into a DataPoint.

    Coordinates must be non-negative integers; if ``dims`` is given the
    length must match it exactly.
    """
    pt = tuple(coords)
    for c in pt:
        if not isinstance(c, int) or isinstance(c, bool) or c < 0:
            raise ValueError(f"coordinates must be non-negative integers, got {c!r}")
    if dims is not None and len(pt) != dims:
        raise ValueError(f"expected {dims} coordinates, got {len(pt)}")
    return pt


def sum_dist(q: Sequence[int], p: Sequence[int]) -> int:
    """Manhattan distance between two points of equal dimensionality."""
    if len(q) != len(p):
        raise ValueError(f"dimension mismatch: {len(q)} vs {len(p)}")
    return sum(abs(a - b) for a, b in zip(q, p))


def ith_leb(i: int, p: Sequence[int], q: Sequence[int]) -> bool:
    """Compare two points on their i-th coordinate: p[i] <= q[i]."""
    if i >= len(p) or i >= len(q):
        raise IndexError(f"dimension index {i} out of range")
    return p[i] <= q[i]


def ith_comparator(i: int):
    """Curried form of ith_leb; a total, transitive comparator on points."""
    def le(p: Sequence[int], q: Sequence[int]) -> bool:
        return ith_leb(i, p, q)
    return le
