"""Median-split k-d tree construction, structural predicates, and the .kdt
serialized form.

Each node stores a data point and the axis its subtrees are split along;
axes cycle with depth. Subtrees hold the quickselect partitions around the
median, so points equal to the node on the split key may land on either
side and search must never assume strict partitioning.
"""

import json
from dataclasses import dataclass
from typing import Optional, Sequence

from .bbox import BoundingBox, bb_contains, bb_split
from .metrics import DataPoint, as_point, ith_comparator
from .quickselect import median_partition


@dataclass(frozen=True)
class Node:
    axis: int
    point: DataPoint
    left: "KdTree"
    right: "KdTree"


# None is the empty tree.
KdTree = Optional[Node]


def next_depth(k: int, d: int) -> int:
    """Advance the split dimension: (d+1) mod k."""
    return (d + 1) % k


def build_kdtree(k: int, data: Sequence[Sequence[int]]) -> KdTree:
    """Build a k-d tree by recursive median partitioning.

    The root splits on dimension 0 at the rank-floor(n/2) point; children
    split on successive dimensions mod k. Duplicates are retained.
    """
    if k <= 0:
        raise ValueError("dimensionality must be positive")
    points = [as_point(p, k) for p in data]
    return _build(k, points, 0)


def _build(k: int, data: list, depth_mod: int) -> KdTree:
    if not data:
        return None
    res = median_partition(data, ith_comparator(depth_mod))
    d = next_depth(k, depth_mod)
    return Node(depth_mod, res.pivot, _build(k, res.before, d), _build(k, res.after, d))


def contents(tree: KdTree) -> list[DataPoint]:
    """All stored points, in root-left-right order."""
    if tree is None:
        return []
    return [tree.point] + contents(tree.left) + contents(tree.right)


def tree_size(tree: KdTree) -> int:
    return 0 if tree is None else 1 + tree_size(tree.left) + tree_size(tree.right)


def kdtree_bounded(tree: KdTree, bb: BoundingBox) -> bool:
    """Check that a tree respects a box, recursively splitting at each node."""
    if tree is None:
        return True
    lo, hi = bb_split(bb, tree.axis, tree.point[tree.axis])
    return (
        bb_contains(bb, tree.point)
        and kdtree_bounded(tree.left, lo)
        and kdtree_bounded(tree.right, hi)
    )


# --- .kdt serialization ------------------------------------------------
#
# A .kdt document is a single JSON object with fixed key order:
#   {"format": "kdt", "dims": k, "count": n, "tree": <node>}
# where <node> is null for an empty tree or
#   {"axis": a, "point": [c0, ...], "left": <node>, "right": <node>}.
# Compact separators and the fixed key order make serialization
# byte-deterministic for a given tree.

def _node_to_obj(tree: KdTree):
    if tree is None:
        return None
    return {
        "axis": tree.axis,
        "point": list(tree.point),
        "left": _node_to_obj(tree.left),
        "right": _node_to_obj(tree.right),
    }


def _node_from_obj(obj, dims: int) -> KdTree:
    if obj is None:
        return None
    try:
        axis = obj["axis"]
        point = as_point(obj["point"], dims)
        left = _node_from_obj(obj["left"], dims)
        right = _node_from_obj(obj["right"], dims)
    except (TypeError, KeyError) as e:
        raise ValueError(f"corrupt tree document: {e}") from e
    if not isinstance(axis, int) or not 0 <= axis < dims:
        raise ValueError(f"corrupt tree document: bad axis {axis!r}")
    return Node(axis, point, left, right)


def dump_tree(tree: KdTree, dims: int) -> str:
    """Serialize a tree to the .kdt text format (byte-deterministic)."""
    doc = {
        "format": "kdt",
        "dims": dims,
        "count": tree_size(tree),
        "tree": _node_to_obj(tree),
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"


def load_tree(text: str) -> tuple[int, KdTree]:
    """Parse a .kdt document, returning (dims, tree)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"corrupt tree document: {e}") from e
    if not isinstance(doc, dict) or doc.get("format") != "kdt":
        raise ValueError("not a .kdt document")
    dims = doc.get("dims")
    if not isinstance(dims, int) or dims <= 0:
        raise ValueError(f"corrupt tree document: bad dims {dims!r}")
    tree = _node_from_obj(doc.get("tree"), dims)
    if tree_size(tree) != doc.get("count"):
        raise ValueError("corrupt tree document: count does not match tree")
    return dims, tree
