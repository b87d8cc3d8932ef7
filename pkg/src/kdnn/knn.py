"""Branch-and-bound K-nearest-neighbor search over a k-d tree.

A subtree is skipped only when the candidate queue is full and its current
worst candidate is strictly closer to the query than any point the
subtree's bounding box could contain (the box's closest edge point).
"""

from typing import Optional, Sequence

from .bbox import BoundingBox, bb_split, closest_edge_point, unbounded_box
from .kdtree import KdTree
from .metrics import DataPoint, as_point, ith_leb, sum_dist
from .priqueue import BoundedMaxQueue


def knn(
    K: int,
    k: int,
    tree: KdTree,
    bb: BoundingBox,
    query: DataPoint,
    pq: BoundedMaxQueue,
) -> BoundedMaxQueue:
    """Accumulate the K nearest points of tree into pq (keyed by distance
    to query). Requires kdtree_bounded(tree, bb) and size(pq) <= K."""
    result, _ = _knn(K, k, tree, bb, query, pq)
    return result


def _knn(K, k, tree, bb, query, pq) -> tuple[BoundedMaxQueue, int]:
    if tree is None:
        return pq, 0
    top = pq.peek_max()
    if (
        top is not None
        and K <= pq.size()
        and sum_dist(query, top) < sum_dist(query, closest_edge_point(query, bb))
    ):
        return pq, 0  # prune: nothing in bb can improve a full queue
    pq.insert_bounded(K, tree.point)
    lo, hi = bb_split(bb, tree.axis, tree.point[tree.axis])
    if ith_leb(tree.axis, tree.point, query):
        pq, nl = _knn(K, k, tree.left, lo, query, pq)
        pq, nr = _knn(K, k, tree.right, hi, query, pq)
    else:
        pq, nr = _knn(K, k, tree.right, hi, query, pq)
        pq, nl = _knn(K, k, tree.left, lo, query, pq)
    return pq, 1 + nl + nr


def _check_params(K: int, k: int, query: Sequence[int]) -> DataPoint:
    if K < 1:
        raise ValueError("K must be at least 1")
    if k < 1:
        raise ValueError("dimensionality must be positive")
    return as_point(query, k)


def knn_search(K: int, k: int, tree: KdTree, query: Sequence[int]) -> list[DataPoint]:
    """The min(K, size) points of tree closest to query, ordered by
    non-decreasing Manhattan distance."""
    q = _check_params(K, k, query)
    pq = BoundedMaxQueue(lambda p: sum_dist(q, p))
    knn(K, k, tree, unbounded_box(k), q, pq)
    return pq.to_list()


def nearest_neighbor(k: int, tree: KdTree, query: Sequence[int]) -> Optional[DataPoint]:
    """Single nearest neighbor: knn_search with K=1."""
    result = knn_search(1, k, tree, query)
    return result[0] if result else None


def visit_count(K: int, k: int, tree: KdTree, query: Sequence[int]) -> int:
    """Number of nodes visited (not pruned) by the equivalent knn run."""
    q = _check_params(K, k, query)
    pq = BoundedMaxQueue(lambda p: sum_dist(q, p))
    _, visits = _knn(K, k, tree, unbounded_box(k), q, pq)
    return visits
