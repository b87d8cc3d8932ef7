"""Partitioning k-th-smallest selection (a functional variant of Hoare's FIND).

The pivot is always the head of the list, partition filters preserve input
order, and the pieces are concatenated in a fixed order, so outputs are
deterministic for a given input ordering.
"""

from typing import Callable, NamedTuple, Optional, TypeVar

T = TypeVar("T")
Comparator = Callable[[T, T], bool]


class SelectResult(NamedTuple):
    """The k smallest elements, the k-th smallest itself, and the rest."""
    before: list
    pivot: object
    after: list


def partition_sm_eq_lg(pivot: T, rest: list, le: Comparator) -> tuple[list, list, list]:
    """Split rest into (strictly smaller, equivalent, strictly larger) vs pivot.

    Relative order within each part follows ``rest``. Requires ``le`` to be
    total: an element incomparable both ways would be misplaced.
    """
    sm, eq, lg = [], [], []
    for x in rest:
        if le(x, pivot):
            (eq if le(pivot, x) else sm).append(x)
        else:
            lg.append(x)
    return sm, eq, lg


def quick_select(k: int, l: list, le: Comparator) -> Optional[SelectResult]:
    """Select the k-th smallest element (k=0 is the minimum) of l under le.

    Returns None iff k >= len(l). Otherwise the result satisfies:
    len(before) == k, before ++ [pivot] ++ after is a permutation of l,
    le(x, pivot) for all x in before and le(pivot, x) for all x in after.
    """
    if k >= len(l):
        return None
    # Iterative form of the head-pivot recursion: descending into the small
    # partition prepends the discarded elements to the final after-list,
    # descending into the large partition appends to the final before-list.
    before_acc: list = []
    after_acc: list = []
    while True:
        pivot, rest = l[0], l[1:]
        sm, eq, lg = partition_sm_eq_lg(pivot, rest, le)
        if k < len(sm):
            after_acc = [pivot] + eq + lg + after_acc
            l = sm
        elif len(sm) + len(eq) < k:
            before_acc = sm + [pivot] + eq + before_acc
            k -= len(sm) + len(eq) + 1
            l = lg
        else:
            i = k - len(sm)
            return SelectResult(sm + eq[:i] + before_acc, pivot, eq[i:] + lg + after_acc)


def median_partition(l: list, le: Comparator) -> Optional[SelectResult]:
    """quick_select at rank floor(len(l)/2); None only for an empty list."""
    return quick_select(len(l) // 2, l, le)
