"""Brute-force reference search and result-checking predicates.

These are deliberately naive (O(n log n) per query) and independent of the
tree code paths; property tests and the CLI `check` command validate the
tree search against them.
"""

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .metrics import DataPoint, sum_dist


def brute_force_knn(K: int, query: Sequence[int], data: Sequence[DataPoint]) -> list[DataPoint]:
    """Stable-sort data by distance to query and take the first min(K, n)."""
    return sorted(data, key=lambda p: sum_dist(query, p))[: max(K, 0)]


def all_in_leb(key: Callable[[object], int], l1: Sequence, l2: Sequence) -> bool:
    """True iff every key in l1 is <= every key in l2 (vacuously if empty)."""
    if not l1 or not l2:
        return True
    return max(key(x) for x in l1) <= min(key(y) for y in l2)


def is_permutation(l1: Sequence[DataPoint], l2: Sequence[DataPoint]) -> bool:
    """Multiset equality of two point lists."""
    return Counter(map(tuple, l1)) == Counter(map(tuple, l2))


@dataclass
class CheckReport:
    length_ok: bool
    subset_ok: bool
    separation_ok: bool
    distance_multiset_ok: bool
    details: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            self.length_ok
            and self.subset_ok
            and self.separation_ok
            and self.distance_multiset_ok
        )


def check_knn_result(
    K: int,
    k: int,
    data: Sequence[DataPoint],
    query: Sequence[int],
    result: Sequence[DataPoint],
) -> CheckReport:
    """Validate a claimed K-nearest-neighbor result against the data.

    Checks the expected length min(K, n), that the result is a sub-multiset
    of the data, that no left-out point is closer than any result point,
    and that the result's distance multiset matches brute force.
    """
    details: list[str] = []
    data_ms = Counter(map(tuple, data))
    result_ms = Counter(map(tuple, result))

    length_ok = len(result) == min(K, len(data))
    if not length_ok:
        details.append(f"length {len(result)} != min({K}, {len(data)})")

    subset_ok = all(result_ms[p] <= data_ms[p] for p in result_ms)
    if not subset_ok:
        details.append("result is not a sub-multiset of data")

    if subset_ok:
        leftover = list((data_ms - result_ms).elements())
        separation_ok = all_in_leb(lambda p: sum_dist(query, p), list(result), leftover)
        if not separation_ok:
            details.append("a leftover point is closer than some result point")
    else:
        separation_ok = False
        details.append("separation unchecked: leftover undefined")

    expected = brute_force_knn(K, query, data)
    distance_multiset_ok = Counter(sum_dist(query, p) for p in result) == Counter(
        sum_dist(query, p) for p in expected
    )
    if not distance_multiset_ok:
        details.append("distance multiset differs from brute force")

    return CheckReport(length_ok, subset_ok, separation_ok, distance_multiset_ok, details)
