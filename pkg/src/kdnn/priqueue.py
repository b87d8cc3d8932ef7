"""Max-priority queue keyed by a fixed key function, with bounded insert.

Backed by a binary heap; all observable behavior is a function of the
contained multiset and the key function. Instances are mutable and assume
single ownership: methods update the queue in place and the "new queue" of
the functional contract is the same object.
"""

import heapq
import itertools
from typing import Callable, Optional


class BoundedMaxQueue:
    def __init__(self, key: Callable[[object], int]):
        self.key = key
        self._heap: list = []
        self._tie = itertools.count()  # heap needs comparable entries

    def size(self) -> int:
        return len(self._heap)

    def __len__(self) -> int:
        return len(self._heap)

    def insert(self, e) -> "BoundedMaxQueue":
        heapq.heappush(self._heap, (-self.key(e), next(self._tie), e))
        return self

    def peek_max(self) -> Optional[object]:
        """A maximum-key element, or None if empty. Does not modify the queue."""
        return self._heap[0][2] if self._heap else None

    def delete_max(self) -> Optional[object]:
        """Remove and return a maximum-key element, or None if empty."""
        return heapq.heappop(self._heap)[2] if self._heap else None

    def insert_bounded(self, capacity: int, e) -> "BoundedMaxQueue":
        """Insert e, then evict one maximum if the size exceeds capacity.

        Keeps the capacity smallest keys seen (ties among equal keys broken
        arbitrarily). Requires capacity >= 1.
        """
        if capacity < 1:
            raise ValueError("capacity must be at least 1")
        self.insert(e)
        if len(self._heap) > capacity:
            removed = self.delete_max()
            assert removed is not None  # unreachable: queue was just non-empty
        return self

    def to_list(self) -> list:
        """All elements ordered by non-decreasing key; ties in heap-pop order."""
        out = []
        heap = list(self._heap)
        while heap:
            out.append(heapq.heappop(heap)[2])
        out.reverse()
        return out
