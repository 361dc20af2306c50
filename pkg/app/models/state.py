"""
Maintained state: the independent set M, per-vertex IS-neighbor sets,
the candidate hierarchy and the per-level swap queues.
"""

from typing import Dict, Iterable, Iterator, List, Optional, Set, Tuple

KeySet = Tuple[int, ...]
_EMPTY: frozenset = frozenset()


def make_key(vertices: Iterable[int]) -> KeySet:
    """Canonical key for a vertex subset: the sorted tuple."""
    return tuple(sorted(vertices))


class CandidateHierarchy:
    """
    Levels 1..k of stored candidate lists.

    A vertex outside M with 1 <= count <= k lives in exactly one list,
    keyed by its IS-neighbor set at level `count`. `position` maps each
    stored vertex to that key.
    """

    def __init__(self, max_level: int):
        self.max_level = max_level
        # index 0 unused so levels[j] is level j
        self.levels: List[Dict[KeySet, Set[int]]] = [
            {} for _ in range(max_level + 1)
        ]
        self.position: Dict[int, KeySet] = {}
        self.peak: List[int] = [0] * (max_level + 1)
        self._sizes: List[int] = [0] * (max_level + 1)

    def members(self, key: KeySet) -> Set[int]:
        """Stored list for `key` (empty set if none). Do not mutate."""
        if not key or len(key) > self.max_level:
            return set()
        return self.levels[len(key)].get(key, _EMPTY)

    def key_of(self, u: int) -> Optional[KeySet]:
        return self.position.get(u)

    def relocate(self, u: int, old_key: Optional[KeySet], new_key: Optional[KeySet]) -> None:
        """Move `u` from its list under `old_key` to the one under `new_key`."""
        assert self.position.get(u) == old_key, (
            f"position index out of sync for {u}: {self.position.get(u)} != {old_key}"
        )
        if old_key == new_key:
            return
        if old_key is not None:
            level = self.levels[len(old_key)]
            bucket = level[old_key]
            bucket.discard(u)
            if not bucket:
                del level[old_key]
            del self.position[u]
            self._sizes[len(old_key)] -= 1
        if new_key is not None and 1 <= len(new_key) <= self.max_level:
            j = len(new_key)
            self.levels[j].setdefault(new_key, set()).add(u)
            self.position[u] = new_key
            self._sizes[j] += 1
            if self._sizes[j] > self.peak[j]:
                self.peak[j] = self._sizes[j]

    def size(self, level: int) -> int:
        return self._sizes[level]

    def keys(self, level: int) -> Iterator[KeySet]:
        return iter(list(self.levels[level]))


class MaintainerState:
    """
    status/count/IS-neighbor bookkeeping for M plus the candidate hierarchy.

    `changed` and `decreased` journal the vertices whose count moved since
    the last `begin_transaction`; `touches` counts neighbor visits.
    """

    def __init__(self, max_level: int = 0):
        self.max_level = max_level
        self.in_set: Set[int] = set()
        self.is_nbrs: Dict[int, Set[int]] = {}
        self.hierarchy = CandidateHierarchy(max_level)
        self.changed: Set[int] = set()
        self.decreased: Set[int] = set()
        self.touches = 0

    def count(self, v: int) -> int:
        return len(self.is_nbrs[v])

    @property
    def size(self) -> int:
        return len(self.in_set)

    def key_for(self, v: int) -> Optional[KeySet]:
        """Hierarchy key `v` should be stored under, or None if out of range."""
        if v in self.in_set:
            return None
        nbrs = self.is_nbrs[v]
        if 1 <= len(nbrs) <= self.max_level:
            return make_key(nbrs)
        return None

    def place(self, v: int) -> None:
        """Re-file `v` in the hierarchy after its IS-neighbor set changed."""
        self.hierarchy.relocate(v, self.hierarchy.key_of(v), self.key_for(v))

    def begin_transaction(self) -> None:
        self.changed.clear()
        self.decreased.clear()

    def is_subset_of_is(self, key: KeySet) -> bool:
        return all(v in self.in_set for v in key)


class SwapQueue:
    """
    FIFO dictionaries S_1..S_k from a key set to its pending vertices P[S].

    A vertex sits in at most one P[S] per level; re-queuing it under a
    different key moves it.
    """

    def __init__(self, max_level: int):
        self.max_level = max_level
        self.levels: List[Dict[KeySet, Dict[int, None]]] = [
            {} for _ in range(max_level + 1)
        ]
        self._where: List[Dict[int, KeySet]] = [{} for _ in range(max_level + 1)]
        self.pushed = 0

    def push(self, key: KeySet, u: int) -> None:
        j = len(key)
        if not 1 <= j <= self.max_level:
            return
        where = self._where[j]
        old = where.get(u)
        if old == key:
            return
        if old is not None:
            pending = self.levels[j][old]
            del pending[u]
            if not pending:
                del self.levels[j][old]
        self.levels[j].setdefault(key, {})[u] = None
        where[u] = key
        self.pushed += 1

    def pop(self) -> Optional[Tuple[int, KeySet, List[int]]]:
        """Oldest entry of the lowest nonempty level, or None when drained."""
        for j in range(1, self.max_level + 1):
            level = self.levels[j]
            if level:
                key = next(iter(level))
                pending = list(level.pop(key))
                where = self._where[j]
                for u in pending:
                    del where[u]
                return j, key, pending
        return None

    def __len__(self) -> int:
        return sum(len(level) for level in self.levels)

    def __bool__(self) -> bool:
        return any(self.levels[1:])
