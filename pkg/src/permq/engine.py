"""Equivalence-class enumeration of S_n under a pattern set.

The full partition is built by a union-find over Lehmer ranks; single
classes can also be explored on their own by breadth-first search.
"""

from __future__ import annotations

import logging
import os
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb, factorial
from typing import Iterable, Sequence

import numba
import numpy as np

from . import _kernels as K
from .permcore import (
    N_MAX,
    InvalidInputError,
    PatternSet,
    Permutation,
    _unchecked,
    all_permutations,
    rank,
)

log = logging.getLogger(__name__)

__all__ = [
    "ResourceError",
    "DEFAULT_N_LIMIT",
    "CLASS_CAP",
    "ClassPartition",
    "Census",
    "neighbors",
    "class_of",
    "lift_front",
    "lift_back",
    "enumerate_partition",
    "census",
    "max_workers",
    "resolve_workers",
]

# n = 12 needs about 2 GB of index arrays; it is only built on request.
DEFAULT_N_LIMIT = 11
CLASS_CAP = 10**7
_EDGE_CAP = 1 << 16
_SLICES_PER_WORKER = 4


class ResourceError(RuntimeError):
    """A requested computation would exceed its memory or exploration budget."""


def max_workers() -> int:
    return max(1, os.cpu_count() or 1)


def resolve_workers(workers: int | str | None) -> int:
    if workers in (None, "auto", "max"):
        return max_workers()
    workers = int(workers)
    if workers < 1:
        raise InvalidInputError("workers must be a positive integer")
    return workers


def neighbors(p: Sequence[int], patterns: PatternSet) -> set[Permutation]:
    """Permutations reachable from ``p`` by a single replacement."""
    n, c = len(p), patterns.c
    out: set[Permutation] = set()
    if c > n:
        return out
    pats = [tuple(x) for x in patterns]
    # pairwise order of each pattern, checked with early exit
    shapes = [[(i, j, q[i] < q[j]) for j in range(c) for i in range(j)] for q in pats]
    for idx in combinations(range(n), c):
        sub = [p[i] for i in idx]
        for s, pairs in enumerate(shapes):
            for i, j, up in pairs:
                if (sub[i] < sub[j]) != up:
                    break
            else:
                break
        else:
            continue
        ordered = sorted(sub)
        for t, target in enumerate(pats):
            if t == s:
                continue
            q = list(p)
            for i, v in zip(idx, target):
                q[i] = ordered[v - 1]
            out.add(_unchecked(q))
    return out


def class_of(p: Sequence[int], patterns: PatternSet, cap: int = CLASS_CAP) -> set[Permutation]:
    """The whole equivalence class of ``p`` by breadth-first closure.

    Raises :class:`ResourceError` once more than ``cap`` members are seen.
    """
    start = Permutation(p)
    seen = {start}
    queue = deque([start])
    while queue:
        for q in neighbors(queue.popleft(), patterns):
            if q not in seen:
                seen.add(q)
                if len(seen) > cap:
                    raise ResourceError(
                        f"class of {start} exceeds the exploration cap of {cap} members")
                queue.append(q)
    return seen


def lift_front(cls: Iterable[Sequence[int]]) -> set[Permutation]:
    """Prepend a new maximum letter to every member."""
    return {_unchecked((len(q) + 1, *q)) for q in cls}


def lift_back(cls: Iterable[Sequence[int]]) -> set[Permutation]:
    """Shift every letter up by one and append a new minimum."""
    return {_unchecked((*(v + 1 for v in q), 1)) for q in cls}


@dataclass(frozen=True)
class Census:
    n: int
    patterns: str
    total_classes: int
    nontrivial_classes: int
    b_count: int
    size_histogram: dict[int, int]

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "patterns": self.patterns,
            "total_classes": self.total_classes,
            "nontrivial_classes": self.nontrivial_classes,
            "b_count": self.b_count,
            "size_histogram": {str(k): v for k, v in sorted(self.size_histogram.items())},
        }

    @classmethod
    def from_record(cls, rec: dict) -> "Census":
        return cls(
            n=int(rec["n"]),
            patterns=rec["patterns"],
            total_classes=int(rec["total_classes"]),
            nontrivial_classes=int(rec["nontrivial_classes"]),
            b_count=int(rec["b_count"]),
            size_histogram={int(k): int(v) for k, v in rec["size_histogram"].items()},
        )


@dataclass
class ClassStats:
    """Per-class aggregates, classes ordered by their smallest rank."""

    roots: np.ndarray
    size: np.ndarray
    front: np.ndarray  # members beginning with n
    back: np.ndarray  # members ending with 1
    even: np.ndarray  # members with an even number of inversions


@dataclass(eq=False)
class ClassPartition:
    """Partition of S_n into equivalence classes.

    ``labels[r]`` is the smallest rank in the class of the permutation with
    rank ``r``, which makes ``labels`` a fully compressed union-find forest
    whose roots are canonical.
    """

    n: int
    patterns: PatternSet
    labels: np.ndarray = field(repr=False)

    @cached_property
    def _stats_and_ids(self) -> tuple[ClassStats, np.ndarray]:
        class_id = np.full(self.labels.shape[0], -1, dtype=np.int32)
        size, front, back, even = K.class_stats(self.labels, self.n, class_id)
        roots = np.flatnonzero(self.labels == np.arange(self.labels.shape[0], dtype=np.int32))
        return ClassStats(roots, size, front, back, even), class_id

    @property
    def stats(self) -> ClassStats:
        return self._stats_and_ids[0]

    @property
    def class_sizes(self) -> dict[int, int]:
        """Map root rank to class size."""
        st = self.stats
        return dict(zip(st.roots.tolist(), st.size.tolist()))

    @property
    def num_classes(self) -> int:
        return int(self.stats.roots.shape[0])

    def root(self, p: Sequence[int]) -> int:
        if len(p) != self.n:
            raise InvalidInputError(f"expected a permutation of length {self.n}")
        return int(self.labels[rank(p)])

    def class_index(self, p: Sequence[int]) -> int:
        return int(self._stats_and_ids[1][self.root(p)])

    def size_of(self, p: Sequence[int]) -> int:
        return int(self.stats.size[self.class_index(p)])

    def same_class(self, p: Sequence[int], q: Sequence[int]) -> bool:
        return self.root(p) == self.root(q)

    def members_of_root(self, root: int) -> list[Permutation]:
        rows = K.members(self.labels, int(root), self.n)
        return [_unchecked(int(v) + 1 for v in row) for row in rows]

    def block(self, p: Sequence[int]) -> set[Permutation]:
        return set(self.members_of_root(self.root(p)))

    def blocks(self) -> list[set[Permutation]]:
        """All classes as explicit sets; only sensible for small n."""
        groups: dict[int, set[Permutation]] = {}
        for r, perm in enumerate(all_permutations(self.n)):
            groups.setdefault(int(self.labels[r]), set()).add(perm)
        return [groups[k] for k in sorted(groups)]


def _available_memory() -> int | None:
    try:
        return os.sysconf("SC_PAGE_SIZE") * os.sysconf("SC_AVPHYS_PAGES")
    except (ValueError, OSError, AttributeError):
        return None


def estimate_bytes(n: int, workers: int) -> int:
    total = factorial(n)
    slices = workers * _SLICES_PER_WORKER
    return 3 * 4 * total + 2 * 4 * slices * _EDGE_CAP


def enumerate_partition(
    n: int,
    patterns: PatternSet,
    workers: int | str | None = None,
    allow_big_n: bool = False,
) -> ClassPartition:
    """Build the complete partition of S_n under ``patterns``.

    The result is identical for every worker count.
    """
    if not 1 <= n <= N_MAX:
        raise InvalidInputError(f"n = {n} outside the supported range 1..{N_MAX}")
    if n > DEFAULT_N_LIMIT and not allow_big_n:
        raise ResourceError(
            f"n = {n} needs about {estimate_bytes(n, 1) / 2**30:.1f} GiB; "
            "pass allow_big_n to build it anyway")
    workers = resolve_workers(workers)
    need = estimate_bytes(n, workers)
    avail = _available_memory()
    if avail is not None and need > avail:
        raise ResourceError(
            f"n = {n} needs {need / 2**30:.2f} GiB but only {avail / 2**30:.2f} GiB is free")

    total = factorial(n)
    c = patterns.c
    parent = np.arange(total, dtype=np.int32)
    if c <= n:
        if c > 11:
            raise InvalidInputError("the engine supports patterns of length at most 11")
        size = np.ones(total, dtype=np.int32)
        pats = np.array([[v - 1 for v in p] for p in patterns], dtype=np.int64)
        masks = K.pair_masks(pats)
        lows = np.array([(1 << (d * (d - 1) // 2)) - 1 for d in range(c + 1)], dtype=np.int64)
        per_perm = comb(n, c) * (len(patterns) - 1)
        cap = max(_EDGE_CAP, per_perm)

        nslices = min(total, workers * _SLICES_PER_WORKER)
        bounds = np.linspace(0, total, nslices + 1).astype(np.int64)
        resume = bounds[:-1].copy()
        ends = bounds[1:].copy()
        src = np.empty((nslices, cap), dtype=np.int32)
        dst = np.empty((nslices, cap), dtype=np.int32)
        counts = np.zeros(nslices, dtype=np.int64)

        threads = min(workers, numba.config.NUMBA_NUM_THREADS)
        prev = numba.get_num_threads()
        numba.set_num_threads(threads)
        try:
            rounds = 0
            while np.any(resume < ends):
                K.scan_slices(n, c, pats, masks, lows, per_perm, resume, ends, src, dst, counts)
                K.union_batches(parent, size, src, dst, counts)
                rounds += 1
        finally:
            numba.set_num_threads(prev)
        log.debug("n=%d: %d slices, %d rounds, %d threads", n, nslices, rounds, threads)
        labels = K.canonical_labels(parent, size)
        del size
    else:
        labels = parent
    return ClassPartition(n=n, patterns=patterns, labels=labels)


def census(partition: ClassPartition) -> Census:
    st = partition.stats
    nontrivial = st.size >= 2
    b_mask = nontrivial & (st.front == 0) & (st.back == 0)
    hist = Counter(st.size.tolist())
    return Census(
        n=partition.n,
        patterns=partition.patterns.canonical(),
        total_classes=int(st.size.shape[0]),
        nontrivial_classes=int(np.count_nonzero(nontrivial)),
        b_count=int(np.count_nonzero(b_mask)),
        size_histogram=dict(sorted(hist.items())),
    )
