"""Compiled inner loops for the enumeration engine.

Permutations inside these kernels are 0-based int64 arrays; ranks are
lexicographic (Lehmer) indices held in int64 and stored in int32 arrays.
"""

import os

import numba
import numpy as np
from numba import njit, prange

if "NUMBA_THREADING_LAYER_PRIORITY" not in os.environ:
    # probing an outdated TBB first only produces a warning
    numba.config.THREADING_LAYER_PRIORITY = ["omp", "tbb", "workqueue"]

FACT = np.array([1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880, 3628800,
                 39916800, 479001600], dtype=np.int64)


@njit(cache=True, inline="always")
def unrank_into(r, n, out, pool):
    for i in range(n):
        pool[i] = i
    m = n
    for i in range(n):
        f = FACT[n - 1 - i]
        d = r // f
        r -= d * f
        out[i] = pool[d]
        for j in range(d, m - 1):
            pool[j] = pool[j + 1]
        m -= 1


@njit(cache=True, inline="always")
def rank_of(a, n):
    r = 0
    for i in range(n):
        s = 0
        ai = a[i]
        for j in range(i + 1, n):
            if a[j] < ai:
                s += 1
        r += s * FACT[n - 1 - i]
    return r


@njit(cache=True, inline="always")
def next_perm(a, n):
    i = n - 2
    while i >= 0 and a[i] > a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while a[j] < a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    lo = i + 1
    hi = n - 1
    while lo < hi:
        a[lo], a[hi] = a[hi], a[lo]
        lo += 1
        hi -= 1
    return True


def pair_masks(patterns):
    """Inversion bitmask per pattern; bit ``j*(j-1)//2 + i`` flags p[i] > p[j]."""
    out = np.zeros(len(patterns), dtype=np.int64)
    for s, p in enumerate(patterns):
        m = 0
        for j in range(len(p)):
            for i in range(j):
                if p[i] > p[j]:
                    m |= 1 << (j * (j - 1) // 2 + i)
        out[s] = m
    return out


@njit(cache=True)
def _emit_neighbors(a, r, n, c, pats, masks, lows, src, dst, k):
    """Append every (r, neighbour) pair with neighbour rank > r; returns new k."""
    npat = pats.shape[0]
    pos = np.empty(c, dtype=np.int64)
    letters = np.empty(c, dtype=np.int64)
    pm = np.zeros(c + 1, dtype=np.int64)
    ordered = np.empty(c, dtype=np.int64)
    b = np.empty(n, dtype=np.int64)
    d = 0
    pos[0] = -1
    while d >= 0:
        pos[d] += 1
        if pos[d] > n - c + d:
            d -= 1
            continue
        v = a[pos[d]]
        m = pm[d]
        base = d * (d - 1) // 2
        for i in range(d):
            if letters[i] > v:
                m |= np.int64(1) << (base + i)
        low = lows[d + 1]
        hit = -1
        for s in range(npat):
            if (masks[s] & low) == m:
                hit = s
                break
        if hit < 0:
            continue
        letters[d] = v
        pm[d + 1] = m
        if d + 1 < c:
            d += 1
            pos[d] = pos[d - 1]
            continue
        # full occurrence of pattern ``hit``
        for j in range(c):
            ordered[pats[hit, j]] = letters[j]
        for t in range(npat):
            if t == hit:
                continue
            for i in range(n):
                b[i] = a[i]
            for j in range(c):
                b[pos[j]] = ordered[pats[t, j]]
            rb = rank_of(b, n)
            if rb > r:
                src[k] = r
                dst[k] = rb
                k += 1
    return k


@njit(cache=True, parallel=True)
def scan_slices(n, c, pats, masks, lows, per_perm, resume, ends, src, dst, counts):
    """Generate edges for each slice until its buffer fills or it is done.

    ``resume`` is advanced in place; ``counts[s]`` receives the number of
    edges written into row ``s`` of ``src``/``dst``.
    """
    nslices = resume.shape[0]
    cap = src.shape[1]
    for s in prange(nslices):
        r = resume[s]
        stop = ends[s]
        k = 0
        if r < stop:
            a = np.empty(n, dtype=np.int64)
            pool = np.empty(n, dtype=np.int64)
            unrank_into(r, n, a, pool)
            while r < stop and k + per_perm <= cap:
                k = _emit_neighbors(a, r, n, c, pats, masks, lows, src[s], dst[s], k)
                r += 1
                next_perm(a, n)
        resume[s] = r
        counts[s] = k


@njit(cache=True)
def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


@njit(cache=True)
def union_batches(parent, size, src, dst, counts):
    merged = 0
    for s in range(counts.shape[0]):
        for e in range(counts[s]):
            x = _find(parent, src[s, e])
            y = _find(parent, dst[s, e])
            if x == y:
                continue
            if size[x] < size[y]:
                x, y = y, x
            parent[y] = x
            size[x] += size[y]
            merged += 1
    return merged


@njit(cache=True)
def canonical_labels(parent, scratch):
    """Relabel each element by the smallest rank in its class.

    ``scratch`` (same length as ``parent``) is clobbered.  The result
    overwrites ``parent`` and does not depend on union order.
    """
    total = parent.shape[0]
    for i in range(total):
        scratch[i] = -1
    for i in range(total):
        root = _find(parent, i)
        if scratch[root] < 0:
            scratch[root] = i
    # compress fully before relabelling; labels are not roots
    for i in range(total):
        parent[i] = _find(parent, i)
    for i in range(total):
        parent[i] = scratch[parent[i]]
    return parent


@njit(cache=True)
def class_stats(labels, n, class_id):
    """Per-class size, count beginning with n, count ending with 1, even count.

    Classes are numbered by increasing smallest rank; ``class_id`` is filled
    with that number at each root rank.
    """
    total = labels.shape[0]
    nclasses = 0
    for i in range(total):
        if labels[i] == i:
            class_id[i] = nclasses
            nclasses += 1
    size = np.zeros(nclasses, dtype=np.int64)
    front = np.zeros(nclasses, dtype=np.int64)
    back = np.zeros(nclasses, dtype=np.int64)
    even = np.zeros(nclasses, dtype=np.int64)
    a = np.empty(n, dtype=np.int64)
    for i in range(n):
        a[i] = i
    for r in range(total):
        cid = class_id[labels[r]]
        size[cid] += 1
        if a[0] == n - 1:
            front[cid] += 1
        if a[n - 1] == 0:
            back[cid] += 1
        # inversion count equals the Lehmer digit sum
        q = r
        dsum = 0
        for i in range(n - 1, 0, -1):
            dsum += q // FACT[i]
            q = q % FACT[i]
        if dsum % 2 == 0:
            even[cid] += 1
        next_perm(a, n)
    return size, front, back, even


@njit(cache=True)
def members(labels, root, n):
    """0-based permutations (rows) whose label is ``root``."""
    cnt = 0
    for i in range(labels.shape[0]):
        if labels[i] == root:
            cnt += 1
    out = np.empty((cnt, n), dtype=np.int8)
    pool = np.empty(n, dtype=np.int64)
    a = np.empty(n, dtype=np.int64)
    k = 0
    for i in range(root, labels.shape[0]):
        if labels[i] == root:
            unrank_into(i, n, a, pool)
            for j in range(n):
                out[k, j] = a[j]
            k += 1
            if k == cnt:
                break
    return out
