# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels.

Same contracts as ``numsgps.kernels._pure``; the dispatcher in
``numsgps.kernels`` guarantees every value handed to these functions fits
comfortably in signed 64-bit arithmetic, so no overflow checks are needed
here.
"""

import numpy as np

ctypedef long long i64


def sieve_fill(gens, long long bound):
    arr = np.zeros(bound + 1, dtype=np.uint8)
    garr = np.asarray(sorted(gens), dtype=np.int64)
    cdef unsigned char[::1] m = arr
    cdef i64[::1] g = garr
    cdef Py_ssize_t d = g.shape[0]
    cdef i64 n
    cdef Py_ssize_t i
    m[0] = 1
    for n in range(1, bound + 1):
        for i in range(d):
            if g[i] > n:
                break
            if m[n - g[i]]:
                m[n] = 1
                break
    return arr


def order_fill(gens, long long bound, prev=None):
    arr = np.full(bound + 1, -1, dtype=np.int64)
    cdef i64 start = 1
    if prev is not None:
        arr[: len(prev)] = prev
        start = len(prev)
    else:
        arr[0] = 0
    garr = np.asarray(sorted(gens), dtype=np.int64)
    cdef i64[::1] o = arr
    cdef i64[::1] g = garr
    cdef Py_ssize_t d = g.shape[0]
    cdef i64 n, t, best
    cdef Py_ssize_t i
    for n in range(start, bound + 1):
        best = -1
        for i in range(d):
            if g[i] > n:
                break
            t = o[n - g[i]]
            if t >= 0 and t >= best:
                best = t + 1
        o[n] = best
    return arr


cdef void _heap_push(i64* hk, i64* hv, Py_ssize_t* size, i64 key, i64 val) nogil:
    cdef Py_ssize_t i = size[0]
    cdef Py_ssize_t parent
    hk[i] = key
    hv[i] = val
    size[0] += 1
    while i > 0:
        parent = (i - 1) >> 1
        if hk[parent] <= hk[i]:
            break
        hk[parent], hk[i] = hk[i], hk[parent]
        hv[parent], hv[i] = hv[i], hv[parent]
        i = parent


cdef void _heap_pop(i64* hk, i64* hv, Py_ssize_t* size) nogil:
    cdef Py_ssize_t i = 0, child
    size[0] -= 1
    hk[0] = hk[size[0]]
    hv[0] = hv[size[0]]
    while True:
        child = 2 * i + 1
        if child >= size[0]:
            break
        if child + 1 < size[0] and hk[child + 1] < hk[child]:
            child += 1
        if hk[i] <= hk[child]:
            break
        hk[i], hk[child] = hk[child], hk[i]
        hv[i], hv[child] = hv[child], hv[i]
        i = child


def apery_distances(gens, long long x):
    """Dijkstra over residue classes mod x; arc weight = generator value."""
    if x == 1:
        return np.zeros(1, dtype=np.int64)
    steps = {}
    for gen in gens:
        residue = int(gen) % x
        if residue == 0:
            continue
        if residue not in steps or gen < steps[residue]:
            steps[residue] = int(gen)
    darr = np.asarray(sorted(steps.values()), dtype=np.int64)
    rarr = darr % x
    dist_arr = np.full(x, -1, dtype=np.int64)
    seen_arr = np.zeros(x, dtype=np.uint8)
    cdef i64[::1] w = darr
    cdef i64[::1] dr = rarr
    cdef i64[::1] dist = dist_arr
    cdef unsigned char[::1] seen = seen_arr
    cdef Py_ssize_t d = w.shape[0]
    # Each of the x nodes is pushed at most d times.
    heap_k_arr = np.empty(x * d + 1, dtype=np.int64)
    heap_v_arr = np.empty(x * d + 1, dtype=np.int64)
    cdef i64[::1] hk = heap_k_arr
    cdef i64[::1] hv = heap_v_arr
    cdef Py_ssize_t size = 0
    cdef i64 cur, r, nr, nd
    cdef Py_ssize_t i
    dist[0] = 0
    _heap_push(&hk[0], &hv[0], &size, 0, 0)
    while size > 0:
        cur = hk[0]
        r = hv[0]
        _heap_pop(&hk[0], &hv[0], &size)
        if seen[r]:
            continue
        seen[r] = 1
        for i in range(d):
            nr = r + dr[i]
            if nr >= x:
                nr -= x
            if seen[nr]:
                continue
            nd = cur + w[i]
            if dist[nr] < 0 or nd < dist[nr]:
                dist[nr] = nd
                _heap_push(&hk[0], &hv[0], &size, nd, nr)
    return dist_arr


cdef i64 _dfs(i64* g, Py_ssize_t last, i64 smallest, Py_ssize_t j, i64 v,
              i64 cnt, i64 best) nogil:
    cdef i64 c, rem, cand
    if cnt + v / smallest <= best:
        return best
    if j == last:
        if v % smallest == 0:
            return cnt + v / smallest
        return best
    for c in range(v / g[j] + 1):
        rem = v - c * g[j]
        if cnt + c + rem / smallest <= best:
            break
        cand = _dfs(g, last, smallest, j + 1, rem, cnt + c, best)
        if cand > best:
            best = cand
    return best


def max_sum_count(gens, long long s):
    if s < 0:
        return -1
    garr = np.asarray(sorted(set(gens), reverse=True), dtype=np.int64)
    cdef i64[::1] g = garr
    cdef Py_ssize_t last = g.shape[0] - 1
    return _dfs(&g[0], last, g[last], 0, s, 0, -1)
