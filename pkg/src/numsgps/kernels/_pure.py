"""Pure-Python implementations of the integer kernels.

These mirror the compiled extension exactly and are used when it is not
available, when ``NUMSGPS_PURE=1``, or when a call falls outside the
64-bit fast-path envelope. All functions return numpy arrays so callers
never see which backend answered.
"""

from __future__ import annotations

import heapq

import numpy as np


def sieve_fill(gens, bound):
    """Membership table: out[n] == 1 iff n is a sum of the generators."""
    member = bytearray(bound + 1)
    member[0] = 1
    gs = sorted(int(g) for g in gens)
    for n in range(1, bound + 1):
        for g in gs:
            if g > n:
                break
            if member[n - g]:
                member[n] = 1
                break
    return np.frombuffer(bytes(member), dtype=np.uint8)


def order_fill(gens, bound, prev=None):
    """Order table: out[n] = max number of generators summing to n, -1 if none.

    ``prev`` is an existing table prefix; the recurrence only looks
    backwards, so extension continues where the prefix stops.
    """
    gs = sorted(int(g) for g in gens)
    if prev is None:
        table = [-1] * (bound + 1)
        table[0] = 0
        start = 1
    else:
        table = prev.tolist()
        start = len(table)
        table.extend([-1] * (bound + 1 - start))
    for n in range(start, bound + 1):
        best = -1
        for g in gs:
            if g > n:
                break
            t = table[n - g]
            if t >= 0 and t >= best:
                best = t + 1
        table[n] = best
    return np.asarray(table, dtype=np.int64)


def apery_distances(gens, x):
    """Smallest semigroup element in each residue class mod x.

    Dijkstra on the residue graph Z/xZ with one arc of weight g per
    generator g; requires gcd of the generators to be 1 so that every
    class is reachable.
    """
    if x == 1:
        return np.zeros(1, dtype=np.int64)
    steps = {}
    for g in gens:
        g = int(g)
        r = g % x
        if r == 0:
            continue  # self loops never shorten a path
        if r not in steps or g < steps[r]:
            steps[r] = g
    arcs = sorted(steps.items())
    dist = [None] * x
    dist[0] = 0
    seen = bytearray(x)
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if seen[r]:
            continue
        seen[r] = 1
        for dr, w in arcs:
            nr = r + dr
            if nr >= x:
                nr -= x
            nd = d + w
            if not seen[nr] and (dist[nr] is None or nd < dist[nr]):
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    return np.asarray(dist, dtype=np.int64)


def max_sum_count(gens, s):
    """Largest summand count over all generator representations of s.

    Exhaustive depth-first enumeration of coefficient vectors with a
    branch-and-bound cutoff (any completion of remainder v adds at most
    v // smallest summands). Returns -1 when s is not representable.
    Deliberately shares nothing with the order-table recurrence.
    """
    s = int(s)
    if s < 0:
        return -1
    gs = sorted({int(g) for g in gens}, reverse=True)
    smallest = gs[-1]
    last = len(gs) - 1

    def dfs(j, v, cnt, best):
        if cnt + v // smallest <= best:
            return best
        if j == last:
            if v % smallest == 0:
                return cnt + v // smallest
            return best
        g = gs[j]
        for c in range(v // g + 1):
            rem = v - c * g
            if cnt + c + rem // smallest <= best:
                break  # the bound only shrinks as c grows
            best = dfs(j + 1, rem, cnt + c, best)
        return best

    return dfs(0, s, 0, -1)
