"""Pure-Python kernels. ``_speedups.pyx`` mirrors every function here.

Rhythms enter as (onset sequence, n) pairs or as bitmasks where bit ``i``
set means pulse ``i`` is an onset. Mask results are returned sorted by
onset tuple, which is the order ``Rhythm`` objects compare in.
"""

from itertools import combinations, product
from math import pi, sin

METRICS = ("chordal", "geodesic", "squared")


def chord_table(n):
    return [2.0 * sin(pi * d / n) for d in range(n // 2 + 1)]


def geodesic_counts(onsets, n):
    """``counts[d]`` = number of onset pairs at geodesic distance ``d``."""
    counts = [0] * (n // 2 + 1)
    k = len(onsets)
    for a in range(k):
        x = onsets[a]
        for b in range(a + 1, k):
            d = (onsets[b] - x) % n
            if d > n - d:
                d = n - d
            counts[d] += 1
    return counts


def pair_sums(onsets, n):
    """Return (chordal, geodesic, squared geodesic) pairwise sums."""
    table = chord_table(n)
    chordal = 0.0
    geo = 0
    sq = 0
    k = len(onsets)
    for a in range(k):
        x = onsets[a]
        for b in range(a + 1, k):
            d = (onsets[b] - x) % n
            if d > n - d:
                d = n - d
            chordal += table[d]
            geo += d
            sq += d * d
    return chordal, geo, sq


def _is_erdos(counts, k):
    if k <= 2:
        return True
    seen = [False] * k
    for c in counts[1:]:
        if c == 0:
            continue
        if c >= k or seen[c]:
            return False
        seen[c] = True
    return all(seen[1:])


def _is_winograd(counts):
    nz = counts[1:]
    return len(set(nz)) == len(nz)


def deep_masks(n):
    """All Erdős-deep and all Winograd-deep rhythms of timespan ``n``, as masks."""
    erdos = []
    winograd = []
    for k in range(n + 1):
        for on in combinations(range(n), k):
            counts = geodesic_counts(on, n)
            mask = 0
            for x in on:
                mask |= 1 << x
            if _is_erdos(counts, k):
                erdos.append((on, mask))
            if _is_winograd(counts):
                winograd.append((on, mask))
    erdos.sort()
    winograd.sort()
    return [m for _, m in erdos], [m for _, m in winograd]


def argmax_masks(n, k, metric, tol=1e-9):
    """Every k-subset of ``range(n)`` maximising the metric.

    Integer metrics are compared exactly; the chordal metric keeps every
    subset within ``tol`` of the maximum.
    """
    if metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}")
    which = METRICS.index(metric)
    scored = [(pair_sums(on, n)[which], on) for on in combinations(range(n), k)]
    best = max(v for v, _ in scored)
    slack = tol if which == 0 else 0
    out = []
    for v, on in scored:
        if v >= best - slack:
            mask = 0
            for x in on:
                mask |= 1 << x
            out.append(mask)
    return out


def euclidean_string_counts(length, max_entry):
    """For every string over ``[0, max_entry]`` of the given length, test whether
    it is a Euclidean string. Returns ``{total: [strings...]}`` of the passing ones.
    """
    found = {}
    for p in product(range(max_entry + 1), repeat=length):
        if p[-1] < 1 and length > 1:
            continue
        t = list(p)
        t[0] += 1
        t[-1] -= 1
        if _is_rotation(tuple(t), p):
            found.setdefault(sum(p), []).append(p)
    return found


def _is_rotation(a, b):
    n = len(a)
    for s in range(n):
        if all(a[(i + s) % n] == b[i] for i in range(n)):
            return True
    return False
