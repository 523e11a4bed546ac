# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_kernels_py``; same names, same results."""

from math import pi, sin

METRICS = ("chordal", "geodesic", "squared")

cdef enum:
    MAXN = 62
    HALFN = 32

# largest timespan the fixed-size buffers hold; ``_kernels`` routes bigger
# inputs to the pure-Python twin
MAX_N = MAXN
MAX_DEEP_N = 30
MAX_STRING_LENGTH = 16

def chord_table(int n):
    return [2.0 * sin(pi * d / n) for d in range(n // 2 + 1)]


cdef inline int _unpack(unsigned long long mask, int n, int* out) noexcept nogil:
    cdef int i, k = 0
    for i in range(n):
        if (mask >> i) & 1:
            out[k] = i
            k += 1
    return k


cdef inline void _counts(int* on, int k, int n, int* counts) noexcept nogil:
    cdef int a, b, d, half = n // 2
    for d in range(half + 1):
        counts[d] = 0
    for a in range(k):
        for b in range(a + 1, k):
            d = on[b] - on[a]
            if d < 0:
                d += n
            if d > n - d:
                d = n - d
            counts[d] += 1


cdef inline bint _erdos(int* counts, int half, int k) noexcept nogil:
    cdef int d, c, seen_count = 0
    cdef int seen[MAXN + 1]
    if k <= 2:
        return True
    for d in range(k):
        seen[d] = 0
    for d in range(1, half + 1):
        c = counts[d]
        if c == 0:
            continue
        if c >= k or seen[c]:
            return False
        seen[c] = 1
        seen_count += 1
    return seen_count == k - 1


cdef inline bint _winograd(int* counts, int half) noexcept nogil:
    cdef int a, b
    for a in range(1, half + 1):
        for b in range(a + 1, half + 1):
            if counts[a] == counts[b]:
                return False
    return True


def _check_n(int n):
    if n < 1 or n > MAXN:
        raise ValueError(f"compiled kernels support 1 <= n <= {MAXN}")


def geodesic_counts(onsets, int n):
    _check_n(n)
    cdef int k = len(onsets)
    cdef int on[MAXN]
    cdef int counts[HALFN]
    cdef int i
    for i in range(k):
        on[i] = onsets[i]
    _counts(on, k, n, counts)
    return [counts[i] for i in range(n // 2 + 1)]


cdef double _chordal(int* on, int k, int n, double* table) noexcept nogil:
    cdef int a, b, d
    cdef double s = 0.0
    for a in range(k):
        for b in range(a + 1, k):
            d = on[b] - on[a]
            if d < 0:
                d += n
            if d > n - d:
                d = n - d
            s += table[d]
    return s


cdef long long _geo(int* on, int k, int n, bint squared) noexcept nogil:
    cdef int a, b, d
    cdef long long s = 0
    for a in range(k):
        for b in range(a + 1, k):
            d = on[b] - on[a]
            if d < 0:
                d += n
            if d > n - d:
                d = n - d
            if squared:
                s += d * d
            else:
                s += d
    return s


def pair_sums(onsets, int n):
    _check_n(n)
    cdef int k = len(onsets)
    cdef int on[MAXN]
    cdef double table[HALFN]
    cdef int i
    py_table = chord_table(n)
    for i in range(n // 2 + 1):
        table[i] = py_table[i]
    for i in range(k):
        on[i] = onsets[i]
    return _chordal(on, k, n, table), _geo(on, k, n, False), _geo(on, k, n, True)


def _onsets_key(mask):
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def deep_masks(int n):
    if n < 1 or n > 30:
        raise ValueError("deep_masks supports 1 <= n <= 30")
    cdef unsigned long long mask, top = 1ULL << n
    cdef int on[MAXN]
    cdef int counts[HALFN]
    cdef int k, half = n // 2
    erdos = []
    winograd = []
    mask = 0
    while mask < top:
        k = _unpack(mask, n, on)
        _counts(on, k, n, counts)
        if _erdos(counts, half, k):
            erdos.append(mask)
        if _winograd(counts, half):
            winograd.append(mask)
        mask += 1
    erdos.sort(key=_onsets_key)
    winograd.sort(key=_onsets_key)
    return erdos, winograd


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef inline unsigned long long _next_combo(unsigned long long v) noexcept nogil:
    # Gosper's hack: next integer with the same popcount
    cdef unsigned long long t = v | (v - 1)
    cdef unsigned long long w = (t + 1) | (((~t & (t + 1)) - 1) >> (__builtin_ctzll(v) + 1))
    return w


cdef double _score(unsigned long long mask, int n, int which, double* table) noexcept nogil:
    cdef int on[MAXN]
    cdef int k = _unpack(mask, n, on)
    if which == 0:
        return _chordal(on, k, n, table)
    return <double>_geo(on, k, n, which == 2)


def argmax_masks(int n, int k, metric, double tol=1e-9):
    if metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}")
    _check_n(n)
    if k < 0 or k > n:
        raise ValueError("need 0 <= k <= n")
    cdef int which = METRICS.index(metric)
    cdef double table[HALFN]
    cdef int i
    py_table = chord_table(n)
    for i in range(n // 2 + 1):
        table[i] = py_table[i]
    if k == 0:
        return [0]
    cdef unsigned long long first = (1ULL << k) - 1
    cdef unsigned long long top = 1ULL << n
    cdef unsigned long long v = first
    cdef double best = -1.0, s, slack = tol if which == 0 else 0.0
    while v < top:
        s = _score(v, n, which, table)
        if s > best:
            best = s
        v = _next_combo(v)
    out = []
    v = first
    while v < top:
        s = _score(v, n, which, table)
        if s >= best - slack:
            out.append(v)
        v = _next_combo(v)
    out.sort(key=_onsets_key)
    return out


def euclidean_string_counts(int length, int max_entry):
    if length < 1 or length > 16:
        raise ValueError("length must be in [1, 16]")
    cdef int base = max_entry + 1
    cdef int p[16]
    cdef int t[16]
    cdef int i, s, total
    cdef bint ok, match
    for i in range(length):
        p[i] = 0
    found = {}
    while True:
        if length == 1 or p[length - 1] >= 1:
            for i in range(length):
                t[i] = p[i]
            t[0] += 1
            t[length - 1] -= 1
            match = False
            for s in range(length):
                ok = True
                for i in range(length):
                    if t[(i + s) % length] != p[i]:
                        ok = False
                        break
                if ok:
                    match = True
                    break
            if match:
                total = 0
                for i in range(length):
                    total += p[i]
                item = []
                for i in range(length):
                    item.append(p[i])
                found.setdefault(total, []).append(tuple(item))
        i = length - 1
        while i >= 0 and p[i] == base - 1:
            p[i] = 0
            i -= 1
        if i < 0:
            break
        p[i] += 1
    return found
