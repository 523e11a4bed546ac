"""Constructions of even and generated rhythms."""

from __future__ import annotations

from fractions import Fraction
from math import ceil

from .core import Rhythm, RhythmError, from_distance_seq


def _check_kn(k: int, n: int):
    if n < 1:
        raise RhythmError(f"timespan must be positive, got n={n}")
    if k < 1:
        raise RhythmError(f"need at least one onset, got k={k}")
    if k > n:
        raise RhythmError(f"cannot place k={k} onsets in n={n} pulses")


def _uniform(k: int, n: int) -> Rhythm:
    step = n // k
    return Rhythm(n, tuple(range(0, n, step)))


def bjorklund_bits(k: int, n: int) -> str:
    """Bjorklund's folding procedure as a ``'1'``/``'0'`` string.

    Starts from ``k`` one-bit ``[1]`` groups and ``n - k`` ``[0]`` groups and
    repeatedly appends one remainder group to each leading group, stopping as
    soon as at most one remainder group is left.
    """
    _check_kn(k, n)
    groups = ["1"] * k
    remainder = ["0"] * (n - k)
    while len(remainder) > 1:
        paired = min(len(groups), len(remainder))
        merged = [groups[i] + remainder[i] for i in range(paired)]
        # whatever did not get paired becomes the next remainder
        if len(groups) > paired:
            remainder = groups[paired:]
        else:
            remainder = remainder[paired:]
        groups = merged
    return "".join(groups) + "".join(remainder)


def bjorklund(k: int, n: int) -> Rhythm:
    if n >= 1 and 1 <= k <= n and n % k == 0:
        return _uniform(k, n)
    bits = bjorklund_bits(k, n)
    return Rhythm(n, tuple(i for i, b in enumerate(bits) if b == "1"))


def euclidean_recursive(n: int, k: int) -> tuple[int, ...]:
    """Distance sequence built by the Euclid-style recursion on ``(n, k)``."""
    _check_kn(k, n)
    if n % k == 0:
        return (n // k,) * k
    a = n % k
    lo, hi = n // k, n // k + 1
    out: list[int] = []
    for x in euclidean_recursive(k, a):
        out.extend([lo] * (x - 1))
        out.append(hi)
    return tuple(out)


def euclidean_rhythm(n: int, k: int) -> Rhythm:
    return from_distance_seq(euclidean_recursive(n, k), 0, n)


def clough_douthett(n: int, k: int) -> Rhythm:
    _check_kn(k, n)
    return Rhythm(n, tuple(i * n // k for i in range(k)))


def snap(n: int, k: int) -> Rhythm:
    """Snap ``k`` evenly spaced off-lattice points clockwise onto the pulses.

    The points sit at ``i*n/k + 1/(2k)``, which is never an integer, so each
    has a well defined next pulse.
    """
    _check_kn(k, n)
    offset = Fraction(1, 2 * k)
    return Rhythm.from_onsets((ceil(Fraction(i * n, k) + offset) % n for i in range(k)), n)


def generated(k: int, n: int, m: int) -> Rhythm:
    """``{i*m mod n : i < k}``; raises if two multiples coincide."""
    _check_kn(k, n)
    if not 0 <= m < n:
        raise RhythmError(f"generator m={m} outside [0, {n - 1}]")
    seen = []
    for i in range(k):
        x = i * m % n
        if x in seen:
            raise RhythmError(f"multiples of {m} mod {n} collide at step {i} (pulse {x})")
        seen.append(x)
    return Rhythm.from_onsets(seen, n)


def generation_order(k: int, n: int, m: int) -> list[int]:
    return [i * m % n for i in range(k)]


EXCEPTIONAL_F = Rhythm(6, (0, 1, 2, 4))


def exceptional_f() -> Rhythm:
    return EXCEPTIONAL_F


ALGORITHMS = {
    "bjorklund": lambda k, n: bjorklund(k, n),
    "euclid": lambda k, n: euclidean_rhythm(n, k),
    "clough": lambda k, n: clough_douthett(n, k),
    "snap": lambda k, n: snap(n, k),
}
