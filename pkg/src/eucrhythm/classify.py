"""Aksak and Euclidean-string classification of rhythms."""

from __future__ import annotations

from enum import Enum
from typing import Sequence

from .core import Rhythm, RhythmError, gcd, rotations, to_distance_seq


class AksakClass(Enum):
    NOT_AKSAK = "not-aksak"
    AUTHENTIC = "authentic"
    QUASI = "quasi"
    PSEUDO = "pseudo"


class StringClass(Enum):
    EUCLIDEAN = "euclidean"
    REVERSE_EUCLIDEAN = "reverse-euclidean"
    BOTH = "both"
    NEITHER = "neither"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def aksak_class_of_gaps(gaps: Sequence[int]) -> AksakClass:
    if not gaps:
        raise RhythmError("aksak classification needs at least one onset")
    if set(gaps) != {2, 3}:
        return AksakClass.NOT_AKSAK
    n = sum(gaps)
    if is_prime(n):
        return AksakClass.AUTHENTIC
    if n % 2:
        return AksakClass.QUASI
    return AksakClass.PSEUDO


def aksak_class(r: Rhythm) -> AksakClass:
    if r.k == 0:
        raise RhythmError("aksak classification needs at least one onset")
    return aksak_class_of_gaps(to_distance_seq(r))


def euclidean_aksak_condition(k: int, n: int) -> bool:
    """An even k-in-n rhythm uses both 2s and 3s exactly when ``2k < n < 3k``."""
    if k < 1:
        raise RhythmError("need k >= 1")
    return 2 * k < n < 3 * k


def tau(p: Sequence[int]) -> tuple[int, ...]:
    """Increment the first entry and decrement the last."""
    if not p:
        raise RhythmError("tau needs a non-empty string")
    if len(p) == 1:
        return tuple(p)  # the increment and decrement cancel
    if p[-1] < 1:
        raise RhythmError("tau would make the last entry negative")
    out = list(p)
    out[0] += 1
    out[-1] -= 1
    return tuple(out)


def rho(p: Sequence[int], times: int = 1) -> tuple[int, ...]:
    """Rotate right by ``times`` positions: the last entry moves to the front."""
    t = tuple(p)
    if not t:
        return t
    s = times % len(t)
    return t[len(t) - s:] + t[:len(t) - s]


def is_euclidean_string(p: Sequence[int]) -> bool:
    if not p:
        raise RhythmError("empty string")
    if len(p) == 1:
        return True
    if p[-1] < 1:
        return False
    return tau(p) in rotations(p)


def is_reverse_euclidean_string(p: Sequence[int]) -> bool:
    return is_euclidean_string(tuple(reversed(p)))


def string_class_of(p: Sequence[int]) -> StringClass:
    fwd = is_euclidean_string(p)
    rev = is_reverse_euclidean_string(p)
    if fwd and rev:
        return StringClass.BOTH
    if fwd:
        return StringClass.EUCLIDEAN
    if rev:
        return StringClass.REVERSE_EUCLIDEAN
    return StringClass.NEITHER


def string_class(r: Rhythm) -> StringClass:
    """Classify the distance sequence read from the rhythm's first onset."""
    if r.k == 0:
        raise RhythmError("string classification needs at least one onset")
    return string_class_of(to_distance_seq(r))


def euclidean_strings(length: int, total: int) -> list[tuple[int, ...]]:
    """All Euclidean strings of the given length and entry sum (entries >= 0)."""
    from itertools import product

    return [
        p
        for p in product(range(total + 1), repeat=length)
        if sum(p) == total and is_euclidean_string(p)
    ]


def ellis_condition(length: int, total: int) -> bool:
    return gcd(length, total) == 1
