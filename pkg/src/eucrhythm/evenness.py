"""Evenness measures and the level-by-level characterisation of maximal evenness."""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import pi, sin

from . import _kernels
from .core import Rhythm, RhythmError, clockwise_dist, rotations, to_distance_seq

METRICS = ("chordal", "geodesic", "squared")
CHORDAL_TOL = 1e-9
DEFAULT_ENUMERATION_CAP = 20


def enumeration_cap() -> int:
    """Largest ``n`` the brute-force oracles accept without an explicit override."""
    return int(os.environ.get("EUCRHYTHM_MAX_N", DEFAULT_ENUMERATION_CAP))


def chord(d: float, n: int) -> float:
    """Chord length subtending an arc of ``d`` pulses on the unit circle."""
    return 2.0 * sin(pi * d / n)


@dataclass(frozen=True)
class EvennessReport:
    chordal_sum: float
    geodesic_sum: int
    squared_geodesic_sum: int
    per_level: tuple[float, ...]


@dataclass(frozen=True)
class LevelSum:
    distances: tuple[int, ...]  # clockwise d(r_i, r_{i+level}) in onset order
    chordal_sum: float


def evenness_chordal(r: Rhythm) -> float:
    return _kernels.pair_sums(r.onsets, r.n)[0]


def evenness_geodesic(r: Rhythm) -> int:
    return _kernels.pair_sums(r.onsets, r.n)[1]


def evenness_squared_geodesic(r: Rhythm) -> int:
    return _kernels.pair_sums(r.onsets, r.n)[2]


def evenness(r: Rhythm, metric: str = "chordal"):
    if metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}; choose from {METRICS}")
    return _kernels.pair_sums(r.onsets, r.n)[METRICS.index(metric)]


def level_sum(r: Rhythm, level: int) -> LevelSum:
    if not 1 <= level <= r.k:
        raise RhythmError(f"level {level} outside [1, {r.k}]")
    dists = []
    for i in range(r.k):
        d = clockwise_dist(r, i, i + level)
        dists.append(d if d else r.n)  # level == k wraps all the way round
    return LevelSum(tuple(dists), sum(chord(min(d, r.n - d), r.n) for d in dists))


def evenness_report(r: Rhythm) -> EvennessReport:
    chordal, geo, sq = _kernels.pair_sums(r.onsets, r.n)
    per_level = tuple(level_sum(r, l).chordal_sum for l in range(1, r.k + 1))
    return EvennessReport(chordal, geo, sq, per_level)


def _level_bounds(level: int, n: int, k: int) -> tuple[int, int]:
    return level * n // k, -(-level * n // k)


def has_property_star(r: Rhythm) -> bool:
    """Every level-``l`` clockwise distance is floor or ceil of ``l*n/k``."""
    if r.k < 2:
        raise RhythmError("property (*) needs at least two onsets")
    for level in range(1, r.k + 1):
        lo, hi = _level_bounds(level, r.n, r.k)
        for d in level_sum(r, level).distances:
            if d != lo and d != hi:
                return False
    return True


def has_property_star_star(r: Rhythm) -> bool:
    """Same test phrased on sums of consecutive gaps of the distance sequence."""
    if r.k < 2:
        raise RhythmError("property (**) needs at least two onsets")
    gaps = to_distance_seq(r)
    k = len(gaps)
    for rot in rotations(gaps):
        total = 0
        for level in range(1, k + 1):
            total += rot[level - 1]
            lo, hi = _level_bounds(level, r.n, k)
            if total != lo and total != hi:
                return False
    return True


def level_is_balanced(r: Rhythm, level: int) -> bool:
    lo, hi = _level_bounds(level, r.n, r.k)
    return all(d in (lo, hi) for d in level_sum(r, level).distances)


def brute_force_max_evenness(
    n: int, k: int, metric: str = "chordal", *, allow_large: bool = False
) -> list[Rhythm]:
    """All k-onset rhythms of timespan ``n`` attaining the maximum of ``metric``.

    Exhaustive over the ``C(n, k)`` subsets. Results are sorted by onset tuple.
    """
    if metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}; choose from {METRICS}")
    if not 0 <= k <= n:
        raise RhythmError(f"need 0 <= k <= n, got k={k}, n={n}")
    cap = enumeration_cap()
    if n > cap and not allow_large:
        raise RhythmError(
            f"n={n} exceeds the enumeration cap {cap}; pass allow_large=True "
            "or set EUCRHYTHM_MAX_N"
        )
    masks = _kernels.argmax_masks(n, k, metric, CHORDAL_TOL)
    return [Rhythm.from_mask(m, n) for m in masks]


def brute_force_max_level_sum(n: int, k: int, level: int) -> list[Rhythm]:
    """All k-onset rhythms maximising the level-``level`` chordal sum ``S(R, level)``."""
    from itertools import combinations

    scored = []
    for on in combinations(range(n), k):
        r = Rhythm(n, on)
        scored.append((level_sum(r, level).chordal_sum, r))
    best = max(v for v, _ in scored)
    return [r for v, r in scored if v >= best - CHORDAL_TOL]
