"""Distance multiplicities, deepness, deep-rhythm structure and shellings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import _kernels
from .core import Rhythm, RhythmError, divisors, gcd, rotate
from .generators import EXCEPTIONAL_F

GENERATED = "generated"
EXCEPTIONAL = "exceptional-F"

# F = {0,1,2,4}/6 sheds 4, 2, 1, 0 in that order
_F_SHELLING = (4, 2, 1, 0)


def histogram(r: Rhythm) -> dict[int, int]:
    """Nonzero geodesic distance -> number of onset pairs realising it."""
    counts = _kernels.geodesic_counts(r.onsets, r.n)
    return {d: c for d, c in enumerate(counts) if d and c}


def full_histogram(r: Rhythm) -> dict[int, int]:
    """Like ``histogram`` but lists every distance in ``1..n//2``, zeros included."""
    counts = _kernels.geodesic_counts(r.onsets, r.n)
    return {d: counts[d] for d in range(1, r.n // 2 + 1)}


def is_erdos_deep(r: Rhythm) -> bool:
    if r.k <= 2:
        return True
    mults = sorted(histogram(r).values())
    return mults == list(range(1, r.k))


def is_winograd_deep(r: Rhythm) -> bool:
    """Multiplicities of all distances ``1..n//2`` are pairwise distinct, absent ones
    counting as multiplicity zero."""
    mults = list(full_histogram(r).values())
    return len(set(mults)) == len(mults)


def distances_by_multiplicity(r: Rhythm) -> list[int]:
    """Distances sorted by increasing multiplicity (ties broken by distance)."""
    h = histogram(r)
    return sorted(h, key=lambda d: (h[d], d))


def generated_onsets(k: int, n: int, m: int) -> list[int]:
    return [i * m % n for i in range(k)]


@dataclass(frozen=True)
class DeepForm:
    """``r == rotate(scale(base, alpha), delta)`` with base F or ``D_{k, n', m'}``."""

    kind: str
    delta: int
    alpha: int
    k: int
    base_n: int
    m: Optional[int] = None

    def base(self) -> Rhythm:
        if self.kind == EXCEPTIONAL:
            return EXCEPTIONAL_F
        return Rhythm.from_onsets(generated_onsets(self.k, self.base_n, self.m), self.base_n)

    def reconstruct(self) -> Rhythm:
        b = self.base()
        scaled = Rhythm(b.n * self.alpha, tuple(self.alpha * x for x in b.onsets))
        return rotate(scaled, self.delta)

    def describe(self) -> str:
        if self.kind == EXCEPTIONAL:
            return f"F scaled by {self.alpha}, rotated by {self.delta}"
        return (
            f"D(k={self.k}, n={self.base_n}, m={self.m}) scaled by {self.alpha}, "
            f"rotated by {self.delta}"
        )


def _admissible_generators(k: int, n: int) -> list[int]:
    if n == 1:
        return [0]  # the one-pulse circle has no generator in [1, n//2]
    if k > n // 2 + 1:
        return []
    return [m for m in range(1, n // 2 + 1) if gcd(m, n) == 1]


def deep_witnesses(r: Rhythm) -> list[DeepForm]:
    """Every (alpha, delta, base) decomposition of ``r``, ordered by (alpha, m, delta).

    F-forms sort after generated forms at the same scale. Works for any rhythm;
    a non-deep rhythm simply has none.
    """
    n, k = r.n, r.k
    found = []
    starts = r.onsets if k else (0,)
    for alpha in divisors(n):
        base_n = n // alpha
        for delta in starts:
            if any((x - delta) % alpha for x in r.onsets):
                continue
            base = Rhythm.from_onsets(((x - delta) // alpha for x in r.onsets), base_n)
            for m in _admissible_generators(k, base_n):
                if set(generated_onsets(k, base_n, m)) == set(base.onsets):
                    found.append(DeepForm(GENERATED, delta, alpha, k, base_n, m))
            if base == EXCEPTIONAL_F:
                found.append(DeepForm(EXCEPTIONAL, delta, alpha, 4, 6))
    inf = n + 1
    found.sort(key=lambda f: (f.alpha, f.m if f.m is not None else inf, f.delta))
    return found


def characterize_deep(r: Rhythm) -> Optional[DeepForm]:
    """Structural witness for an Erdős-deep rhythm, or ``None`` if it is not deep."""
    if not is_erdos_deep(r):
        return None
    forms = deep_witnesses(r)
    if not forms:
        raise AssertionError(f"deep rhythm {r} has no structural witness")
    return forms[0]


def family_masks(n: int) -> set[int]:
    """Masks of every rotation of every scaling of F or an admissible ``D_{k,n',m'}``
    with total timespan ``n``. Built forwards from the families, independent of
    ``deep_witnesses``.
    """
    out: set[int] = set()
    for alpha in divisors(n):
        base_n = n // alpha
        bases = []
        for k in range(0, base_n + 1):
            for m in _admissible_generators(k, base_n):
                bases.append(generated_onsets(k, base_n, m))
        if base_n == 6:
            bases.append(list(EXCEPTIONAL_F.onsets))
        for onsets in bases:
            for delta in range(n):
                mask = 0
                for x in onsets:
                    mask |= 1 << ((alpha * x + delta) % n)
                out.add(mask)
    return out


def shelling(r: Rhythm) -> list[int]:
    """One onset-removal order keeping the rhythm Erdős-deep after every removal."""
    if not is_erdos_deep(r):
        raise RhythmError(f"{r} is not Erdős-deep, so it has no shelling")
    if r.k <= 2:
        return list(reversed(r.onsets))
    form = characterize_deep(r)
    if form.kind == EXCEPTIONAL:
        base_order = _F_SHELLING
    else:
        base_order = tuple(reversed(generated_onsets(form.k, form.base_n, form.m)))
    return [(form.alpha * x + form.delta) % r.n for x in base_order]


def validate_shelling(r: Rhythm, order: Sequence[int]) -> bool:
    if sorted(order) != list(r.onsets):
        raise RhythmError("shelling order must be a permutation of the onsets")
    remaining = set(r.onsets)
    for x in order:
        remaining.discard(x)
        if not is_erdos_deep(Rhythm.from_onsets(remaining, r.n)):
            return False
    return True


def shelling_from_patterns(patterns: Sequence[Rhythm]) -> list[int]:
    """Recover the removal order from a chain of rhythms, each one onset shorter."""
    order = []
    for a, b in zip(patterns, patterns[1:]):
        gone = set(a.onsets) - set(b.onsets)
        if a.n != b.n or len(gone) != 1 or not set(b.onsets) <= set(a.onsets):
            raise RhythmError(f"{b} is not {a} minus one onset")
        order.append(gone.pop())
    return order
