"""Cyclic rhythm representation and the elementary operations on it.

A rhythm of timespan ``n`` is a set of onset pulses drawn from
``{0, ..., n-1}``, read clockwise around a circle of circumference ``n``.
Three text notations are supported:

* box notation, ``"x..x..x."`` (``'x'`` onset, ``'.'`` rest),
* clockwise distance sequence, ``"(3,3,2)"``,
* subset notation, ``"{0,3,6}/8"``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

ONSET = "x"
REST = "."


class RhythmError(ValueError):
    """Raised when an operation's precondition on a rhythm does not hold."""


class ParseError(RhythmError):
    """Raised for malformed text input; ``index`` points at the offending char."""

    def __init__(self, message: str, index: Optional[int] = None):
        super().__init__(message)
        self.index = index


@dataclass(frozen=True, order=True)
class Rhythm:
    n: int
    onsets: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise RhythmError(f"timespan must be a positive integer, got {self.n!r}")
        onsets = tuple(self.onsets)
        prev = -1
        for x in onsets:
            if not 0 <= x < self.n:
                raise RhythmError(f"onset {x} outside [0, {self.n - 1}]")
            if x <= prev:
                raise RhythmError("onsets must be strictly increasing")
            prev = x
        object.__setattr__(self, "onsets", onsets)

    @classmethod
    def from_onsets(cls, onsets: Iterable[int], n: int) -> "Rhythm":
        """Build from any iterable of pulses; values are reduced mod ``n``."""
        s = sorted({x % n for x in onsets})
        return cls(n, tuple(s))

    @property
    def k(self) -> int:
        return len(self.onsets)

    def __len__(self) -> int:
        return len(self.onsets)

    def __contains__(self, pulse: int) -> bool:
        return pulse % self.n in self.onsets

    def __str__(self) -> str:
        return format_subset(self)

    def mask(self) -> int:
        m = 0
        for x in self.onsets:
            m |= 1 << x
        return m

    @classmethod
    def from_mask(cls, mask: int, n: int) -> "Rhythm":
        return cls(n, tuple(i for i in range(n) if mask >> i & 1))


@dataclass(frozen=True)
class NecklaceClass:
    canonical: tuple[int, ...]
    n: int
    k: int


# -- number theory -----------------------------------------------------------


def gcd(a: int, b: int) -> int:
    """Greatest common divisor by Euclid's division recursion."""
    if a < 0 or b < 0:
        raise ValueError("gcd expects non-negative integers")
    if a == 0:
        return b
    return gcd(b % a, a)


def mod_inverse(x: int, m: int) -> Optional[int]:
    """Inverse of ``x`` modulo ``m`` in ``[1, m-1]``, or ``None`` if none exists."""
    if m < 2:
        raise ValueError("modulus must be at least 2")
    try:
        return pow(x, -1, m)
    except ValueError:
        return None


# -- text formats ------------------------------------------------------------


def parse_box(text: str) -> Rhythm:
    """Parse box notation such as ``"[x . . x . . x .]"`` or ``"x..x..x."``.

    Whitespace and one pair of surrounding brackets are ignored.
    """
    stripped = text.strip()
    start = len(text) - len(text.lstrip())
    body = stripped
    if body.startswith("["):
        if not body.endswith("]"):
            raise ParseError("unbalanced '[' in box pattern", start)
        body = body[1:-1]
        start += 1
    marks = []
    for offset, ch in enumerate(body):
        if ch in "xX":
            marks.append(True)
        elif ch == REST:
            marks.append(False)
        elif ch.isspace():
            continue
        else:
            raise ParseError(
                f"unexpected character {ch!r} at index {start + offset}", start + offset
            )
    if not marks:
        raise ParseError("empty box pattern")
    return Rhythm(len(marks), tuple(i for i, on in enumerate(marks) if on))


def to_box(r: Rhythm) -> str:
    cells = [REST] * r.n
    for x in r.onsets:
        cells[x] = ONSET
    return "".join(cells)


def format_distance_seq(gaps: Sequence[int]) -> str:
    # a lone multi-digit gap gets a trailing comma so it does not read as "(1,1)"
    tail = "," if len(gaps) == 1 and gaps[0] > 9 else ""
    return "(" + ",".join(str(g) for g in gaps) + tail + ")"


def parse_distance_seq(text: str) -> tuple[int, ...]:
    """Parse ``"(3,3,2)"``; the compact ``"(332)"`` form is accepted for single digits."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ParseError("distance sequence must be parenthesised", 0)
    body = s[1:-1].strip()
    if not body:
        raise ParseError("empty distance sequence")
    if "," in body:
        parts = [p.strip() for p in body.rstrip(", ").split(",")]
    else:
        parts = list(body.replace(" ", ""))
    try:
        gaps = tuple(int(p) for p in parts)
    except ValueError:
        raise ParseError(f"non-integer entry in distance sequence {text!r}") from None
    if any(g < 1 for g in gaps):
        raise ParseError("distance sequence entries must be positive")
    return gaps


def format_subset(r: Rhythm) -> str:
    return "{" + ",".join(str(x) for x in r.onsets) + "}/" + str(r.n)


_SUBSET_RE = re.compile(r"^\{\s*([0-9,\s]*)\}\s*/\s*(\d+)$")


def parse_subset(text: str) -> Rhythm:
    m = _SUBSET_RE.match(text.strip())
    if not m:
        raise ParseError(f"not a subset pattern: {text!r}")
    n = int(m.group(2))
    body = m.group(1).strip()
    values = [int(v) for v in body.split(",") if v.strip()] if body else []
    if n < 1:
        raise ParseError("timespan must be positive")
    if any(v >= n for v in values) or len(set(values)) != len(values):
        raise ParseError(f"onsets must be distinct values below {n}")
    return Rhythm(n, tuple(sorted(values)))


def parse_rhythm(text: str) -> Rhythm:
    """Accept any of the three notations; a distance sequence starts at pulse 0."""
    s = text.strip()
    if s.startswith("{"):
        return parse_subset(s)
    if s.startswith("("):
        gaps = parse_distance_seq(s)
        return from_distance_seq(gaps, 0, sum(gaps))
    return parse_box(s)


# -- conversions and distances -----------------------------------------------


def _require_onsets(r: Rhythm, what: str):
    if r.k == 0:
        raise RhythmError(f"{what} needs at least one onset")


def to_distance_seq(r: Rhythm) -> tuple[int, ...]:
    """Clockwise inter-onset gaps, starting at the smallest onset."""
    _require_onsets(r, "a distance sequence")
    on = r.onsets
    k = len(on)
    return tuple((on[(i + 1) % k] - on[i]) % r.n or r.n for i in range(k))


def from_distance_seq(gaps: Sequence[int], start: int, n: int) -> Rhythm:
    if sum(gaps) != n:
        raise RhythmError(f"gaps sum to {sum(gaps)}, expected {n}")
    if any(g < 1 for g in gaps):
        raise RhythmError("gaps must be positive")
    if not 0 <= start < n:
        raise RhythmError(f"start {start} outside [0, {n - 1}]")
    pos = start
    onsets = []
    for g in gaps:
        onsets.append(pos % n)
        pos += g
    return Rhythm.from_onsets(onsets, n)


def clockwise_dist(r: Rhythm, i: int, j: int) -> int:
    _require_onsets(r, "clockwise distance")
    k = r.k
    return (r.onsets[j % k] - r.onsets[i % k]) % r.n


def geodesic_dist(r: Rhythm, i: int, j: int) -> int:
    return min(clockwise_dist(r, i, j), clockwise_dist(r, j, i))


# -- symmetries ---------------------------------------------------------------


def rotate(r: Rhythm, delta: int) -> Rhythm:
    return Rhythm.from_onsets((x + delta for x in r.onsets), r.n)


def scale(r: Rhythm, alpha: int) -> Rhythm:
    if alpha < 1:
        raise RhythmError("scaling factor must be at least 1")
    return Rhythm(r.n * alpha, tuple(alpha * x for x in r.onsets))


def reverse(r: Rhythm) -> Rhythm:
    """The rhythm played backwards, anchored so its first onset is pulse 0."""
    gaps = to_distance_seq(r)
    return from_distance_seq(gaps[::-1], 0, r.n)


def rotations(seq: Sequence[int]) -> list[tuple[int, ...]]:
    t = tuple(seq)
    return [t[i:] + t[:i] for i in range(len(t))] or [t]


def canonical_rotation(seq: Sequence[int]) -> tuple[int, ...]:
    return min(rotations(seq))


def canonical_necklace(r: Rhythm) -> NecklaceClass:
    return NecklaceClass(canonical_rotation(to_distance_seq(r)), r.n, r.k)


def same_necklace(a: Rhythm, b: Rhythm) -> bool:
    return canonical_necklace(a) == canonical_necklace(b)


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def period(r: Rhythm) -> int:
    """Smallest ``p`` dividing ``n`` with ``rotate(r, p) == r``."""
    _require_onsets(r, "period")
    for p in divisors(r.n):
        if rotate(r, p) == r:
            return p
    return r.n  # pragma: no cover - p = n always matches


is_periodic = period
