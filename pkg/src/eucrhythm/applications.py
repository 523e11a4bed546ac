"""Leap-year calendars and digital straight lines as even distributions."""

from __future__ import annotations

from .core import Rhythm, RhythmError, rotate
from .generators import bjorklund

JEWISH_CYCLE = 19
JEWISH_LEAP_POSITIONS = (3, 6, 8, 11, 14, 17, 19)  # 1-indexed years within the cycle
JEWISH_PATTERN_START = 7  # 1-indexed pulse of bjorklund(7,19) that begins year 1


def _check_year(y: int):
    if y < 1:
        raise RhythmError(f"year must be >= 1, got {y}")


def jewish_leap_year(y: int) -> bool:
    _check_year(y)
    pos = y % JEWISH_CYCLE or JEWISH_CYCLE
    return pos in JEWISH_LEAP_POSITIONS


def jewish_leap_pattern() -> Rhythm:
    """``bjorklund(7, 19)`` read from its 7th pulse; onset ``i`` marks year ``i + 1``."""
    return rotate(bjorklund(7, JEWISH_CYCLE), -(JEWISH_PATTERN_START - 1))


def gregorian_leap_year(y: int) -> bool:
    _check_year(y)
    return y % 4 == 0 and (y % 100 != 0 or y % 400 == 0)


def digital_line_runs(n: int, k: int, side: str = "lower") -> tuple[int, ...]:
    """Pixels per row of the digitised segment from (0, 0) with slope ``k/n``.

    Column ``j`` lights row ``floor(j*k/n)``; the upper boundary reads the rows
    in reverse.
    """
    if side not in ("lower", "upper"):
        raise ValueError("side must be 'lower' or 'upper'")
    if n < 1 or k < 1:
        raise RhythmError("width and height must be positive")
    if k > n:
        raise RhythmError("only lines with slope at most 1 are supported")
    runs = [0] * k
    for j in range(n):
        runs[j * k // n] += 1
    if side == "upper":
        runs.reverse()
    return tuple(runs)
