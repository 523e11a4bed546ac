"""Euclidean, maximally even and deep rhythms on a discrete circle."""

from ._kernels import BACKEND
from .core import (
    ParseError,
    Rhythm,
    RhythmError,
    canonical_necklace,
    parse_rhythm,
    rotate,
    scale,
    reverse,
    to_box,
    to_distance_seq,
)
from .generators import bjorklund, clough_douthett, euclidean_recursive, generated, snap

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ParseError",
    "Rhythm",
    "RhythmError",
    "bjorklund",
    "canonical_necklace",
    "clough_douthett",
    "euclidean_recursive",
    "generated",
    "parse_rhythm",
    "reverse",
    "rotate",
    "scale",
    "snap",
    "to_box",
    "to_distance_seq",
]
