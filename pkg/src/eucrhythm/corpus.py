"""Bundled corpus of named Euclidean rhythms and claves."""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .classify import AksakClass, StringClass, aksak_class, string_class
from .core import (
    ParseError,
    Rhythm,
    format_distance_seq,
    gcd,
    parse_box,
    parse_distance_seq,
    same_necklace,
    to_distance_seq,
)
from .evenness import evenness_geodesic
from .generators import bjorklund

CORPUS_ENV = "EUCRHYTHM_CORPUS"
NECKLACE_TAG = "[necklace]"
CLAVE_GEODESIC_SUM = 48
_EUCLID_ID = re.compile(r"^E\((\d+),(\d+)\)$")


class CorpusError(ValueError):
    pass


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    k: int
    n: int
    pattern: str
    distance_seq: tuple[int, ...]
    aksak: AksakClass
    string_class: StringClass
    names: tuple[str, ...]
    notes: str
    line: int = 0

    @property
    def rhythm(self) -> Rhythm:
        return parse_box(self.pattern)

    @property
    def is_euclidean(self) -> bool:
        return _EUCLID_ID.match(self.id) is not None

    @property
    def is_necklace_only(self) -> bool:
        return self.notes.startswith(NECKLACE_TAG)

    @property
    def rotation_notes(self) -> str:
        if self.is_necklace_only:
            return self.notes[len(NECKLACE_TAG):].strip()
        return self.notes


def default_path() -> str:
    override = os.environ.get(CORPUS_ENV)
    if override:
        return override
    return str(resources.files("eucrhythm").joinpath("data/corpus.txt"))


def parse_line(text: str, lineno: int) -> CorpusEntry:
    fields = text.split("|")
    if len(fields) != 9:
        raise CorpusError(f"line {lineno}: expected 9 '|' fields, found {len(fields)}")
    ident, k, n, pattern, seq, aksak, sclass, names, notes = (f.strip() for f in fields)
    try:
        entry = CorpusEntry(
            id=ident,
            k=int(k),
            n=int(n),
            pattern=pattern,
            distance_seq=parse_distance_seq(seq),
            aksak=AksakClass(aksak),
            string_class=StringClass(sclass),
            names=tuple(s.strip() for s in names.split(";") if s.strip()),
            notes=notes,
            line=lineno,
        )
        parse_box(pattern)
    except (ValueError, ParseError) as exc:
        raise CorpusError(f"line {lineno}: {exc}") from None
    return entry


def read_entries(path: Optional[str] = None) -> list[CorpusEntry]:
    """Parse the data file without checking any invariant."""
    path = path or default_path()
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise CorpusError(f"cannot read corpus {path}: {exc.strerror}") from None
    entries = []
    for lineno, text in enumerate(lines, 1):
        if not text.strip() or text.lstrip().startswith("#"):
            continue
        entries.append(parse_line(text, lineno))
    return entries


def entry_problems(e: CorpusEntry) -> list[str]:
    """Every invariant the entry breaks, as readable messages."""
    where = f"{e.id} (line {e.line})"
    r = e.rhythm
    out = []
    if (r.k, r.n) != (e.k, e.n):
        out.append(f"{where}: pattern has k={r.k}, n={r.n}; fields say k={e.k}, n={e.n}")
        return out
    if to_distance_seq(r) != e.distance_seq:
        out.append(
            f"{where}: pattern gaps {format_distance_seq(to_distance_seq(r))} "
            f"!= stored {format_distance_seq(e.distance_seq)}"
        )
    if aksak_class(r) != e.aksak:
        out.append(f"{where}: aksak class is {aksak_class(r).value}, stored {e.aksak.value}")
    if string_class(r) != e.string_class:
        out.append(
            f"{where}: string class is {string_class(r).value}, stored {e.string_class.value}"
        )
    m = _EUCLID_ID.match(e.id)
    if m:
        if (int(m.group(1)), int(m.group(2))) != (e.k, e.n):
            out.append(f"{where}: id does not match k={e.k}, n={e.n}")
        if gcd(e.k, e.n) != 1:
            out.append(f"{where}: gcd(k, n) = {gcd(e.k, e.n)}")
        if not same_necklace(r, bjorklund(e.k, e.n)):
            out.append(f"{where}: not a rotation of bjorklund({e.k},{e.n})")
    else:
        if (e.k, e.n) != (5, 16):
            out.append(f"{where}: claves must have 5 onsets in 16 pulses")
        g = evenness_geodesic(r)
        if g != CLAVE_GEODESIC_SUM:
            out.append(f"{where}: geodesic evenness {g}, expected {CLAVE_GEODESIC_SUM}")
    return out


def corpus_problems(entries: list[CorpusEntry]) -> list[str]:
    out = []
    seen = set()
    for e in entries:
        if e.id in seen:
            out.append(f"{e.id} (line {e.line}): duplicate id")
        seen.add(e.id)
        out.extend(entry_problems(e))
    return out


def load_corpus(path: Optional[str] = None) -> list[CorpusEntry]:
    """Read and validate the corpus; any broken invariant raises ``CorpusError``."""
    entries = read_entries(path)
    problems = corpus_problems(entries)
    if problems:
        raise CorpusError("corpus failed validation:\n  " + "\n  ".join(problems))
    return entries


def _sort_key(e: CorpusEntry):
    return (e.n, e.k, e.id)


def query(
    entries: Optional[list[CorpusEntry]] = None,
    *,
    k: Optional[int] = None,
    n: Optional[int] = None,
    aksak: Optional[AksakClass] = None,
    string_cls: Optional[StringClass] = None,
    name: Optional[str] = None,
) -> list[CorpusEntry]:
    """Filter entries; all given criteria must match. Sorted by n, then k, then id."""
    if entries is None:
        entries = load_corpus()
    needle = name.lower() if name else None
    out = []
    for e in entries:
        if k is not None and e.k != k:
            continue
        if n is not None and e.n != n:
            continue
        if aksak is not None and e.aksak != aksak:
            continue
        if string_cls is not None and e.string_class != string_cls:
            continue
        if needle and not (
            needle in e.id.lower() or any(needle in s.lower() for s in e.names)
        ):
            continue
        out.append(e)
    return sorted(out, key=_sort_key)


def find(entries: list[CorpusEntry], ident: str) -> Optional[CorpusEntry]:
    key = ident.replace(" ", "").lower()
    for e in entries:
        if e.id.replace(" ", "").lower() == key:
            return e
    return None
