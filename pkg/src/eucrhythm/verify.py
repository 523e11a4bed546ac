"""Exhaustive small-n sweeps over the main structural results.

Each sweep returns a ``SweepResult``; nothing here raises on a failed check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Optional

from . import _kernels
from .applications import digital_line_runs
from .classify import aksak_class, ellis_condition
from .core import Rhythm, canonical_rotation, gcd, rotate, same_necklace
from .corpus import load_corpus
from .deepness import characterize_deep, family_masks, shelling, validate_shelling
from .evenness import brute_force_max_evenness, has_property_star
from .generators import ALGORITHMS, bjorklund, euclidean_recursive

MAX_EXAMPLES = 10


@dataclass
class SweepResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, msg: str):
        self.failures.append(msg)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        head = f"{status} {self.name}: {self.checked} cases checked"
        if self.failures:
            head += f", {len(self.failures)} counterexample(s)"
        lines = [head]
        lines += ["  " + n for n in self.notes]
        lines += ["  counterexample: " + f for f in self.failures[:MAX_EXAMPLES]]
        if len(self.failures) > MAX_EXAMPLES:
            lines.append(f"  ... and {len(self.failures) - MAX_EXAMPLES} more")
        return "\n".join(lines)


def orbit(r: Rhythm) -> set[Rhythm]:
    return {rotate(r, d) for d in range(r.n)}


def all_subsets(n: int, k: int):
    for on in combinations(range(n), k):
        yield Rhythm(n, on)


def even_equivalence(max_n: int = 32, brute_max_n: int = 14) -> SweepResult:
    """The generators agree up to rotation; for small n the brute-force chordal
    maxima and the rhythms with property (*) are both exactly that orbit."""
    res = SweepResult("even-equivalence")
    for n in range(2, max_n + 1):
        for k in range(2, n + 1):
            res.checked += 1
            ref = bjorklund(k, n)
            for name, algo in ALGORITHMS.items():
                if not same_necklace(algo(k, n), ref):
                    res.fail(f"{name}({k},{n}) = {algo(k, n)} is not a rotation of {ref}")
            if n > brute_max_n:
                continue
            expected = orbit(ref)
            best = set(brute_force_max_evenness(n, k, "chordal"))
            if best != expected:
                res.fail(f"(k={k}, n={n}): chordal maxima differ from the orbit of {ref}")
            starred = {r for r in all_subsets(n, k) if has_property_star(r)}
            if starred != expected:
                res.fail(f"(k={k}, n={n}): property (*) set differs from the orbit of {ref}")
    res.notes.append(f"generators compared for n <= {max_n}; brute force for n <= {brute_max_n}")
    return res


def even_uniqueness(max_n: int = 12) -> SweepResult:
    """Exactly one rotation orbit maximises chordal evenness for every (k, n).

    The squared-geodesic maxima are compared too, but only reported: that
    measure is convex in the distance and rewards antipodal pairs, so its
    maxima are generally not the even rhythms.
    """
    res = SweepResult("even-uniqueness")
    agree = 0
    for n in range(2, max_n + 1):
        for k in range(2, n + 1):
            res.checked += 1
            best = brute_force_max_evenness(n, k, "chordal")
            if set(best) != orbit(best[0]):
                res.fail(f"(k={k}, n={n}): chordal maxima span more than one orbit")
            if set(brute_force_max_evenness(n, k, "squared")) == set(best):
                agree += 1
    res.notes.append(f"one orbit per (k, n) for all 2 <= k <= n <= {max_n}")
    res.notes.append(
        f"squared-geodesic maxima equal the chordal maxima for {agree} of {res.checked} (k, n)"
    )
    return res


def deep_characterization(max_n: int = 16, shelling_max_n: int = 14) -> SweepResult:
    """Erdős-deep rhythms are exactly the rotated, scaled copies of F and of the
    admissible generated rhythms; every witness rebuilds its rhythm; every deep
    rhythm has a valid shelling."""
    res = SweepResult("deep-characterization")
    for n in range(1, max_n + 1):
        erdos, _ = _kernels.deep_masks(n)
        res.checked += 1 << n
        erdos_set = set(erdos)
        fam = family_masks(n)
        for m in sorted(erdos_set - fam):
            res.fail(f"{Rhythm.from_mask(m, n)} is deep but not in the families")
        for m in sorted(fam - erdos_set):
            res.fail(f"{Rhythm.from_mask(m, n)} is in the families but not deep")
        for m in erdos:
            r = Rhythm.from_mask(m, n)
            form = characterize_deep(r)
            if form is None or form.reconstruct() != r:
                res.fail(f"{r}: witness {form} does not rebuild the rhythm")
            elif n <= shelling_max_n and not validate_shelling(r, shelling(r)):
                res.fail(f"{r}: shelling {shelling(r)} is invalid")
    res.notes.append(f"all 2^n subsets for n <= {max_n}; shellings for n <= {shelling_max_n}")
    return res


def winograd_implies_erdos(max_n: int = 16) -> SweepResult:
    res = SweepResult("winograd-implies-erdos")
    for n in range(1, max_n + 1):
        erdos, winograd = _kernels.deep_masks(n)
        res.checked += len(winograd)
        erdos_set = set(erdos)
        for m in winograd:
            if m not in erdos_set:
                res.fail(f"{Rhythm.from_mask(m, n)} is Winograd-deep but not Erdős-deep")
    return res


def erd_deep_gcd(max_n: int = 20) -> SweepResult:
    """A maximally even rhythm with k <= n//2 + 1 is Erdős-deep iff gcd(k, n) = 1."""
    from .deepness import is_erdos_deep

    res = SweepResult("erd-deep-gcd")
    for n in range(2, max_n + 1):
        for k in range(2, n // 2 + 2):
            res.checked += 1
            deep = {is_erdos_deep(r) for r in brute_force_max_evenness(n, k)}
            coprime = gcd(k, n) == 1
            if deep != {coprime}:
                res.fail(f"(k={k}, n={n}): deep={sorted(deep)}, gcd={gcd(k, n)}")
    return res


def string_lists(path: Optional[str] = None, max_length: int = 8, max_entry: int = 4) -> SweepResult:
    """Stored corpus classifications match recomputation, and Euclidean strings
    exist exactly for coprime (length, sum) and are then unique."""
    from .classify import string_class

    res = SweepResult("string-lists")
    for e in load_corpus(path):
        res.checked += 1
        r = e.rhythm
        if string_class(r) != e.string_class:
            res.fail(f"{e.id}: string class {string_class(r).value} != {e.string_class.value}")
        if aksak_class(r) != e.aksak:
            res.fail(f"{e.id}: aksak class {aksak_class(r).value} != {e.aksak.value}")
    for length in range(1, max_length + 1):
        found = _kernels.euclidean_string_counts(length, max_entry)
        for total in range(0, length * max_entry + 1):
            res.checked += 1
            strings = found.get(total, [])
            want = 1 if ellis_condition(length, total) else 0
            if len(strings) != want:
                res.fail(f"length {length}, sum {total}: {len(strings)} Euclidean strings")
    return res


def digital_line(max_n: int = 64) -> SweepResult:
    res = SweepResult("digital-line")
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            res.checked += 1
            upper = digital_line_runs(n, k, "upper")
            if canonical_rotation(upper) != canonical_rotation(euclidean_recursive(n, k)):
                res.fail(f"(n={n}, k={k}): runs {upper} are not a rotation of E({k},{n})")
    return res


SWEEPS: dict[str, tuple[Callable[..., SweepResult], int]] = {
    "even-equivalence": (lambda max_n: even_equivalence(max_n, min(max_n, 14)), 32),
    "even-uniqueness": (even_uniqueness, 12),
    "deep-characterization": (lambda max_n: deep_characterization(max_n, min(max_n, 14)), 16),
    "winograd-implies-erdos": (winograd_implies_erdos, 16),
    "erd-deep-gcd": (erd_deep_gcd, 20),
    "string-lists": (lambda max_n: string_lists(max_length=max_n), 8),
    "digital-line": (digital_line, 64),
}
