"""One-stop structural report on a rhythm, as used by the command line."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .classify import aksak_class, string_class
from .core import Rhythm, format_distance_seq, format_subset, period, to_box, to_distance_seq
from .deepness import (
    DeepForm,
    characterize_deep,
    histogram,
    is_erdos_deep,
    is_winograd_deep,
    shelling,
)
from .evenness import (
    evenness_chordal,
    evenness_geodesic,
    evenness_squared_geodesic,
    has_property_star,
)


@dataclass(frozen=True)
class AnalysisReport:
    rhythm: Rhythm
    box: str
    distance_seq: Optional[tuple[int, ...]]
    subset: str
    chordal: float
    geodesic: int
    squared_geodesic: int
    histogram: dict[int, int]
    erdos_deep: bool
    winograd_deep: bool
    deep_form: Optional[DeepForm]
    shelling: Optional[list[int]]
    aksak: Optional[str]
    string_class: Optional[str]
    property_star: Optional[bool]
    period: Optional[int]


def analyze(r: Rhythm) -> AnalysisReport:
    has_onsets = r.k >= 1
    deep = is_erdos_deep(r)
    return AnalysisReport(
        rhythm=r,
        box=to_box(r),
        distance_seq=to_distance_seq(r) if has_onsets else None,
        subset=format_subset(r),
        chordal=evenness_chordal(r),
        geodesic=evenness_geodesic(r),
        squared_geodesic=evenness_squared_geodesic(r),
        histogram=histogram(r),
        erdos_deep=deep,
        winograd_deep=is_winograd_deep(r),
        deep_form=characterize_deep(r) if deep else None,
        shelling=shelling(r) if deep else None,
        aksak=aksak_class(r).value if has_onsets else None,
        string_class=string_class(r).value if has_onsets else None,
        property_star=has_property_star(r) if r.k >= 2 else None,
        period=period(r) if has_onsets else None,
    )


def _yn(flag: Optional[bool]) -> str:
    if flag is None:
        return "n/a"
    return "yes" if flag else "no"


def render_report(rep: AnalysisReport) -> str:
    hist = ", ".join(f"{d}:{c}" for d, c in sorted(rep.histogram.items(), key=lambda t: (t[1], t[0])))
    rows = [
        ("box", rep.box),
        ("distance sequence", format_distance_seq(rep.distance_seq) if rep.distance_seq else "n/a"),
        ("subset", rep.subset),
        ("onsets / pulses", f"{rep.rhythm.k} / {rep.rhythm.n}"),
        ("period", str(rep.period) if rep.period is not None else "n/a"),
        ("evenness (chordal)", f"{rep.chordal:.9f}"),
        ("evenness (geodesic)", str(rep.geodesic)),
        ("evenness (squared)", str(rep.squared_geodesic)),
        ("maximally even (*)", _yn(rep.property_star)),
        ("histogram", "{" + hist + "}"),
        ("Erdős-deep", _yn(rep.erdos_deep)),
        ("Winograd-deep", _yn(rep.winograd_deep)),
        ("deep form", rep.deep_form.describe() if rep.deep_form else "n/a"),
        ("shelling", " ".join(map(str, rep.shelling)) if rep.shelling is not None else "n/a"),
        ("aksak", rep.aksak or "n/a"),
        ("string class", rep.string_class or "n/a"),
    ]
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)
