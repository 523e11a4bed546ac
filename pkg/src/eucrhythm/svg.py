"""Clock-diagram SVG rendering: pulse 0 at the top, time running clockwise."""

from __future__ import annotations

from math import cos, pi, sin

from .core import Rhythm, format_subset, to_distance_seq

# layout, in SVG user units
SIZE = 320
CENTER = SIZE / 2
RADIUS = 110
TICK = 8
DOT_RADIUS = 6
PULSE_LABEL_OFFSET = 22
GAP_LABEL_OFFSET = 40
FONT_SIZE = 11
GAP_FONT_SIZE = 13
STROKE = "#222"
ONSET_FILL = "#c0392b"
POLYGON_FILL = "#f5d6d0"


def _point(pulse: float, n: int, radius: float) -> tuple[float, float]:
    angle = 2 * pi * pulse / n
    return CENTER + radius * sin(angle), CENTER - radius * cos(angle)


def _f(x: float) -> str:
    s = f"{x:.2f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def render_svg(r: Rhythm, title: str | None = None) -> str:
    n = r.n
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f"<title>{title or format_subset(r)}</title>",
        f'<circle cx="{_f(CENTER)}" cy="{_f(CENTER)}" r="{RADIUS}" fill="none" '
        f'stroke="{STROKE}" stroke-width="1.5"/>',
    ]
    if r.k >= 2:
        pts = " ".join(f"{_f(x)},{_f(y)}" for x, y in (_point(p, n, RADIUS) for p in r.onsets))
        out.append(
            f'<polygon points="{pts}" fill="{POLYGON_FILL}" stroke="{ONSET_FILL}" '
            f'stroke-width="2"/>'
        )
    for p in range(n):
        x1, y1 = _point(p, n, RADIUS - TICK / 2)
        x2, y2 = _point(p, n, RADIUS + TICK / 2)
        out.append(
            f'<line class="tick" x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}" '
            f'stroke="{STROKE}"/>'
        )
        lx, ly = _point(p, n, RADIUS + PULSE_LABEL_OFFSET)
        out.append(
            f'<text class="pulse" x="{_f(lx)}" y="{_f(ly)}" font-size="{FONT_SIZE}" '
            f'text-anchor="middle" dominant-baseline="central">{p}</text>'
        )
    if r.k >= 1:
        for start, gap in zip(r.onsets, to_distance_seq(r)):
            mid = start + gap / 2
            gx, gy = _point(mid, n, RADIUS - GAP_LABEL_OFFSET)
            out.append(
                f'<text class="gap" x="{_f(gx)}" y="{_f(gy)}" font-size="{GAP_FONT_SIZE}" '
                f'text-anchor="middle" dominant-baseline="central">{gap}</text>'
            )
    for p in r.onsets:
        x, y = _point(p, n, RADIUS)
        out.append(
            f'<circle class="onset" cx="{_f(x)}" cy="{_f(y)}" r="{DOT_RADIUS}" '
            f'fill="{ONSET_FILL}"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_svg(r: Rhythm, path: str, title: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_svg(r, title))
