"""Upper-half-plane rendering of the Farey tessellation with the geodesic
from the imaginary-axis basepoint to a target rational.

Output is deterministic for fixed inputs: elements are emitted in a fixed
order with fixed-precision coordinates.  Structure is designed for
assertions rather than pixels: every neighbor arc carries a ``data-edge``
attribute and the geodesic has ``id="geodesic"``.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .rationals import INFINITY, ZERO, Rational, farey_level, format_left_right, parents, rationals_by_level, to_cf

BASEPOINT_HEIGHT = 1.0
SCALE = 140.0
MARGIN = 30.0
LABEL_BAND = 26.0
LABEL_MAX_LEVEL = 5


def _fmt(v: float) -> str:
    return f"{v:.4f}"


def edge_name(u: Rational, v: Rational) -> str:
    """Canonical ``data-edge`` value: finite endpoints ascending, 1/0 last."""
    if u.is_infinity:
        u, v = v, u
    if not v.is_infinity and Fraction(v.p, v.q) < Fraction(u.p, u.q):
        u, v = v, u
    return f"{u}--{v}"


def tessellation_edges(depth: int) -> list[tuple[Rational, Rational]]:
    """All neighbor pairs among rationals of level <= depth together with
    the two base points: each rational contributes its two parent edges,
    plus the base edge (0/1, 1/0)."""
    edges: list[tuple[Rational, Rational]] = [(ZERO, INFINITY)]
    for sign in ("pos", "neg"):
        for x in rationals_by_level(depth, sign):
            lo, hi = parents(x)
            edges.append((x, lo))
            edges.append((x, hi))
    return edges


def farey_svg(target: Rational, depth: int) -> str:
    """Render the tessellation to the given depth plus the geodesic from
    the basepoint (at height 1 on the imaginary axis) to the target."""
    if target.is_infinity:
        raise ValueError("target must be finite")
    if depth < 1:
        raise ValueError("depth must be >= 1")

    t = target.p / target.q
    ticks = [ZERO] + [
        x for sign in ("pos", "neg") for x in rationals_by_level(depth, sign)
    ]
    xs = [x.p / x.q for x in ticks] + [t, -1.0, 1.0]
    xmin = min(xs) - 0.5
    xmax = max(xs) + 0.5

    if t == 0.0:
        geo_cx: float | None = None
        geo_r = 0.0
        ytop = max(1.25, BASEPOINT_HEIGHT + 0.25)
    else:
        geo_cx = (t * t - BASEPOINT_HEIGHT**2) / (2.0 * t)
        geo_r = abs(t - geo_cx)
        ytop = max(1.25, geo_r, BASEPOINT_HEIGHT + 0.25)

    width = (xmax - xmin) * SCALE + 2 * MARGIN
    height = ytop * SCALE + MARGIN + LABEL_BAND

    def px(x: float) -> float:
        return MARGIN + (x - xmin) * SCALE

    def py(y: float) -> float:
        return MARGIN + (ytop - y) * SCALE

    y0 = py(0.0)
    parts: list[str] = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<line class="real-axis" x1="{_fmt(px(xmin))}" y1="{_fmt(y0)}" '
        f'x2="{_fmt(px(xmax))}" y2="{_fmt(y0)}" stroke="black" stroke-width="1"/>',
    ]

    for u, v in tessellation_edges(depth):
        name = edge_name(u, v)
        if u.is_infinity or v.is_infinity:
            fin = v if u.is_infinity else u
            x = px(fin.p / fin.q)
            parts.append(
                f'<line class="farey-arc" data-edge="{name}" x1="{_fmt(x)}" '
                f'y1="{_fmt(y0)}" x2="{_fmt(x)}" y2="{_fmt(py(ytop))}" '
                f'stroke="steelblue" stroke-width="0.8" fill="none"/>'
            )
        else:
            x1, x2 = sorted((u.p / u.q, v.p / v.q))
            r = (x2 - x1) / 2.0 * SCALE
            parts.append(
                f'<path class="farey-arc" data-edge="{name}" '
                f'd="M {_fmt(px(x1))} {_fmt(y0)} A {_fmt(r)} {_fmt(r)} 0 0 1 '
                f'{_fmt(px(x2))} {_fmt(y0)}" stroke="steelblue" '
                f'stroke-width="0.8" fill="none"/>'
            )

    for x in ticks:
        v = x.p / x.q
        cls = "tick target" if x == target else "tick"
        parts.append(
            f'<line class="{cls}" x1="{_fmt(px(v))}" y1="{_fmt(y0 - 3)}" '
            f'x2="{_fmt(px(v))}" y2="{_fmt(y0 + 3)}" stroke="black" stroke-width="1"/>'
        )
        if farey_level(x) <= min(depth, LABEL_MAX_LEVEL):
            parts.append(
                f'<text class="tick-label" x="{_fmt(px(v))}" y="{_fmt(y0 + 14)}" '
                f'font-size="9" text-anchor="middle">{x}</text>'
            )

    if geo_cx is None:
        parts.append(
            f'<path id="geodesic" d="M {_fmt(px(0.0))} {_fmt(py(BASEPOINT_HEIGHT))} '
            f'L {_fmt(px(0.0))} {_fmt(y0)}" stroke="crimson" stroke-width="1.4" fill="none"/>'
        )
    else:
        theta_start = math.atan2(BASEPOINT_HEIGHT, 0.0 - geo_cx)
        theta_end = math.atan2(0.0, t - geo_cx)
        sweep = 1 if theta_start > theta_end else 0
        parts.append(
            f'<path id="geodesic" d="M {_fmt(px(0.0))} {_fmt(py(BASEPOINT_HEIGHT))} '
            f'A {_fmt(geo_r * SCALE)} {_fmt(geo_r * SCALE)} 0 0 {sweep} '
            f'{_fmt(px(t))} {_fmt(y0)}" stroke="crimson" stroke-width="1.4" fill="none"/>'
        )

    parts.append(
        f'<circle class="basepoint" cx="{_fmt(px(0.0))}" cy="{_fmt(py(BASEPOINT_HEIGHT))}" '
        f'r="2.5" fill="crimson"/>'
    )
    lr = format_left_right(to_cf(target)) if target != ZERO else "+(0)"
    parts.append(
        f'<text id="lr-sequence" x="{_fmt(MARGIN)}" y="{_fmt(MARGIN * 0.6)}" '
        f'font-size="11">{target}: left-right {lr}</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def write_farey_svg(target: Rational, depth: int, path: str) -> None:
    content = farey_svg(target, depth)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(content)
