"""Walls as curves in the (alpha, s)-slice, chamber lookup, and SVG output.

A wall with intercept alpha0 is the hyperbola (s + 1/6) alpha^2 = alpha0^2 / 6.
Everything except the SVG coordinates is exact.
"""
from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence, Union

from .bounds import BoundReport
from .chern import RatLike, StabilityPoint, rat, rat_str
from .enumeration import WallCatalog, distinct_walls

SAMPLES = 256


@dataclass(frozen=True)
class WallCurve:
    alpha0_sq: Fraction
    label: str
    actual: Optional[bool] = None


def wall_s_at(alpha0_sq: RatLike, alpha_sq: RatLike) -> Fraction:
    """s on the wall at the given alpha^2; values <= 0 lie outside the slice."""
    a2 = rat(alpha_sq)
    if a2 <= 0:
        raise ValueError("alpha^2 must be positive")
    return rat(alpha0_sq) / (6 * a2) - Fraction(1, 6)


@dataclass(frozen=True)
class Chamber:
    q: Fraction
    walls_below: tuple[Fraction, ...]
    walls_above: tuple[Fraction, ...]
    on_wall: Optional[Fraction]

    @property
    def single_chamber(self) -> bool:
        return not self.walls_below and not self.walls_above and self.on_wall is None

    @property
    def outermost(self) -> bool:
        """True above every wall, i.e. on the Gieseker side."""
        return not self.walls_above and self.on_wall is None


def classify_point(p: StabilityPoint, cat: Union[WallCatalog, Sequence[Fraction]]) -> Chamber:
    walls = distinct_walls(cat) if isinstance(cat, WallCatalog) else sorted(set(cat), reverse=True)
    q = p.q
    below = tuple(a for a in walls if a / 6 < q)
    above = tuple(a for a in walls if a / 6 > q)
    on = next((a for a in walls if a / 6 == q), None)
    return Chamber(q, below, above, on)


def wall_curves(cat: WallCatalog) -> list[WallCurve]:
    out = []
    for a, idx in cat.walls.items():
        flags = [cat.candidates[i].actual for i in idx]
        actual = True if any(f is True for f in flags) else None
        out.append(WallCurve(a, f"alpha0^2 = {rat_str(a)}", actual))
    return out


@dataclass(frozen=True)
class View:
    alpha_max: float
    s_max: float
    width: int = 640
    height: int = 480

    def __post_init__(self) -> None:
        if self.alpha_max <= 0 or self.s_max <= 0 or self.width <= 0 or self.height <= 0:
            raise ValueError("view must have positive extent")


def default_view(cat: WallCatalog) -> View:
    walls = distinct_walls(cat)
    top = float(walls[0]) if walls else 1.0
    return View(alpha_max=round(1.25 * math.sqrt(top), 3) or 1.0, s_max=2.0)


def _sample_wall(alpha0_sq: Fraction) -> list[tuple[float, float]]:
    a0 = math.sqrt(alpha0_sq)
    pts = []
    for i in range(1, SAMPLES + 1):
        a = a0 * 64.0 ** ((i - SAMPLES) / SAMPLES)
        pts.append((a, float(alpha0_sq) / (6 * a * a) - 1 / 6))
    return pts


class _Frame:
    margin = 48

    def __init__(self, view: View):
        self.view = view
        self.w = view.width - 2 * self.margin
        self.h = view.height - 2 * self.margin

    def xy(self, a: float, s: float) -> str:
        x = self.margin + a / self.view.alpha_max * self.w
        y = self.view.height - self.margin - s / self.view.s_max * self.h
        return f"{x:.2f},{y:.2f}"

    def visible(self, a: float, s: float) -> bool:
        return 0 < a <= self.view.alpha_max and 0 <= s <= self.view.s_max


def catalog_digest(cat: WallCatalog) -> str:
    return hashlib.sha256(cat.to_json().encode()).hexdigest()


def render_svg(cat: WallCatalog, bounds: BoundReport, view: Optional[View] = None,
               path: Union[str, Path, None] = None) -> str:
    """Draw the walls of ``cat`` and return the SVG text; also write it when ``path`` is given.

    Killing wall in red, largest wall in blue, other walls orange; the
    rank-zero region (s + 1/6) alpha^2 > D/3 is shaded green.
    """
    view = view or default_view(cat)
    fr = _Frame(view)
    walls = distinct_walls(cat)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f"<!-- wallkit catalog sha256={catalog_digest(cat)} -->",
        f'<svg version="1.1" xmlns="http://www.w3.org/2000/svg" '
        f'width="{view.width}" height="{view.height}" viewBox="0 0 {view.width} {view.height}">',
        f'<rect x="0" y="0" width="{view.width}" height="{view.height}" fill="white"/>',
    ]

    if walls:
        rz = bounds.rank_zero_threshold_sq
        a_start = math.sqrt(float(rz) / (6 * view.s_max + 1))
        if a_start < view.alpha_max:
            pts = []
            for i in range(SAMPLES + 1):
                a = a_start * (view.alpha_max / a_start) ** (i / SAMPLES)
                pts.append(fr.xy(a, max(0.0, float(rz) / (6 * a * a) - 1 / 6)))
            pts += [fr.xy(view.alpha_max, view.s_max), fr.xy(a_start, view.s_max)]
            lines.append(f'<polygon class="rank-zero" points="{" ".join(pts)}" '
                         f'fill="#2ca02c" fill-opacity="0.15" stroke="none"/>')

    x0, y0 = fr.xy(0, 0).split(",")
    x1, _ = fr.xy(view.alpha_max, 0).split(",")
    _, y1 = fr.xy(0, view.s_max).split(",")
    lines += [
        f'<line class="axis" x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}" stroke="black"/>',
        f'<line class="axis" x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}" stroke="black"/>',
        f'<text x="{x1}" y="{float(y0) + 20:.2f}" font-size="12" text-anchor="end">alpha</text>',
        f'<text x="{float(x0) - 8:.2f}" y="{y1}" font-size="12" text-anchor="end">s</text>',
    ]

    killing = bounds.killing_wall_sq
    top = walls[0] if walls else None
    for curve in wall_curves(cat):
        a = curve.alpha0_sq
        if killing is not None and a == killing:
            cls, color, width = "killing", "#d62728", 2.0
        elif a == top:
            cls, color, width = "maximal", "#1f77b4", 2.0
        else:
            cls, color, width = "wall", "#ff7f0e", 1.0
        pts = [fr.xy(al, s) for al, s in _sample_wall(a) if fr.visible(al, s)]
        if len(pts) < 2:
            continue
        lines.append(f'<polyline class="{cls}" data-alpha0-sq="{rat_str(a)}" points="{" ".join(pts)}" '
                     f'fill="none" stroke="{color}" stroke-width="{width}"/>')
        if math.sqrt(a) <= view.alpha_max:
            lx, ly = fr.xy(math.sqrt(a), 0).split(",")
            lines.append(f'<text x="{lx}" y="{float(ly) + 14:.2f}" font-size="10" '
                         f'text-anchor="middle">{rat_str(a)}</text>')
    lines.append("</svg>")
    text = "\n".join(lines) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text
