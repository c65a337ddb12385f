"""Minimal, dependency-free SVG output for the CLI's optional plots.

Output is deterministic: coordinates are rounded to 0.01 px.
"""

from __future__ import annotations

import math
from html import escape
from typing import Sequence

from .ellipse import EllipseFit
from .geometry import CircleConstruction
from .means import MeanKind

WIDTH, HEIGHT, MARGIN = 640, 480, 50

# solid, dash-dot, dotted
DASH = {
    MeanKind.ARITHMETIC: None,
    MeanKind.GEOMETRIC: "8,3,2,3",
    MeanKind.HARMONIC: "2,3",
}
COLOR = {
    MeanKind.ARITHMETIC: "#1f77b4",
    MeanKind.GEOMETRIC: "#d62728",
    MeanKind.HARMONIC: "#2ca02c",
}


class _Canvas:
    def __init__(self, xs: Sequence[float], ys: Sequence[float], equal_aspect: bool = False):
        x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
        if x1 == x0:
            x0, x1 = x0 - 1, x1 + 1
        if y1 == y0:
            y0, y1 = y0 - 1, y1 + 1
        pad_x, pad_y = 0.05 * (x1 - x0), 0.05 * (y1 - y0)
        self.x0, self.x1 = x0 - pad_x, x1 + pad_x
        self.y0, self.y1 = y0 - pad_y, y1 + pad_y
        self.sx = (WIDTH - 2 * MARGIN) / (self.x1 - self.x0)
        self.sy = (HEIGHT - 2 * MARGIN) / (self.y1 - self.y0)
        if equal_aspect:
            self.sx = self.sy = min(self.sx, self.sy)
        self.parts: list[str] = []

    def px(self, x: float, y: float) -> str:
        return f"{MARGIN + (x - self.x0) * self.sx:.2f},{HEIGHT - MARGIN - (y - self.y0) * self.sy:.2f}"

    def polyline(self, xs, ys, color="#000", dash=None, width=1.5):
        pts = " ".join(self.px(x, y) for x, y in zip(xs, ys))
        d = f' stroke-dasharray="{dash}"' if dash else ""
        self.parts.append(
            f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="{width}"{d}/>'
        )

    def dot(self, x, y, r=2.0, color="#444"):
        cx, cy = self.px(x, y).split(",")
        self.parts.append(f'<circle cx="{cx}" cy="{cy}" r="{r}" fill="{color}"/>')

    def text(self, x, y, label, size=12):
        px, py = self.px(x, y).split(",")
        self.parts.append(f'<text x="{px}" y="{py}" font-size="{size}">{escape(label)}</text>')

    def frame(self, title="", xlabel="", ylabel=""):
        w, h = WIDTH - 2 * MARGIN, HEIGHT - 2 * MARGIN
        out = [
            f'<rect x="{MARGIN}" y="{MARGIN}" width="{w}" height="{h}" fill="none" stroke="#999"/>',
            f'<text x="{WIDTH / 2:.0f}" y="{MARGIN / 2:.0f}" text-anchor="middle" font-size="14">{escape(title)}</text>',
            f'<text x="{WIDTH / 2:.0f}" y="{HEIGHT - 12}" text-anchor="middle" font-size="12">{escape(xlabel)}</text>',
            f'<text x="14" y="{HEIGHT / 2:.0f}" font-size="12" transform="rotate(-90 14 {HEIGHT / 2:.0f})" '
            f'text-anchor="middle">{escape(ylabel)}</text>',
            f'<text x="{MARGIN}" y="{HEIGHT - MARGIN + 16}" font-size="10">{self.x0:.3g}</text>',
            f'<text x="{WIDTH - MARGIN}" y="{HEIGHT - MARGIN + 16}" font-size="10" text-anchor="end">{self.x1:.3g}</text>',
            f'<text x="{MARGIN - 4}" y="{HEIGHT - MARGIN}" font-size="10" text-anchor="end">{self.y0:.3g}</text>',
            f'<text x="{MARGIN - 4}" y="{MARGIN + 10}" font-size="10" text-anchor="end">{self.y1:.3g}</text>',
        ]
        self.parts[:0] = out

    def legend(self, entries):
        for i, (label, color, dash) in enumerate(entries):
            y = MARGIN + 16 + 16 * i
            d = f' stroke-dasharray="{dash}"' if dash else ""
            self.parts.append(
                f'<line x1="{WIDTH - MARGIN - 120}" y1="{y}" x2="{WIDTH - MARGIN - 90}" y2="{y}" '
                f'stroke="{color}" stroke-width="1.5"{d}/>'
            )
            self.parts.append(
                f'<text x="{WIDTH - MARGIN - 84}" y="{y + 4}" font-size="11">{escape(label)}</text>'
            )

    def render(self) -> str:
        body = "\n".join(self.parts)
        return (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
            f'viewBox="0 0 {WIDTH} {HEIGHT}">\n<rect width="100%" height="100%" fill="#fff"/>\n{body}\n</svg>\n'
        )


def curves_svg(
    series: dict[MeanKind, tuple[Sequence[float], Sequence[float]]],
    title: str = "",
    xlabel: str = "",
    ylabel: str = "",
) -> str:
    """One line per mean, styled like the ellipse plot."""
    xs = [x for s in series.values() for x in s[0]]
    ys = [y for s in series.values() for y in s[1]]
    c = _Canvas(xs, ys)
    for k, (sx, sy) in series.items():
        c.polyline(sx, sy, COLOR[k], DASH[k])
    c.frame(title, xlabel, ylabel)
    c.legend([(k.value, COLOR[k], DASH[k]) for k in series])
    return c.render()


def ellipses_svg(points: Sequence[tuple[float, float]], fits: Sequence[EllipseFit], title: str = "") -> str:
    xs = [p[0] for p in points] + [b[0] for f in fits for b in f.boundary]
    ys = [p[1] for p in points] + [b[1] for f in fits for b in f.boundary]
    c = _Canvas(xs, ys, equal_aspect=True)
    for x, y in points:
        c.dot(x, y)
    for f in fits:
        bx, by = zip(*f.boundary)
        c.polyline(bx, by, COLOR[f.mean_kind], DASH[f.mean_kind])
        c.dot(*f.center_original, r=3.5, color=COLOR[f.mean_kind])
    c.frame(title, "x", "y")
    c.legend([(f.mean_kind.value, COLOR[f.mean_kind], DASH[f.mean_kind]) for f in fits])
    return c.render()


def circle_svg(cc: CircleConstruction) -> str:
    """The semicircle construction with segments OH, HG and HD drawn."""
    pts = cc.points()
    r = cc.radius_OH
    ox = pts["O"][0]
    theta = [math.pi * i / 180 for i in range(181)]
    arc_x = [ox + r * math.cos(t) for t in theta]
    arc_y = [r * math.sin(t) for t in theta]
    c = _Canvas(arc_x + [0.0], arc_y + [0.0], equal_aspect=True)
    c.polyline(arc_x, arc_y, "#000")
    c.polyline([pts["B"][0], pts["C"][0]], [0.0, 0.0], "#000")
    c.polyline(*zip(pts["O"], pts["H"]), COLOR[MeanKind.ARITHMETIC], width=2)
    c.polyline(*zip(pts["G"], pts["H"]), COLOR[MeanKind.GEOMETRIC], width=2)
    c.polyline(*zip(pts["G"], pts["D"]), "#999", dash="3,3")
    c.polyline(*zip(pts["H"], pts["D"]), COLOR[MeanKind.HARMONIC], width=2)
    for name, (x, y) in pts.items():
        c.dot(x, y)
        c.text(x, y, f" {name}")
    c.frame(f"means of {cc.x1:g} and {cc.x2:g}")
    c.legend([
        (f"OH = AM = {cc.radius_OH:.4g}", COLOR[MeanKind.ARITHMETIC], None),
        (f"HG = GM = {cc.chord_HG:.4g}", COLOR[MeanKind.GEOMETRIC], None),
        (f"HD = HM = {cc.segment_HD:.4g}", COLOR[MeanKind.HARMONIC], None),
    ])
    return c.render()
