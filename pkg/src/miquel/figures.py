"""Schematic SVG rendering of scenes: triangle, chosen circles and lines,
labeled points. Output is a pure function of the scene and options, so the
same input yields byte-identical documents."""

from __future__ import annotations

import math

from . import centers
from .errors import EmptySelectionError, OnCircumcircleError, SceneError
from .kernel import Circle, Line, Point, Triangle, circumcircle, midpoint, second_intersection
from .scene import SceneSpec
from .triads import SimsonLine, Triad, miquel_point, pedal_triad

ELEMENTS = (
    "circumcircle",
    "miquel-circles",
    "pedal",
    "triad",
    "simson",
    "centers",
    "median-symmedian",
)

_STROKE = "#1a1a1a"
_AUX = "#5577bb"
_ACCENT = "#bb3344"


def _fmt(v: float) -> str:
    # fixed shortest-ish formatting keeps documents byte-stable
    out = format(v, ".6g")
    return "0" if out == "-0" else out


def _sx(p: Point) -> str:
    return _fmt(p.x)


def _sy(p: Point) -> str:
    return _fmt(-p.y)  # svg y grows downward


class _Canvas:
    def __init__(self, view_center: Point, view_radius: float, width: int) -> None:
        self.center = view_center
        self.radius = view_radius
        self.width = width
        self.shapes: list[str] = []
        self.labels: list[str] = []
        self.stroke = view_radius / 120.0

    def line(self, a: Point, b: Point, color: str = _STROKE, width_scale: float = 1.0) -> None:
        self.shapes.append(
            f'<line x1="{_sx(a)}" y1="{_sy(a)}" x2="{_sx(b)}" y2="{_sy(b)}" '
            f'stroke="{color}" stroke-width="{_fmt(self.stroke * width_scale)}"/>'
        )

    def infinite_line(self, line: Line, color: str = _AUX) -> None:
        span = 2.0 * self.radius
        t0 = line.param_of(self.center)
        self.line(line.at(t0 - span), line.at(t0 + span), color)

    def circle(self, c: Circle, color: str = _AUX) -> None:
        self.shapes.append(
            f'<circle cx="{_sx(c.center)}" cy="{_sy(c.center)}" r="{_fmt(c.radius)}" '
            f'fill="none" stroke="{color}" stroke-width="{_fmt(self.stroke)}"/>'
        )

    def polygon(self, pts: tuple[Point, ...], color: str = _STROKE) -> None:
        coords = " ".join(f"{_sx(p)},{_sy(p)}" for p in pts)
        self.shapes.append(
            f'<polygon points="{coords}" fill="none" stroke="{color}" '
            f'stroke-width="{_fmt(self.stroke * 1.5)}"/>'
        )

    def point(self, p: Point, label: str | None, color: str = _STROKE) -> None:
        self.shapes.append(
            f'<circle cx="{_sx(p)}" cy="{_sy(p)}" r="{_fmt(self.stroke * 2.5)}" fill="{color}"/>'
        )
        if label is not None:
            off = self.stroke * 4.0
            self.labels.append(
                f'<text x="{_fmt(p.x + off)}" y="{_fmt(-(p.y + off))}" '
                f'font-size="{_fmt(self.radius * 0.07)}" '
                f'font-family="serif">{label}</text>'
            )

    def document(self) -> str:
        r = self.radius
        x0 = self.center.x - r
        y0 = -(self.center.y + r)
        body = "\n".join(self.shapes + self.labels)
        return (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{self.width}" '
            f'height="{self.width}" viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(2 * r)} {_fmt(2 * r)}">\n'
            f"{body}\n</svg>\n"
        )


def render_figure(scene: SceneSpec, elements: list[str]) -> str:
    """Standalone SVG for the scene with the selected construction layers."""
    if not elements:
        raise EmptySelectionError("no elements selected")
    unknown = [e for e in elements if e not in ELEMENTS]
    if unknown:
        raise SceneError(f"unknown elements: {unknown} (choose from {', '.join(ELEMENTS)})")
    chosen = [e for e in ELEMENTS if e in elements]

    t = scene.triangle
    circ = t.circumcircle
    view_r = circ.radius
    if scene.point is not None:
        view_r = max(view_r, circ.center.dist(scene.point))
    canvas = _Canvas(circ.center, 1.2 * view_r, int(scene.options.get("width", 640)))
    labels_on = scene.options.get("labels", True)

    def name(p: Point, text: str) -> str | None:
        return text if labels_on else None

    for element in chosen:
        if element == "circumcircle":
            canvas.circle(circ)
        elif element == "miquel-circles":
            triad = _scene_triad(scene)
            res = miquel_point(t, triad)
            for k in res.circles:
                canvas.circle(k)
            for q, text in zip(triad.points, ("X", "Y", "Z")):
                canvas.point(q, name(q, text), _AUX)
        elif element == "pedal":
            triad = _pedal_or_error(t, scene)
            canvas.polygon(triad.points, _AUX)
            for q, text in zip(triad.points, ("X", "Y", "Z")):
                canvas.point(q, name(q, text), _AUX)
        elif element == "triad":
            triad = _scene_triad(scene)
            canvas.polygon(triad.points, _AUX)
            for q, text in zip(triad.points, ("X", "Y", "Z")):
                canvas.point(q, name(q, text), _AUX)
        elif element == "simson":
            if scene.point is None:
                raise SceneError("element 'simson' requires P")
            sim = pedal_triad(t, scene.point)
            if not isinstance(sim, SimsonLine):
                raise OnCircumcircleError("P is not on the circumcircle; no collapsed line")
            canvas.infinite_line(sim.line, _ACCENT)
            for q in sim.feet:
                canvas.point(q, None, _ACCENT)
        elif element == "centers":
            for kind, text in (
                ("circumcenter", "O"),
                ("orthocenter", "H"),
                ("incenter", "L"),
            ):
                loc = centers.classic_center(t, centers.CenterKind(kind))
                canvas.point(loc, name(loc, text), _ACCENT)
            for which, text in (("first", "Ω₁"), ("second", "Ω₂")):
                loc = centers.brocard_point(t, which)
                canvas.point(loc, name(loc, text), _ACCENT)
        elif element == "median-symmedian":
            _median_symmedian_layer(canvas, t, scene.options.get("vertex", "A"), name)

    canvas.polygon(t.vertices)
    for q, text in zip(t.vertices, ("A", "B", "C")):
        canvas.point(q, name(q, text))
    if scene.point is not None:
        canvas.point(scene.point, name(scene.point, "P"), _ACCENT)
    return canvas.document()


def _scene_triad(scene: SceneSpec) -> Triad:
    t = scene.triangle
    if scene.triad_params is not None:
        return Triad(t, *scene.triad_params)
    return _pedal_or_error(t, scene)


def _pedal_or_error(t: Triangle, scene: SceneSpec) -> Triad:
    if scene.point is None:
        raise SceneError("this element requires P or triad parameters")
    triad = pedal_triad(t, scene.point)
    if isinstance(triad, SimsonLine):
        raise OnCircumcircleError("P sits on the circumcircle; select 'simson' instead")
    return triad


def _median_symmedian_layer(canvas: _Canvas, t: Triangle, vertex: str, name) -> None:
    """Median and symmedian from one vertex with the special points on them."""
    apex = t.vertex(vertex)
    b, c = t.opposite(vertex)
    e = midpoint(b, c)
    s_loc = centers.s_point(t, vertex)
    m_loc = centers.m_point(t, vertex)
    canvas.line(apex, e, _AUX)
    canvas.line(apex, centers.symmedian_foot(t, vertex), _AUX)
    canvas.line(apex, s_loc, _ACCENT)
    median = Line.through(apex, e)
    if t.angle(vertex) < math.pi / 2.0:
        f = second_intersection(median, t.circumcircle, apex).point
    else:
        f = b + c - apex
    canvas.circle(circumcircle(b, c, centers.circumcenter(t)))
    canvas.point(e, name(e, "E"), _AUX)
    canvas.point(f, name(f, "F"), _AUX)
    canvas.point(s_loc, name(s_loc, f"S_{vertex}"), _ACCENT)
    canvas.point(m_loc, name(m_loc, f"M_{vertex}"), _ACCENT)
