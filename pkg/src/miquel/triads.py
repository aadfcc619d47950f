"""Concurrency constructions on a triangle: triads bound to the side lines,
their common circle point, pedal and rotated-pedal families, the side-angle
decomposition around a point, similarity classification, and detection of
which named center role a point plays."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Union

from . import centers
from .errors import (
    AtVertexError,
    CollinearError,
    DegenerateCircleError,
    IdenticalCirclesError,
    NotAMiquelTriadError,
    OnCircumcircleError,
    OnSideLineError,
    RightAngleDegenerateError,
    ThetaOutOfRangeError,
)
from .kernel import (
    DEFAULT_TOL,
    HALF_PI,
    VERTEX_LABELS,
    Circle,
    DirectedAngle,
    Line,
    Point,
    Tolerance,
    Triangle,
    circle_circle_intersections,
    circumcircle,
    directed_angle,
    line_line_intersection,
    triangle_contains,
)

# Points this close to the circumcircle (relative to R) degenerate to a
# collinear pedal triple; the band keeps near-degenerate triads out.
CIRCUMCIRCLE_BAND = 1e-7


@dataclass(frozen=True)
class Triad:
    """Three points bound to the side lines of a host triangle.

    X sits on line BC at affine parameter u (X = B + u*(C-B)), Y on CA at v,
    Z on AB at w. Parameters outside [0, 1] encode the side extensions.
    """

    host: Triangle
    u: float
    v: float
    w: float

    def __post_init__(self) -> None:
        if not all(math.isfinite(s) for s in (self.u, self.v, self.w)):
            raise ValueError("triad parameters must be finite")

    @cached_property
    def x(self) -> Point:
        return self.host.b + self.u * (self.host.c - self.host.b)

    @cached_property
    def y(self) -> Point:
        return self.host.c + self.v * (self.host.a - self.host.c)

    @cached_property
    def z(self) -> Point:
        return self.host.a + self.w * (self.host.b - self.host.a)

    @property
    def points(self) -> tuple[Point, Point, Point]:
        return (self.x, self.y, self.z)

    def triangle(self) -> Triangle:
        return Triangle(self.x, self.y, self.z)

    @classmethod
    def from_points(cls, host: Triangle, x: Point, y: Point, z: Point) -> Triad:
        def param(p: Point, tail: Point, head: Point) -> float:
            d = head - tail
            return (p - tail).dot(d) / d.dot(d)

        return cls(
            host,
            param(x, host.b, host.c),
            param(y, host.c, host.a),
            param(z, host.a, host.b),
        )


@dataclass(frozen=True)
class SimsonLine:
    """Collapsed pedal triple of a point on the circumcircle."""

    line: Line
    feet: tuple[Point, Point, Point]

    def max_deviation(self) -> float:
        return max(abs(self.line.offset(f)) for f in self.feet)


class MiquelResult(NamedTuple):
    point: Point
    circles: tuple[Circle, Circle, Circle]
    residual: float
    tangent: bool


@dataclass(frozen=True)
class AngleSextet:
    """The six directed angles a point cuts off at the host vertices.

    alpha1/alpha2 split the angle at A (cevian toward C / from B), and so on
    around the triangle; each pair sums to the host's directed vertex angle.
    """

    alpha1: DirectedAngle
    alpha2: DirectedAngle
    beta1: DirectedAngle
    beta2: DirectedAngle
    gamma1: DirectedAngle
    gamma2: DirectedAngle


class MiquelAngles(NamedTuple):
    x: DirectedAngle
    y: DirectedAngle
    z: DirectedAngle
    extrapolated: bool


class EquationResiduals(NamedTuple):
    bpc: float
    cpa: float
    apb: float

    @property
    def max(self) -> float:
        return max(self.bpc, self.cpa, self.apb)


@dataclass(frozen=True)
class SimilarityClass:
    """A vertex correspondence under which two triangles are similar.

    ``permutation`` lists, for each vertex A, B, C of the first triangle,
    the label of the matching vertex of the second.
    """

    permutation: str
    orientation: str  # "direct" | "inverse"
    ratio: float
    residual: float

    def triad_letters(self) -> str:
        """Rewrite the permutation with X on BC, Y on CA, Z on AB letters."""
        return self.permutation.translate(str.maketrans("ABC", "XYZ"))


@dataclass(frozen=True)
class SpecialRole:
    role: str
    vertex: str | None = None

    def __str__(self) -> str:
        return f"{self.role}({self.vertex})" if self.vertex else self.role


NONE_ROLE = SpecialRole("none")


def _reject_side_lines(t: Triangle, p: Point, tol: Tolerance) -> None:
    if t.min_side_line_distance(p) < tol.length_eps(t.circumradius):
        raise OnSideLineError("the point lies on a side line of the triangle")


def _on_circumcircle(t: Triangle, p: Point) -> bool:
    return abs(t.circumcircle.offset_of(p)) < CIRCUMCIRCLE_BAND * t.circumradius


def pedal_feet(t: Triangle, p: Point) -> tuple[Point, Point, Point]:
    """Raw perpendicular feet of ``p`` on the side lines, in X, Y, Z order.

    Defined for every point; unlike ``pedal_triad`` it does not reject
    points on the side lines (where the foot on that line is the point
    itself: the circumcircle inverses of the symmedian arc points land
    there).
    """
    return tuple(t.side_line(v).project(p) for v in VERTEX_LABELS)


def pedal_triad(t: Triangle, p: Point, tol: Tolerance = DEFAULT_TOL) -> Union[Triad, SimsonLine]:
    """Perpendicular feet of ``p`` on the three side lines.

    Points on the circumcircle (within the degeneration band) yield the
    collapsed collinear triple instead of a triad.
    """
    _reject_side_lines(t, p, tol)
    feet = pedal_feet(t, p)
    if _on_circumcircle(t, p):
        anchor, far = max(
            ((feet[i], feet[j]) for i in range(3) for j in range(i + 1, 3)),
            key=lambda pair: pair[0].dist(pair[1]),
        )
        return SimsonLine(Line.through(anchor, far), feet)
    return Triad.from_points(t, *feet)


def miquel_point(t: Triangle, triad: Triad, tol: Tolerance = DEFAULT_TOL) -> MiquelResult:
    """Common point of the three circles through each vertex and the triad
    points on its adjacent sides.

    The point is cut as the second intersection of the first two circles
    (both pass through Z); the residual against the third circle is the
    numeric witness of the concurrency.
    """
    x, y, z = triad.points
    try:
        circle_a = circumcircle(t.a, y, z, tol)
        circle_b = circumcircle(t.b, z, x, tol)
        circle_c = circumcircle(t.c, x, y, tol)
    except CollinearError as exc:
        raise DegenerateCircleError(f"a defining triple is collinear: {exc}") from None
    try:
        hits = circle_circle_intersections(circle_a, circle_b, tol)
    except IdenticalCirclesError:
        raise DegenerateCircleError("two construction circles coincide") from None
    if not hits:
        raise DegenerateCircleError("construction circles unexpectedly disjoint")
    point = max(hits, key=lambda q: q.dist(z))
    tangent = len(hits) == 1
    residual = max(
        abs(k.offset_of(point)) for k in (circle_a, circle_b, circle_c)
    )
    return MiquelResult(point, (circle_a, circle_b, circle_c), residual, tangent)


def family_member(
    t: Triangle,
    p: Point,
    theta: Union[float, DirectedAngle],
    tol: Tolerance = DEFAULT_TOL,
) -> Triad:
    """Member of the one-parameter family of triads whose common circle
    point is ``p``.

    Each foot line from ``p`` is rotated by ``theta`` and re-intersected
    with its side line; theta = 0 reproduces the pedal triad, and the triad
    triangle scales by 1/cos(theta) relative to it.
    """
    th = theta.value if isinstance(theta, DirectedAngle) else float(theta)
    if abs(th) >= HALF_PI - tol.angle_eps:
        raise ThetaOutOfRangeError(f"rotation {th} not inside (-pi/2, pi/2)")
    _reject_side_lines(t, p, tol)
    feet = []
    for v in VERTEX_LABELS:
        side = t.side_line(v)
        spoke = (side.project(p) - p).rotated(th)
        feet.append(line_line_intersection(Line(p, spoke), side, tol))
    return Triad.from_points(t, *feet)


def _reject_vertices(t: Triangle, p: Point, tol: Tolerance) -> None:
    eps = tol.length_eps(t.circumradius)
    if any(p.dist(q) < eps for q in t.vertices):
        raise AtVertexError("the point coincides with a vertex")


def angle_sextet(t: Triangle, p: Point, tol: Tolerance = DEFAULT_TOL) -> AngleSextet:
    """Directed angles of the cevian rays of ``p`` at the three vertices."""
    _reject_vertices(t, p, tol)
    a, b, c = t.a, t.b, t.c
    return AngleSextet(
        alpha1=directed_angle(p, a, c, tol),
        alpha2=directed_angle(b, a, p, tol),
        beta1=directed_angle(p, b, a, tol),
        beta2=directed_angle(c, b, p, tol),
        gamma1=directed_angle(p, c, b, tol),
        gamma2=directed_angle(a, c, p, tol),
    )


def miquel_triangle_angles(t: Triangle, p: Point, tol: Tolerance = DEFAULT_TOL) -> MiquelAngles:
    """Angles of any triad triangle of ``p``, from the sextet decomposition.

    Valid for points inside the circumcircle; outside, the same directed
    formulas are evaluated but flagged as extrapolated.
    """
    s = angle_sextet(t, p, tol)
    extrapolated = t.circumcircle.offset_of(p) > 0.0
    return MiquelAngles(
        x=s.beta1 + s.gamma2,
        y=s.gamma1 + s.alpha2,
        z=s.alpha1 + s.beta2,
        extrapolated=extrapolated,
    )


def verify_miquel_equations(
    t: Triangle, p: Point, triad: Triad, tol: Tolerance = DEFAULT_TOL
) -> EquationResiduals:
    """Residuals of the three angle identities tying the host and triad
    angles to the angles subtended at the concurrency point:
    A + X = BPC, B + Y = CPA, C + Z = APB (all directed).
    """
    result = miquel_point(t, triad, tol)
    r = t.circumradius
    if result.point.dist(p) > max(tol.length_eps(r), 1e-6 * r):
        raise NotAMiquelTriadError("the triad's concurrency point is not the given point")
    x, y, z = triad.points
    ang_a = t.directed_angle_at("A")
    ang_b = t.directed_angle_at("B")
    ang_c = t.directed_angle_at("C")
    ang_x = directed_angle(y, x, z, tol)
    ang_y = directed_angle(z, y, x, tol)
    ang_z = directed_angle(x, z, y, tol)
    return EquationResiduals(
        bpc=(ang_a + ang_x).distance(directed_angle(t.b, p, t.c, tol)),
        cpa=(ang_b + ang_y).distance(directed_angle(t.c, p, t.a, tol)),
        apb=(ang_c + ang_z).distance(directed_angle(t.a, p, t.b, tol)),
    )


_PERMUTATIONS = ("ABC", "ACB", "BAC", "BCA", "CAB", "CBA")
_PARITY = {"ABC": 1, "BCA": 1, "CAB": 1, "ACB": -1, "BAC": -1, "CBA": -1}


def all_similarities(
    t1: Triangle, t2: Triangle, tol: Tolerance = DEFAULT_TOL
) -> list[SimilarityClass]:
    """Every vertex correspondence matching the angle triples within
    tolerance, ranked by angle residual. Isosceles and equilateral inputs
    legitimately return several."""
    angles1 = t1.angles
    angles2 = t2.angles
    sides1 = t1.side_lengths
    sides2 = t2.side_lengths
    found = []
    for perm in _PERMUTATIONS:
        idx = tuple(VERTEX_LABELS.index(ch) for ch in perm)
        residual = max(abs(angles1[i] - angles2[idx[i]]) for i in range(3))
        if residual >= tol.angle_eps:
            continue
        ratios = [sides2[idx[i]] / sides1[i] for i in range(3)]
        ratio = sum(ratios) / 3.0
        spread = (max(ratios) - min(ratios)) / ratio
        orientation = "direct" if t1.orientation == t2.orientation * _PARITY[perm] else "inverse"
        found.append(SimilarityClass(perm, orientation, ratio, residual + spread))
    found.sort(key=lambda s: s.residual)
    return found


def classify_similarity(
    t1: Triangle, t2: Triangle, tol: Tolerance = DEFAULT_TOL
) -> SimilarityClass | None:
    """Best-matching similarity, or None when no correspondence fits."""
    matches = all_similarities(t1, t2, tol)
    return matches[0] if matches else None


def detect_special_role(t: Triangle, p: Point, tol: Tolerance = DEFAULT_TOL) -> SpecialRole:
    """Which named center of ``t`` the point is, within tolerance.

    Candidate centers are compared by distance and the nearest within the
    band wins; the arc role (isosceles host, point on the circle through
    the base vertices and the incenter) is only tried when no center fits.
    """
    eps = tol.length_eps(t.circumradius)
    candidates: list[tuple[SpecialRole, Point]] = [
        (SpecialRole("circumcenter"), centers.circumcenter(t)),
        (SpecialRole("orthocenter"), centers.orthocenter(t)),
        (SpecialRole("incenter"), centers.incenter(t)),
    ]
    for v in VERTEX_LABELS:
        candidates.append((SpecialRole("excenter", v), centers.excenter(t, v)))
    candidates.append((SpecialRole("first_brocard"), centers.brocard_point(t, "first", tol)))
    candidates.append((SpecialRole("second_brocard"), centers.brocard_point(t, "second", tol)))
    for v in VERTEX_LABELS:
        try:
            candidates.append((SpecialRole("s_role", v), centers.s_point(t, v, tol)))
        except RightAngleDegenerateError:
            pass
        try:
            candidates.append((SpecialRole("m_role", v), centers.m_point(t, v, tol)))
        except RightAngleDegenerateError:
            pass
    best_role, best_dist = NONE_ROLE, math.inf
    for role, location in candidates:
        d = location.dist(p)
        if d < best_dist:
            best_role, best_dist = role, d
    if best_dist < eps:
        return best_role
    incenter = centers.incenter(t)
    for v in VERTEX_LABELS:
        if not t.is_isosceles_at(v, tol):
            continue
        b, c = t.opposite(v)
        try:
            arc = circumcircle(b, c, incenter, tol)
        except CollinearError:
            continue
        if abs(arc.offset_of(p)) < eps:
            return SpecialRole("q_role", v)
    return NONE_ROLE


class ParityReport(NamedTuple):
    inside_host: bool
    inside_miquel: bool
    agree: bool
    ray_angle_sum: float | None


def containment_parity(t: Triangle, p: Point, tol: Tolerance = DEFAULT_TOL) -> ParityReport:
    """Whether ``p`` is inside the host and inside its pedal triangle.

    For interior points also reports the full turn of the three rays toward
    the pedal feet (2*pi exactly when the point is enclosed by them).
    """
    _reject_side_lines(t, p, tol)
    if _on_circumcircle(t, p):
        raise OnCircumcircleError("the pedal triple degenerates on the circumcircle")
    triad = pedal_triad(t, p, tol)
    inside_host = triangle_contains(t, p, tol).inside
    inside_miquel = triangle_contains(triad.triangle(), p, tol).inside
    ray_sum = None
    if inside_host:
        dirs = sorted((q - p).angle() for q in triad.points)
        gaps = [dirs[1] - dirs[0], dirs[2] - dirs[1], 2.0 * math.pi - (dirs[2] - dirs[0])]
        ray_sum = sum(min(g, 2.0 * math.pi - g) for g in gaps)
    return ParityReport(inside_host, inside_miquel, inside_host == inside_miquel, ray_sum)
