"""Floating-point plane-geometry primitives with explicit tolerance contracts.

Angles between lines are kept modulo a half turn so that every identity
holds in one code path regardless of configuration (obtuse hosts, points on
side extensions, exterior points). Length tolerances are relative and scale
with the size of the figure under discussion; angle tolerances are absolute.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple

from .errors import (
    CenterInversionError,
    CollinearError,
    DegenerateRayError,
    IdenticalCirclesError,
    NotOnBothError,
    ParallelLinesError,
)

HALF_PI = 0.5 * math.pi
VERTEX_LABELS = ("A", "B", "C")


@dataclass(frozen=True)
class Tolerance:
    """Absolute angle tolerance plus a relative length tolerance.

    ``length_eps_rel`` is dimensionless and gets multiplied by a context
    scale, typically the circumradius of the working triangle.
    """

    angle_eps: float = 1e-9
    length_eps_rel: float = 1e-9

    def __post_init__(self) -> None:
        if self.angle_eps <= 0.0 or self.length_eps_rel <= 0.0:
            raise ValueError("tolerances must be strictly positive")

    def length_eps(self, scale: float) -> float:
        return self.length_eps_rel * scale


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True)
class Point:
    """Cartesian position; doubles as a 2-vector for arithmetic."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite coordinates ({self.x}, {self.y})")

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, s: float) -> Point:
        return Point(self.x * s, self.y * s)

    __rmul__ = __mul__

    def __truediv__(self, s: float) -> Point:
        return Point(self.x / s, self.y / s)

    def __neg__(self) -> Point:
        return Point(-self.x, -self.y)

    def __iter__(self) -> Iterator[float]:
        yield self.x
        yield self.y

    def dot(self, other: Point) -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: Point) -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def dist(self, other: Point) -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def perp(self) -> Point:
        """Rotate a quarter turn counter-clockwise."""
        return Point(-self.y, self.x)

    def unit(self) -> Point:
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return Point(self.x / n, self.y / n)

    def rotated(self, angle: float) -> Point:
        c, s = math.cos(angle), math.sin(angle)
        return Point(c * self.x - s * self.y, s * self.x + c * self.y)

    def angle(self) -> float:
        return math.atan2(self.y, self.x)


def midpoint(p: Point, q: Point) -> Point:
    return Point(0.5 * (p.x + q.x), 0.5 * (p.y + q.y))


def _canonical_half_turn(value: float) -> float:
    """Reduce to the representative in (-pi/2, pi/2]."""
    r = math.remainder(value, math.pi)
    if r <= -HALF_PI:
        r += math.pi
    return r


@dataclass(frozen=True)
class DirectedAngle:
    """Angle between two lines, taken modulo a half turn.

    Addition, subtraction and integer scaling stay inside the group; equality
    is circular distance on the half-turn circle.
    """

    value: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.value):
            raise ValueError("non-finite angle")
        object.__setattr__(self, "value", _canonical_half_turn(self.value))

    def __add__(self, other: DirectedAngle) -> DirectedAngle:
        return DirectedAngle(self.value + other.value)

    def __sub__(self, other: DirectedAngle) -> DirectedAngle:
        return DirectedAngle(self.value - other.value)

    def __neg__(self) -> DirectedAngle:
        return DirectedAngle(-self.value)

    def __mul__(self, k: float) -> DirectedAngle:
        return DirectedAngle(self.value * k)

    __rmul__ = __mul__

    def distance(self, other: DirectedAngle) -> float:
        """Circular distance modulo pi, in [0, pi/2]."""
        return abs(math.remainder(self.value - other.value, math.pi))

    def isclose(self, other: DirectedAngle, eps: float = DEFAULT_TOL.angle_eps) -> bool:
        return self.distance(other) < eps


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.radius) and self.radius > 0.0):
            raise ValueError(f"radius must be strictly positive, got {self.radius}")

    def point_at(self, angle: float) -> Point:
        return Point(
            self.center.x + self.radius * math.cos(angle),
            self.center.y + self.radius * math.sin(angle),
        )

    def offset_of(self, p: Point) -> float:
        """Signed radial offset of ``p``: distance to center minus radius."""
        return self.center.dist(p) - self.radius

    def contains(self, p: Point, tol: Tolerance = DEFAULT_TOL) -> bool:
        return abs(self.offset_of(p)) < tol.length_eps(self.radius)


@dataclass(frozen=True)
class Line:
    """Undirected line given by an anchor and a unit direction."""

    anchor: Point
    direction: Point

    def __post_init__(self) -> None:
        n = self.direction.norm()
        if n == 0.0 or not math.isfinite(n):
            raise ValueError("line direction must be a nonzero finite vector")
        if abs(n - 1.0) > 1e-14:
            object.__setattr__(self, "direction", self.direction / n)

    @classmethod
    def through(cls, p: Point, q: Point) -> Line:
        d = q - p
        if d.norm() == 0.0:
            raise ValueError("cannot span a line by two coincident points")
        return cls(p, d)

    def at(self, t: float) -> Point:
        return self.anchor + t * self.direction

    def param_of(self, p: Point) -> float:
        return (p - self.anchor).dot(self.direction)

    def project(self, p: Point) -> Point:
        return self.at(self.param_of(p))

    def offset(self, p: Point) -> float:
        """Signed perpendicular distance of ``p`` from the line."""
        return self.direction.cross(p - self.anchor)

    def side(self, p: Point) -> int:
        off = self.offset(p)
        return (off > 0.0) - (off < 0.0)


def line_line_intersection(l1: Line, l2: Line, tol: Tolerance = DEFAULT_TOL) -> Point:
    den = l1.direction.cross(l2.direction)
    # unit directions: |den| = sin of the angle between the lines
    if abs(den) < tol.angle_eps:
        raise ParallelLinesError("lines are parallel within tolerance")
    t = (l2.anchor - l1.anchor).cross(l2.direction) / den
    return l1.at(t)


def directed_angle(p: Point, q: Point, r: Point, tol: Tolerance = DEFAULT_TOL) -> DirectedAngle:
    """Directed angle from line qp to line qr, modulo a half turn."""
    qp = p - q
    qr = r - q
    scale = max(qp.norm(), qr.norm())
    if scale == 0.0 or min(qp.norm(), qr.norm()) < tol.length_eps(scale):
        raise DegenerateRayError("angle leg collapses onto the apex")
    return DirectedAngle(qr.angle() - qp.angle())


def circumcircle(p1: Point, p2: Point, p3: Point, tol: Tolerance = DEFAULT_TOL) -> Circle:
    """Circle through three pairwise distinct, non-collinear points."""
    q2 = p2 - p1
    q3 = p3 - p1
    span = max(q2.norm(), q3.norm(), p3.dist(p2))
    d = 2.0 * q2.cross(q3)
    if abs(d) <= 2.0 * tol.length_eps_rel * span * span:
        raise CollinearError("the three points are collinear within tolerance")
    m2 = q2.dot(q2)
    m3 = q3.dot(q3)
    ux = (m2 * q3.y - m3 * q2.y) / d
    uy = (m3 * q2.x - m2 * q3.x) / d
    center = Point(p1.x + ux, p1.y + uy)
    return Circle(center, math.hypot(ux, uy))


def circle_circle_intersections(
    c1: Circle, c2: Circle, tol: Tolerance = DEFAULT_TOL
) -> list[Point]:
    """0, 1 or 2 intersection points via the radical-line decomposition.

    Candidates closer than the length tolerance collapse to a single
    tangency point so downstream constructions never see twin points.
    """
    delta = c2.center - c1.center
    d = delta.norm()
    scale = max(c1.radius, c2.radius, d)
    eps = tol.length_eps(scale)
    if d < eps and abs(c1.radius - c2.radius) < eps:
        raise IdenticalCirclesError("the circles coincide within tolerance")
    if d == 0.0:
        return []  # concentric, distinct radii
    # foot of the radical line on the center line, measured from c1
    a = (d * d + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * d)
    h2 = c1.radius * c1.radius - a * a
    u = delta / d
    foot = c1.center + a * u
    # candidates sit 2*sqrt(h2) apart; collapse within the tolerance band
    band = 0.25 * eps * eps
    if h2 < -band:
        return []
    if h2 <= band:
        return [foot]
    h = math.sqrt(h2)
    if 2.0 * h < eps:
        return [foot]
    v = u.perp()
    return [foot + h * v, foot - h * v]


def line_circle_intersections(l: Line, c: Circle, tol: Tolerance = DEFAULT_TOL) -> list[Point]:
    """0, 1 or 2 intersection points, with the same tangency collapse rule."""
    foot = l.project(c.center)
    h2 = c.radius * c.radius - (foot - c.center).dot(foot - c.center)
    eps = tol.length_eps(c.radius)
    band = 0.25 * eps * eps
    if h2 < -band:
        return []
    if h2 <= band:
        return [foot]
    h = math.sqrt(h2)
    if 2.0 * h < eps:
        return [foot]
    return [foot + h * l.direction, foot - h * l.direction]


def invert_point(c: Circle, p: Point, tol: Tolerance = DEFAULT_TOL) -> Point:
    """Image of ``p`` under inversion in ``c``; involutive on its domain."""
    offset = p - c.center
    d2 = offset.dot(offset)
    if math.sqrt(d2) < tol.length_eps(c.radius):
        raise CenterInversionError("the center inverts to an infinite point")
    return c.center + (c.radius * c.radius / d2) * offset


def reflect_over_line(l: Line, p: Point) -> Point:
    foot = l.project(p)
    return 2.0 * foot - p


class SecondIntersection(NamedTuple):
    point: Point
    tangent: bool


def second_intersection(
    l: Line, c: Circle, known: Point, tol: Tolerance = DEFAULT_TOL
) -> SecondIntersection:
    """Other intersection of a line and circle already meeting at ``known``.

    Both intersection points are mirror images in the perpendicular foot of
    the center, so no square root is needed. Tangency returns ``known``
    itself with the flag set.
    """
    eps = tol.length_eps(c.radius)
    if abs(l.offset(known)) > eps or abs(c.offset_of(known)) > eps:
        raise NotOnBothError("the known point is not on both the line and the circle")
    foot = l.project(c.center)
    other = 2.0 * foot - known
    if other.dist(known) < eps:
        return SecondIntersection(known, True)
    return SecondIntersection(other, False)


class Containment(NamedTuple):
    inside: bool
    on_boundary: bool


def _segment_distance(p: Point, a: Point, b: Point) -> float:
    ab = b - a
    t = (p - a).dot(ab) / ab.dot(ab)
    t = min(1.0, max(0.0, t))
    return p.dist(a + t * ab)


def triangle_contains(t: "Triangle", p: Point, tol: Tolerance = DEFAULT_TOL) -> Containment:
    """Strict interior test with an on-boundary flag for near-side points."""
    sign = t.orientation
    strict = all(
        sign * (q2 - q1).cross(p - q1) > 0.0
        for q1, q2 in ((t.a, t.b), (t.b, t.c), (t.c, t.a))
    )
    eps = tol.length_eps(t.circumradius)
    near = min(
        _segment_distance(p, t.a, t.b),
        _segment_distance(p, t.b, t.c),
        _segment_distance(p, t.c, t.a),
    )
    return Containment(strict, near < eps)


@dataclass(frozen=True)
class Triangle:
    """Three labeled, non-collinear vertices with orientation.

    Construction rejects triples whose area is negligible at the scale of
    the circumradius (equivalently, some angle is vanishingly thin).
    """

    a: Point
    b: Point
    c: Point

    def __post_init__(self) -> None:
        area2 = (self.b - self.a).cross(self.c - self.a)
        if area2 == 0.0:
            raise CollinearError("degenerate triangle: zero signed area")
        la = self.b.dist(self.c)
        lb = self.c.dist(self.a)
        lc = self.a.dist(self.b)
        r = la * lb * lc / (2.0 * abs(area2))
        if abs(area2) <= 2.0 * DEFAULT_TOL.length_eps_rel * r * r:
            raise CollinearError("degenerate triangle: area below tolerance")

    @cached_property
    def signed_area(self) -> float:
        return 0.5 * (self.b - self.a).cross(self.c - self.a)

    @property
    def orientation(self) -> int:
        return 1 if self.signed_area > 0.0 else -1

    @cached_property
    def side_lengths(self) -> tuple[float, float, float]:
        """Lengths opposite A, B, C (i.e. |BC|, |CA|, |AB|)."""
        return (self.b.dist(self.c), self.c.dist(self.a), self.a.dist(self.b))

    @cached_property
    def angles(self) -> tuple[float, float, float]:
        """Interior angles at A, B, C in (0, pi)."""
        return (
            self._interior(self.a, self.b, self.c),
            self._interior(self.b, self.c, self.a),
            self._interior(self.c, self.a, self.b),
        )

    @staticmethod
    def _interior(apex: Point, p: Point, q: Point) -> float:
        u = p - apex
        v = q - apex
        return math.atan2(abs(u.cross(v)), u.dot(v))

    @cached_property
    def circumcircle(self) -> Circle:
        return circumcircle(self.a, self.b, self.c)

    @property
    def circumradius(self) -> float:
        return self.circumcircle.radius

    @property
    def vertices(self) -> tuple[Point, Point, Point]:
        return (self.a, self.b, self.c)

    def vertex(self, label: str) -> Point:
        return self.vertices[VERTEX_LABELS.index(label)]

    def opposite(self, label: str) -> tuple[Point, Point]:
        """Endpoints of the side opposite ``label``, in cyclic order."""
        i = VERTEX_LABELS.index(label)
        return (self.vertices[(i + 1) % 3], self.vertices[(i + 2) % 3])

    def side_line(self, label: str) -> Line:
        p, q = self.opposite(label)
        return Line.through(p, q)

    def side_length(self, label: str) -> float:
        return self.side_lengths[VERTEX_LABELS.index(label)]

    def angle(self, label: str) -> float:
        return self.angles[VERTEX_LABELS.index(label)]

    def directed_angle_at(self, label: str) -> DirectedAngle:
        """Directed interior angle, e.g. at A: from line AB to line AC."""
        apex = self.vertex(label)
        p, q = self.opposite(label)
        # at A the legs go to B and C in that order
        return directed_angle(p, apex, q)

    def is_scalene(self, tol: Tolerance = DEFAULT_TOL) -> bool:
        la, lb, lc = self.side_lengths
        eps = tol.length_eps(self.circumradius)
        return abs(la - lb) > eps and abs(lb - lc) > eps and abs(lc - la) > eps

    def is_right(self, tol: Tolerance = DEFAULT_TOL) -> bool:
        return any(abs(ang - HALF_PI) < tol.angle_eps for ang in self.angles)

    def is_isosceles_at(self, label: str, tol: Tolerance = DEFAULT_TOL) -> bool:
        """True when the two sides adjacent to ``label`` have equal length."""
        i = VERTEX_LABELS.index(label)
        lens = self.side_lengths
        return abs(lens[(i + 1) % 3] - lens[(i + 2) % 3]) < tol.length_eps(self.circumradius)

    def min_side_line_distance(self, p: Point) -> float:
        return min(abs(self.side_line(v).offset(p)) for v in VERTEX_LABELS)
