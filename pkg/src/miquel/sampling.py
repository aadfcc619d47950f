"""Deterministic random generators for triangles and points.

Every generator takes an explicit ``random.Random`` so that concurrent or
repeated runs reproduce bit-identically from the same seed. Triangles are
built from sampled interior angles placed on a circumcircle, which gives
direct control over scaleneness and right-angle margins.
"""

from __future__ import annotations

import math
import random

from .kernel import HALF_PI, Point, Triangle


def rng_for(seed: int, suite: str, index: int) -> random.Random:
    """Deterministic per-trial generator, independent of trial order."""
    return random.Random(f"{suite}:{seed}:{index}")


def _angles(
    rng: random.Random,
    min_angle: float,
    pairwise_gap: float,
    right_gap: float,
    max_tries: int = 1000,
) -> tuple[float, float, float]:
    for _ in range(max_tries):
        a = rng.uniform(min_angle, math.pi - 2.0 * min_angle)
        b = rng.uniform(min_angle, math.pi - a - min_angle)
        c = math.pi - a - b
        angles = (a, b, c)
        if min(angles) < min_angle:
            continue
        if pairwise_gap > 0.0 and (
            abs(a - b) < pairwise_gap or abs(b - c) < pairwise_gap or abs(c - a) < pairwise_gap
        ):
            continue
        if right_gap > 0.0 and any(abs(x - HALF_PI) < right_gap for x in angles):
            continue
        return angles
    raise RuntimeError("angle sampling failed to satisfy the constraints")


def triangle_from_angles(
    rng: random.Random, angles: tuple[float, float, float]
) -> Triangle:
    """Inscribe the angle triple in a random circle (random pose and size)."""
    a, b, c = angles
    radius = rng.uniform(0.5, 2.0)
    phase = rng.uniform(0.0, 2.0 * math.pi)
    cx = rng.uniform(-3.0, 3.0)
    cy = rng.uniform(-3.0, 3.0)
    # central arcs: vertex A at phase, B after arc 2C, C after further 2A
    ts = (phase, phase + 2.0 * c, phase + 2.0 * c + 2.0 * a)
    pts = [Point(cx + radius * math.cos(t), cy + radius * math.sin(t)) for t in ts]
    if rng.random() < 0.5:  # both orientations
        pts = [Point(p.x, 2.0 * cy - p.y) for p in pts]
    return Triangle(*pts)


def random_triangle(
    rng: random.Random,
    min_angle: float = 0.30,
    pairwise_gap: float = 0.02,
    right_gap: float = 0.05,
) -> Triangle:
    """A scalene triangle with margins from degeneracy and right angles."""
    return triangle_from_angles(rng, _angles(rng, min_angle, pairwise_gap, right_gap))


def random_catalog_triangle(rng: random.Random) -> Triangle:
    """Scalene, pairwise angle gaps over 5 degrees, angles 20+ degrees from right."""
    return triangle_from_angles(
        rng,
        _angles(rng, min_angle=math.radians(12.0),
                pairwise_gap=math.radians(5.0), right_gap=math.radians(20.0)),
    )


def random_acute_triangle(
    rng: random.Random, min_angle: float = 0.35, right_gap: float = 0.05
) -> Triangle:
    while True:
        angles = _angles(rng, min_angle, 0.02, right_gap)
        if max(angles) < HALF_PI - right_gap:
            return triangle_from_angles(rng, angles)


def random_obtuse_at(
    rng: random.Random, vertex: str, min_angle: float = 0.25, right_gap: float = 0.08
) -> Triangle:
    """Obtuse exactly at the requested vertex label."""
    while True:
        angles = _angles(rng, min_angle, 0.02, right_gap)
        big = max(angles)
        if big < HALF_PI + right_gap:
            continue
        order = sorted(range(3), key=lambda i: angles[i])
        rolled = [0.0, 0.0, 0.0]
        target = "ABC".index(vertex)
        rolled[target] = big
        rest = [angles[i] for i in order[:2]]
        slots = [i for i in range(3) if i != target]
        rolled[slots[0]], rolled[slots[1]] = rest[0], rest[1]
        return triangle_from_angles(rng, tuple(rolled))


def random_isosceles(
    rng: random.Random, apex: str = "A", min_base: float = 0.30
) -> Triangle:
    """Isosceles at ``apex`` (the two adjacent sides equal), never equilateral."""
    while True:
        base = rng.uniform(min_base, HALF_PI - 0.05)
        apex_angle = math.pi - 2.0 * base
        if apex_angle < 0.2 or abs(apex_angle - base) < 0.05:
            continue
        angles = [0.0, 0.0, 0.0]
        i = "ABC".index(apex)
        angles[i] = apex_angle
        for j in range(3):
            if j != i:
                angles[j] = base
        return triangle_from_angles(rng, tuple(angles))


def random_interior_point(rng: random.Random, t: Triangle, margin: float = 0.05) -> Point:
    """Point strictly inside, with a barycentric margin from the sides."""
    while True:
        w = [-math.log(rng.random()) for _ in range(3)]
        s = sum(w)
        w = [x / s for x in w]
        if min(w) < margin:
            continue
        return (w[0] * t.a + w[1] * t.b + w[2] * t.c)


def random_point_in_circumdisk(
    rng: random.Random, t: Triangle, line_margin: float = 0.02, radial_margin: float = 0.03
) -> Point:
    """Point inside the circumcircle, off the side lines and the circle."""
    circ = t.circumcircle
    while True:
        r = circ.radius * math.sqrt(rng.random()) * (1.0 - radial_margin)
        phi = rng.uniform(0.0, 2.0 * math.pi)
        p = Point(circ.center.x + r * math.cos(phi), circ.center.y + r * math.sin(phi))
        if t.min_side_line_distance(p) < line_margin * circ.radius:
            continue
        return p


def random_exterior_point(
    rng: random.Random,
    t: Triangle,
    min_factor: float = 1.1,
    max_factor: float = 5.0,
    line_margin: float = 0.02,
) -> Point:
    """Point outside the circumcircle at a bounded distance from its center."""
    circ = t.circumcircle
    while True:
        r = circ.radius * rng.uniform(min_factor, max_factor)
        phi = rng.uniform(0.0, 2.0 * math.pi)
        p = Point(circ.center.x + r * math.cos(phi), circ.center.y + r * math.sin(phi))
        if t.min_side_line_distance(p) < line_margin * circ.radius:
            continue
        return p


def random_circumcircle_point(
    rng: random.Random, t: Triangle, vertex_margin: float = 0.05
) -> Point:
    """Point exactly on the circumcircle, away from the vertices."""
    circ = t.circumcircle
    vertex_angles = [(v - circ.center).angle() for v in t.vertices]
    while True:
        phi = rng.uniform(0.0, 2.0 * math.pi)
        if any(
            abs(math.remainder(phi - va, 2.0 * math.pi)) < vertex_margin
            for va in vertex_angles
        ):
            continue
        return circ.point_at(phi)


def random_arc_point(
    rng: random.Random,
    center: Point,
    radius: float,
    end1: Point,
    end2: Point,
    via: Point,
    margin: float = 0.08,
) -> Point:
    """Point on the arc from ``end1`` to ``end2`` passing through ``via``."""
    a1 = (end1 - center).angle()
    a2 = (end2 - center).angle()
    av = (via - center).angle()
    sweep = (a2 - a1) % (2.0 * math.pi)
    via_off = (av - a1) % (2.0 * math.pi)
    t = rng.uniform(margin, 1.0 - margin)
    if via_off <= sweep:
        ang = a1 + sweep * t
    else:
        ang = a1 - (2.0 * math.pi - sweep) * t
    return Point(center.x + radius * math.cos(ang), center.y + radius * math.sin(ang))
