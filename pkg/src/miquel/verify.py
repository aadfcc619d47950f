"""Seeded randomized verification suites, one per numbered claim.

Every suite draws its randomness through ``sampling.rng_for`` keyed by
(suite, seed, trial index), so reports are deterministic and trials could be
evaluated in any order. A claim aggregates the worst residual over all
trials and keeps the worst offending instance for reproduction.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

from . import centers
from .chains import check_mod3_similarity, iterate_chain
from .kernel import (
    Line,
    Point,
    Tolerance,
    Triangle,
    circumcircle,
    directed_angle,
    midpoint,
    reflect_over_line,
    second_intersection,
    triangle_contains,
)
from .sampling import (
    random_acute_triangle,
    random_arc_point,
    random_catalog_triangle,
    random_circumcircle_point,
    random_exterior_point,
    random_interior_point,
    random_isosceles,
    random_obtuse_at,
    random_point_in_circumdisk,
    random_triangle,
    rng_for,
)
from .triads import (
    SimsonLine,
    SpecialRole,
    Triad,
    angle_sextet,
    classify_similarity,
    containment_parity,
    detect_special_role,
    family_member,
    miquel_point,
    miquel_triangle_angles,
    pedal_feet,
    pedal_triad,
    verify_miquel_equations,
)

VERTEXES = ("A", "B", "C")


@dataclass
class ClaimResult:
    name: str
    tol: float
    trials: int = 0
    max_residual: float = 0.0
    worst: str | None = None
    informational: bool = False

    @property
    def passed(self) -> bool:
        return self.max_residual < self.tol

    def add(self, residual: float, witness: str) -> None:
        self.trials += 1
        if residual > self.max_residual:
            self.max_residual = residual
            self.worst = witness

    def add_bool(self, ok: bool, witness: str) -> None:
        self.add(0.0 if ok else 1.0, witness)


@dataclass
class SuiteReport:
    suite: str
    seed: int
    trials: int
    claims: list[ClaimResult] = field(default_factory=list)
    duration: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims if not c.informational)

    def claim(self, name: str, tol: float, informational: bool = False) -> ClaimResult:
        c = ClaimResult(name, tol, informational=informational)
        self.claims.append(c)
        return c


def _witness(i: int, t: Triangle, p: Point | None = None) -> str:
    core = (
        f"trial {i}: A=({t.a.x!r},{t.a.y!r}) B=({t.b.x!r},{t.b.y!r}) "
        f"C=({t.c.x!r},{t.c.y!r})"
    )
    if p is not None:
        core += f" P=({p.x!r},{p.y!r})"
    return core


def suite_theorem1(seed: int, trials: int = 1000) -> SuiteReport:
    """Three circles through a vertex and its adjacent triad points meet in
    one point, for triad points anywhere on the sides or their extensions."""
    report = SuiteReport("theorem1", seed, trials)
    concurrency = report.claim("circle-concurrency", 1e-8)
    for i in range(trials):
        rng = rng_for(seed, "theorem1", i)
        t = random_triangle(rng)
        params = []
        while len(params) < 3:
            s = rng.uniform(-1.0, 2.0)
            if abs(s) > 0.05 and abs(s - 1.0) > 0.05:
                params.append(s)
        res = miquel_point(t, Triad(t, *params))
        concurrency.add(res.residual / t.circumradius, _witness(i, t, res.point))
    return report


def suite_theorem2(seed: int, trials: int = 500) -> SuiteReport:
    """Directed-angle identities at the concurrency point: A + X = BPC,
    B + Y = CPA, C + Z = APB, over random family members."""
    report = SuiteReport("theorem2", seed, trials)
    equations = report.claim("angle-equations", 1e-9)
    for i in range(trials):
        rng = rng_for(seed, "theorem2", i)
        t = random_triangle(rng)
        p = random_point_in_circumdisk(rng, t)
        theta = rng.uniform(-1.2, 1.2)
        res = verify_miquel_equations(t, p, family_member(t, p, theta))
        equations.add(res.max, _witness(i, t, p))
    return report


def suite_lemma1(seed: int, trials: int = 400) -> SuiteReport:
    """Interior/exterior containment parity between the host triangle and
    the pedal triangle of the same point."""
    report = SuiteReport("lemma1", seed, trials)
    parity = report.claim("containment-parity", 0.5)
    ray_sum = report.claim("interior-ray-turn", 1e-9)
    for i in range(trials):
        rng = rng_for(seed, "lemma1", i)
        t = random_triangle(rng)
        if i % 2 == 0:
            p = random_interior_point(rng, t)
        elif i % 4 == 1:
            while True:  # inside the circumcircle but outside the triangle
                p = random_point_in_circumdisk(rng, t, line_margin=0.03)
                if not triangle_contains(t, p).inside:
                    break
        else:
            p = random_exterior_point(rng, t, min_factor=1.05, max_factor=5.0)
        rep = containment_parity(t, p)
        parity.add_bool(rep.agree, _witness(i, t, p))
        if rep.ray_angle_sum is not None:
            ray_sum.add(abs(rep.ray_angle_sum - 2.0 * math.pi), _witness(i, t, p))
    return report


def suite_lemma2(seed: int, trials: int = 500) -> SuiteReport:
    """The pedal-triangle angles equal the pairwise sums of the sextet
    angles, for points inside the circumcircle."""
    report = SuiteReport("lemma2", seed, trials)
    formulas = report.claim("sextet-angle-formulas", 1e-8)
    for i in range(trials):
        rng = rng_for(seed, "lemma2", i)
        t = random_triangle(rng)
        p = random_point_in_circumdisk(rng, t)
        angs = miquel_triangle_angles(t, p)
        x, y, z = pedal_triad(t, p).points
        worst = max(
            angs.x.distance(directed_angle(y, x, z)),
            angs.y.distance(directed_angle(z, y, x)),
            angs.z.distance(directed_angle(x, z, y)),
        )
        formulas.add(worst, _witness(i, t, p))
    return report


def suite_theorem3(seed: int, trials: int = 200) -> SuiteReport:
    """Circumcircle-inverse points have similar pedal triangles with the
    vertex-by-vertex correspondence."""
    report = SuiteReport("theorem3", seed, trials)
    similar = report.claim("inverse-pedal-similarity", 1e-7)
    for i in range(trials):
        rng = rng_for(seed, "theorem3", i)
        t = random_triangle(rng)
        circ = t.circumcircle
        while True:
            p = random_point_in_circumdisk(rng, t, radial_margin=0.05)
            if p.dist(circ.center) > 0.1 * circ.radius:
                break
        q = centers.inverse_in_circumcircle(t, p)
        shape_p = Triangle(*pedal_feet(t, p))
        shape_q = Triangle(*pedal_feet(t, q))
        worst = max(abs(a1 - a2) for a1, a2 in zip(shape_p.angles, shape_q.angles))
        similar.add(worst, _witness(i, t, p))
    return report


def suite_theorem4(seed: int, trials: int = 50) -> SuiteReport:
    """The eleven-point catalog: six interior points whose pedal triangles
    reproduce the host angles under the recorded permutation, plus five
    exterior inverses with host-similar pedal shapes."""
    report = SuiteReport("theorem4", seed, trials)
    interior_perm = report.claim("interior-angle-permutations", 1e-7)
    exterior_sim = report.claim("exterior-inverse-similarity", 1e-7)
    counts = report.claim("six-interior-five-exterior", 0.5)
    distinct = report.claim("pairwise-distinct", 0.5)
    orientation_note = report.claim("orientation-split-observed", 0.5, informational=True)
    for i in range(trials):
        rng = rng_for(seed, "theorem4", i)
        t = random_catalog_triangle(rng)
        cat = centers.eleven_point_catalog(t)
        inside = [e for e in cat if t.circumcircle.offset_of(e.location) < 0.0]
        outside = [e for e in cat if t.circumcircle.offset_of(e.location) > 0.0]
        counts.add_bool(len(inside) == 6 and len(outside) == 5, _witness(i, t))
        min_pair = min(
            cat[a].location.dist(cat[b].location)
            for a in range(len(cat))
            for b in range(a + 1, len(cat))
        )
        distinct.add_bool(min_pair > 1e-6 * t.circumradius, _witness(i, t))
        host_angles = {v: t.angle(v) for v in VERTEXES}
        orientations = []
        for e in cat:
            shape = Triangle(*pedal_feet(t, e.location))
            perm = e.expected_similarity  # triad letters for host A, B, C
            slot = {"X": "A", "Y": "B", "Z": "C"}
            worst = max(
                abs(host_angles[v] - shape.angle(slot[ch]))
                for v, ch in zip(VERTEXES, perm)
            )
            if e.inverse:
                exterior_sim.add(worst, _witness(i, t, e.location))
            else:
                interior_perm.add(worst, _witness(i, t, e.location))
                match = classify_similarity(t, shape, Tolerance(angle_eps=1e-7))
                orientations.append(match.orientation if match else "?")
        orientation_note.add_bool(
            orientations.count("direct") == 3 and orientations.count("inverse") == 3,
            _witness(i, t),
        )
    return report


def _pedal_triangle(t: Triangle, p: Point) -> Triangle:
    return Triangle(*pedal_feet(t, p))


def suite_theorem5(seed: int, trials: int = 100) -> SuiteReport:
    """Circumcenter hosts: the point is the orthocenter of its pedal triangle."""
    report = SuiteReport("theorem5", seed, trials)
    claim = report.claim("orthocenter-of-pedal", 1e-8)
    for i in range(trials):
        rng = rng_for(seed, "theorem5", i)
        t = random_triangle(rng)
        o = centers.circumcenter(t)
        claim.add(
            centers.orthocenter(_pedal_triangle(t, o)).dist(o) / t.circumradius,
            _witness(i, t, o),
        )
    return report


def suite_theorem6(seed: int, trials: int = 100) -> SuiteReport:
    """Orthocenter hosts: the point is the incenter of the pedal triangle
    for acute hosts, and the excenter opposite the relabeled obtuse vertex
    for obtuse ones."""
    report = SuiteReport("theorem6", seed, trials)
    acute = report.claim("acute-incenter", 1e-8)
    obtuse = report.claim("obtuse-excenter", 1e-8)
    for i in range(trials):
        rng = rng_for(seed, "theorem6", i)
        if i % 2 == 0:
            t = random_acute_triangle(rng)
            h = centers.orthocenter(t)
            target = centers.incenter(_pedal_triangle(t, h))
            acute.add(target.dist(h) / t.circumradius, _witness(i, t, h))
        else:
            v = VERTEXES[(i // 2) % 3]
            t = random_obtuse_at(rng, v)
            h = centers.orthocenter(t)
            target = centers.excenter(_pedal_triangle(t, h), v)
            obtuse.add(target.dist(h) / t.circumradius, _witness(i, t, h))
    return report


def suite_theorem7(seed: int, trials: int = 100) -> SuiteReport:
    """Incircle and excircle centers become the circumcenter of their pedal
    triangle."""
    report = SuiteReport("theorem7", seed, trials)
    from_in = report.claim("incenter-to-circumcenter", 1e-8)
    from_ex = report.claim("excenter-to-circumcenter", 1e-8)
    for i in range(trials):
        rng = rng_for(seed, "theorem7", i)
        t = random_triangle(rng)
        l = centers.incenter(t)
        from_in.add(
            centers.circumcenter(_pedal_triangle(t, l)).dist(l) / t.circumradius,
            _witness(i, t, l),
        )
        ex = centers.excenter(t, VERTEXES[i % 3])
        from_ex.add(
            centers.circumcenter(_pedal_triangle(t, ex)).dist(ex) / t.circumradius,
            _witness(i, t, ex),
        )
    return report


def suite_theorem8(seed: int, trials: int = 100) -> SuiteReport:
    """Brocard points stay Brocard points of their pedal triangles."""
    report = SuiteReport("theorem8", seed, trials)
    position = report.claim("brocard-position", 1e-8)
    angles = report.claim("brocard-angle-condition", 1e-8)
    for i in range(trials):
        rng = rng_for(seed, "theorem8", i)
        t = random_triangle(rng)
        which = "first" if i % 2 == 0 else "second"
        p = centers.brocard_point(t, which)
        shape = _pedal_triangle(t, p)
        position.add(
            centers.brocard_point(shape, which).dist(p) / t.circumradius,
            _witness(i, t, p),
        )
        s = angle_sextet(shape, p)
        trio = (s.alpha2, s.beta2, s.gamma2) if which == "first" else (s.alpha1, s.beta1, s.gamma1)
        angles.add(
            max(trio[0].distance(trio[1]), trio[1].distance(trio[2])),
            _witness(i, t, p),
        )
    return report


def _theorem9_case(t: Triangle, v: str, report_median, report_midpoint, report_match, wit):
    p = centers.s_point(t, v)
    shape = _pedal_triangle(t, p)
    apex = shape.vertex(v)
    b2, c2 = shape.opposite(v)
    e = midpoint(b2, c2)
    median = Line.through(apex, e)
    r = t.circumradius
    report_median.add(abs(median.offset(p)) / r, wit)
    if t.angle(v) < math.pi / 2.0:
        f = second_intersection(median, shape.circumcircle, apex).point
        report_midpoint.add(abs(e.dist(p) - e.dist(f)) / r, wit)
    else:
        host_circle = circumcircle(t.vertex(v), *(pedal_feet(t, p)[i] for i in _adjacent(v)))
        f = second_intersection(median, host_circle, p).point
        report_midpoint.add(abs(apex.dist(e) - e.dist(f)) / r, wit)
    report_match.add(centers.m_point(shape, v).dist(p) / r, wit)


def _adjacent(v: str) -> tuple[int, int]:
    """Indices into the (X, Y, Z) feet adjacent to host vertex v."""
    i = VERTEXES.index(v)
    return ((i + 1) % 3, (i + 2) % 3)


def suite_theorem9(seed: int, trials: int = 100) -> SuiteReport:
    """Symmedian arc points land on the median of their pedal triangle, at
    the mirrored-chord position, i.e. they take the median special role."""
    report = SuiteReport("theorem9", seed, trials)
    on_median = report.claim("on-pedal-median", 1e-7)
    midpoint_rel = report.claim("median-chord-midpoint", 1e-7)
    m_match = report.claim("median-point-match", 1e-7)
    for i in range(trials):
        rng = rng_for(seed, "theorem9", i)
        v = VERTEXES[i % 3]
        t = random_obtuse_at(rng, v) if i % 2 else random_acute_triangle(rng)
        _theorem9_case(t, v, on_median, midpoint_rel, m_match, _witness(i, t))
    return report


def suite_theorem10(seed: int, trials: int = 100) -> SuiteReport:
    """Median special points give isosceles pedal triangles, sit on the
    circle through the base vertices and the pedal incenter, and flip
    interior/exterior with the host's acuteness."""
    report = SuiteReport("theorem10", seed, trials)
    base_angles = report.claim("isosceles-base-angles", 1e-8)
    arc = report.claim("on-base-incenter-circle", 1e-8)
    parity = report.claim("containment-parity", 0.5)
    for i in range(trials):
        rng = rng_for(seed, "theorem10", i)
        v = VERTEXES[i % 3]
        obtuse_case = bool(i % 2)
        t = random_obtuse_at(rng, v) if obtuse_case else random_acute_triangle(rng)
        p = centers.m_point(t, v)
        shape = _pedal_triangle(t, p)
        b2, c2 = shape.opposite(v)
        host_dir = t.directed_angle_at(v)
        worst = max(
            shape.directed_angle_at(u).distance(host_dir) for u in VERTEXES if u != v
        )
        base_angles.add(worst, _witness(i, t, p))
        circ = circumcircle(b2, c2, centers.incenter(shape))
        arc.add(abs(circ.offset_of(p)) / t.circumradius, _witness(i, t, p))
        inside = triangle_contains(shape, p).inside
        parity.add_bool(inside != obtuse_case, _witness(i, t, p))
    return report


def suite_theorem11(seed: int, trials: int = 100) -> SuiteReport:
    """On an isosceles host, points of the base-incenter arc take the
    symmedian arc role in their pedal triangle."""
    report = SuiteReport("theorem11", seed, trials)
    s_match = report.claim("s-point-match", 1e-7)
    double_angle = report.claim("double-angle-at-point", 1e-8)
    role = report.claim("role-detected", 0.5)
    for i in range(trials):
        rng = rng_for(seed, "theorem11", i)
        v = VERTEXES[i % 3]
        t = random_isosceles(rng, v)
        l = centers.incenter(t)
        b, c = t.opposite(v)
        circ = circumcircle(b, c, l)
        p = random_arc_point(rng, circ.center, circ.radius, c, b, l)
        shape = _pedal_triangle(t, p)
        wit = _witness(i, t, p)
        s_match.add(centers.s_point(shape, v).dist(p) / t.circumradius, wit)
        b2, c2 = shape.opposite(v)
        double_angle.add(
            directed_angle(b2, p, c2).distance(2 * shape.directed_angle_at(v)), wit
        )
        detected = detect_special_role(shape, p, Tolerance(length_eps_rel=1e-7))
        role.add_bool(detected == SpecialRole("s_role", v), wit)
    return report


def suite_theorem12(seed: int, trials: int = 200) -> SuiteReport:
    """The symmedian arc point and the median special point of each vertex
    are isogonal conjugates."""
    report = SuiteReport("theorem12", seed, trials)
    pair = report.claim("isogonal-pair", 1e-8)
    for i in range(trials):
        rng = rng_for(seed, "theorem12", i)
        v = VERTEXES[i % 3]
        t = random_obtuse_at(rng, v) if i % 2 else random_acute_triangle(rng)
        conj = centers.isogonal_conjugate(t, centers.s_point(t, v))
        pair.add(conj.dist(centers.m_point(t, v)) / t.circumradius, _witness(i, t))
    return report


def suite_theorem13(seed: int, trials: int = 100) -> SuiteReport:
    """On an isosceles host, reflecting a base-incenter arc point over the
    axis yields its isogonal conjugate (three mirrored angle equations)."""
    report = SuiteReport("theorem13", seed, trials)
    equations = report.claim("mirror-angle-equations", 1e-8)
    conj = report.claim("conjugate-position", 1e-8)
    for i in range(trials):
        rng = rng_for(seed, "theorem13", i)
        t = random_isosceles(rng, "A")
        l = centers.incenter(t)
        circ = circumcircle(t.b, t.c, l)
        q = random_arc_point(rng, circ.center, circ.radius, t.c, t.b, l)
        axis = Line.through(t.a, midpoint(t.b, t.c))
        tpt = reflect_over_line(axis, q)
        wit = _witness(i, t, q)
        worst = max(
            directed_angle(t.c, t.b, tpt).distance(directed_angle(q, t.b, t.a)),
            directed_angle(t.b, t.a, q).distance(directed_angle(tpt, t.a, t.c)),
            directed_angle(t.a, t.c, tpt).distance(directed_angle(q, t.c, t.b)),
        )
        equations.add(worst, wit)
        conj.add(centers.isogonal_conjugate(t, q).dist(tpt) / t.circumradius, wit)
    return report


_CHAIN_TOL = Tolerance(angle_eps=1e-6, length_eps_rel=1e-9)


def _chain_points(rng, t: Triangle) -> list[tuple[str, Point]]:
    return [
        ("O", centers.circumcenter(t)),
        ("H", centers.orthocenter(t)),
        ("L", centers.incenter(t)),
        ("brocard1", centers.brocard_point(t, "first")),
        ("random", random_interior_point(rng, t)),
    ]


def suite_theorem14(seed: int, trials: int = 50) -> SuiteReport:
    """Chains: triangles with indices congruent mod 3 are similar, for both
    the pedal schedule and random rotation schedules."""
    report = SuiteReport("theorem14", seed, trials)
    default_sched = report.claim("mod3-pedal-schedule", 1e-6)
    random_sched = report.claim("mod3-random-schedule", 1e-6)
    k = 9
    for i in range(trials):
        rng = rng_for(seed, "theorem14", i)
        t = random_triangle(rng, min_angle=0.35, right_gap=0.1)
        for name, p in _chain_points(rng, t):
            rec = iterate_chain(t, p, k)
            rep = check_mod3_similarity(rec, _CHAIN_TOL)
            default_sched.add(
                rep.worst_residual if rep.ok else 1.0, _witness(i, t, p) + f" [{name}]"
            )
            thetas = [rng.uniform(-math.pi / 3, math.pi / 3) for _ in range(k)]
            rep2 = check_mod3_similarity(iterate_chain(t, p, k, thetas=thetas), _CHAIN_TOL)
            random_sched.add(
                rep2.worst_residual if rep2.ok else 1.0, _witness(i, t, p) + f" [{name}]"
            )
    return report


def suite_theorem15(seed: int, trials: int = 50) -> SuiteReport:
    """Chain similarity-to-seed schedules for the special points: Brocard
    chains all similar; circumcenter and symmedian chains at steps 0,1 mod 3;
    orthocenter and median chains at steps 2,0 mod 3."""
    report = SuiteReport("theorem15", seed, trials)
    brocard_all = report.claim("brocard-all-similar", 1e-6)
    brocard_angles = report.claim("brocard-angle-fixed", 1e-7)
    o_s_steps = report.claim("seed-similar-steps-0-1-mod3", 1e-6)
    h_m_steps = report.claim("seed-similar-steps-2-0-mod3", 1e-6)
    generic = report.claim("generic-steps-1-2-dissimilar", 0.5, informational=True)
    k = 6
    for i in range(trials):
        rng = rng_for(seed, "theorem15", i)
        t = random_triangle(rng, min_angle=0.35, right_gap=0.1)
        v = VERTEXES[i % 3]
        wit = _witness(i, t)

        for which in ("first", "second"):
            p = centers.brocard_point(t, which)
            rec = iterate_chain(t, p, k)
            for tri in rec.triangles[1:]:
                match = classify_similarity(t, tri, _CHAIN_TOL)
                brocard_all.add(match.residual if match else 1.0, wit + f" [{which}]")
            for step_t in rec.triangles:
                s = angle_sextet(step_t, p)
                trio = (
                    (s.alpha2, s.beta2, s.gamma2) if which == "first"
                    else (s.alpha1, s.beta1, s.gamma1)
                )
                brocard_angles.add(
                    max(trio[0].distance(trio[1]), trio[1].distance(trio[2])),
                    wit + f" [{which}]",
                )

        for p in (centers.circumcenter(t), centers.s_point(t, v)):
            rec = iterate_chain(t, p, k)
            for step_idx in (1, 3, 4, 6):
                match = classify_similarity(t, rec.triangles[step_idx], _CHAIN_TOL)
                o_s_steps.add(match.residual if match else 1.0, wit + f" [k={step_idx}]")

        for p in (centers.orthocenter(t), centers.m_point(t, v)):
            rec = iterate_chain(t, p, k)
            for step_idx in (2, 3, 5, 6):
                match = classify_similarity(t, rec.triangles[step_idx], _CHAIN_TOL)
                h_m_steps.add(match.residual if match else 1.0, wit + f" [k={step_idx}]")

        p = random_interior_point(rng, t)
        rec = iterate_chain(t, p, 3)
        dissimilar = all(
            classify_similarity(t, rec.triangles[step_idx], _CHAIN_TOL) is None
            for step_idx in (1, 2)
        )
        generic.add_bool(dissimilar, wit + " [random]")
    return report


_CENTER_CYCLE = ("circumcenter", "orthocenter", ("incenter", "excenter"))
_SYMMEDIAN_CYCLE = ("s_role", "m_role", "q_role")


def _matches_cycle(roles, cycle) -> bool:
    for idx, role in enumerate(roles):
        expect = cycle[idx % len(cycle)]
        names = expect if isinstance(expect, tuple) else (expect,)
        if role.role not in names:
            return False
    return True


def suite_corollary4(seed: int, trials: int = 50) -> SuiteReport:
    """Detected role sequences along chains: circumcenter -> orthocenter ->
    in/excenter repeating, symmedian -> median -> arc role repeating, and
    Brocard points pinned at every step."""
    report = SuiteReport("corollary4", seed, trials)
    center_cycle = report.claim("center-role-cycle", 0.5)
    symmedian_cycle = report.claim("symmedian-role-cycle", 0.5)
    brocard_fixed = report.claim("brocard-role-fixed", 0.5)
    k = 6
    for i in range(trials):
        rng = rng_for(seed, "corollary4", i)
        t = random_triangle(rng, min_angle=0.35, right_gap=0.1)
        v = VERTEXES[i % 3]
        wit = _witness(i, t)

        rec = iterate_chain(t, centers.circumcenter(t), k)
        center_cycle.add_bool(_matches_cycle(rec.roles, _CENTER_CYCLE), wit + " [O]")

        rec = iterate_chain(t, centers.s_point(t, v), k)
        ok = _matches_cycle(rec.roles, _SYMMEDIAN_CYCLE) and all(
            r.vertex == v for r in rec.roles
        )
        symmedian_cycle.add_bool(ok, wit + f" [S_{v}]")

        for which, role_name in (("first", "first_brocard"), ("second", "second_brocard")):
            rec = iterate_chain(t, centers.brocard_point(t, which), k)
            brocard_fixed.add_bool(
                all(r.role == role_name for r in rec.roles), wit + f" [{which}]"
            )
    return report


def suite_simson(seed: int, trials: int = 200) -> SuiteReport:
    """Points on the circumcircle: the three pedal feet are collinear."""
    report = SuiteReport("simson", seed, trials)
    collinear = report.claim("feet-collinear", 1e-9)
    for i in range(trials):
        rng = rng_for(seed, "simson", i)
        t = random_triangle(rng)
        p = random_circumcircle_point(rng, t)
        sim = pedal_triad(t, p)
        if not isinstance(sim, SimsonLine):
            collinear.add(1.0, _witness(i, t, p))
            continue
        collinear.add(sim.max_deviation() / t.circumradius, _witness(i, t, p))
    return report


SUITES = {
    "theorem1": suite_theorem1,
    "theorem2": suite_theorem2,
    "theorem3": suite_theorem3,
    "theorem4": suite_theorem4,
    "theorem5": suite_theorem5,
    "theorem6": suite_theorem6,
    "theorem7": suite_theorem7,
    "theorem8": suite_theorem8,
    "theorem9": suite_theorem9,
    "theorem10": suite_theorem10,
    "theorem11": suite_theorem11,
    "theorem12": suite_theorem12,
    "theorem13": suite_theorem13,
    "theorem14": suite_theorem14,
    "theorem15": suite_theorem15,
    "corollary4": suite_corollary4,
    "lemma1": suite_lemma1,
    "lemma2": suite_lemma2,
    "simson": suite_simson,
}


def run_suite(name: str, seed: int, trials: int | None = None) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    fn = SUITES[name]
    started = time.perf_counter()
    report = fn(seed) if trials is None else fn(seed, trials)
    report.duration = time.perf_counter() - started
    return report


def run_all(seed: int, trials: int | None = None) -> list[SuiteReport]:
    return [run_suite(name, seed, trials) for name in SUITES]
