"""Triad constructions: concurrency, families, angle bookkeeping, similarity
classification, role detection and containment parity."""

import math

import pytest

from miquel.centers import (
    brocard_point,
    circumcenter,
    excenter,
    incenter,
    m_point,
    orthocenter,
    s_point,
)
from miquel.errors import (
    AtVertexError,
    NotAMiquelTriadError,
    OnCircumcircleError,
    OnSideLineError,
    ThetaOutOfRangeError,
)
from miquel.kernel import DirectedAngle, Point, Tolerance, Triangle, circumcircle, directed_angle
from miquel.sampling import (
    random_catalog_triangle,
    random_circumcircle_point,
    random_exterior_point,
    random_interior_point,
    random_isosceles,
    random_point_in_circumdisk,
    random_triangle,
    rng_for,
)
from miquel.triads import (
    SimsonLine,
    SpecialRole,
    Triad,
    all_similarities,
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

SQ3 = math.sqrt(3.0)
T345 = Triangle(Point(0, 0), Point(4, 0), Point(0, 3))
TSCA = Triangle(Point(0, 0), Point(4, 0), Point(1, 3))
EQUI = Triangle(Point(0, 1), Point(-SQ3 / 2, -0.5), Point(SQ3 / 2, -0.5))


class TestPedalTriad:
    def test_circumcenter_gives_midpoints(self):
        ped = pedal_triad(TSCA, circumcenter(TSCA))
        assert abs(ped.u - 0.5) < 1e-12
        assert abs(ped.v - 0.5) < 1e-12
        assert abs(ped.w - 0.5) < 1e-12

    def test_orthocenter_gives_altitude_feet(self):
        h = orthocenter(TSCA)
        ped = pedal_triad(TSCA, h)
        for foot, v in zip(ped.points, "ABC"):
            side = TSCA.side_line(v)
            assert abs(side.offset(foot)) < 1e-12
            assert abs((foot - h).dot(side.direction)) < 1e-12

    def test_antipode_simson_on_hypotenuse_line(self):
        # antipode of the right-angle vertex: the feet collapse onto line BC
        sim = pedal_triad(T345, Point(4, 3))
        assert isinstance(sim, SimsonLine)
        feet = sorted(sim.feet, key=lambda p: p.x)
        assert feet[0].dist(Point(0, 3)) < 1e-12
        assert feet[1].dist(Point(64 / 25, 27 / 25)) < 1e-12
        assert feet[2].dist(Point(4, 0)) < 1e-12
        hypotenuse = T345.side_line("A")
        for f in sim.feet:
            assert abs(hypotenuse.offset(f)) < 1e-12
        assert sim.max_deviation() < 1e-12

    def test_side_line_rejected(self):
        with pytest.raises(OnSideLineError):
            pedal_triad(TSCA, Point(2, 0))

    def test_feet_are_perpendicular_projections(self):
        rng = rng_for(0, "pedal", 0)
        for _ in range(100):
            t = random_triangle(rng)
            p = random_point_in_circumdisk(rng, t)
            triad = pedal_triad(t, p)
            for foot, v in zip(triad.points, "ABC"):
                side = t.side_line(v)
                assert abs(side.offset(foot)) < 1e-12 * t.circumradius
                assert abs((foot - p).dot(side.direction)) < 1e-12 * t.circumradius


class TestMiquelPoint:
    def test_midpoints_give_circumcenter(self):
        res = miquel_point(TSCA, Triad(TSCA, 0.5, 0.5, 0.5))
        assert res.point.dist(circumcenter(TSCA)) < 1e-12
        assert res.residual < 1e-12

    def test_altitude_feet_give_orthocenter(self):
        ped = pedal_triad(TSCA, orthocenter(TSCA))
        res = miquel_point(TSCA, ped)
        assert res.point.dist(orthocenter(TSCA)) < 1e-12

    def test_uniform_params_concurrency(self):
        res = miquel_point(TSCA, Triad(TSCA, 0.3, 0.3, 0.3))
        assert res.residual < 1e-9 * TSCA.circumradius
        # frozen regression value for the workhorse triangle
        assert res.point.dist(Point(1.7023121387283235, 0.6849710982658955)) < 1e-10

    def test_concurrency_on_extensions(self):
        rng = rng_for(0, "miquel", 0)
        for _ in range(300):
            t = random_triangle(rng)
            params = []
            while len(params) < 3:
                s = rng.uniform(-1.0, 2.0)
                if abs(s) > 0.05 and abs(s - 1.0) > 0.05:
                    params.append(s)
            res = miquel_point(t, Triad(t, *params))
            assert res.residual < 1e-8 * t.circumradius

    def test_circles_pass_through_expected_points(self):
        triad = Triad(TSCA, 0.4, 0.7, 0.2)
        res = miquel_point(TSCA, triad)
        ca, cb, cc = res.circles
        x, y, z = triad.points
        for circ, pts in ((ca, (TSCA.a, y, z)), (cb, (TSCA.b, z, x)), (cc, (TSCA.c, x, y))):
            for q in pts:
                assert abs(circ.offset_of(q)) < 1e-12


class TestFamilyMember:
    def test_zero_theta_reproduces_pedal(self):
        p = Point(1.2, 0.8)
        ped = pedal_triad(TSCA, p)
        fam = family_member(TSCA, p, 0.0)
        assert abs(fam.u - ped.u) < 1e-12
        assert abs(fam.v - ped.v) < 1e-12
        assert abs(fam.w - ped.w) < 1e-12

    def test_equilateral_ratio_at_pi_over_six(self):
        o = circumcenter(EQUI)
        fam = family_member(EQUI, o, math.pi / 6)
        ped = pedal_triad(EQUI, o)
        ratio = fam.triangle().side_lengths[0] / ped.triangle().side_lengths[0]
        assert abs(ratio - 2.0 / SQ3) < 1e-12

    def test_roundtrip_and_similarity_ratio(self):
        rng = rng_for(0, "family", 0)
        for _ in range(500):
            t = random_triangle(rng)
            p = random_point_in_circumdisk(rng, t)
            theta = rng.uniform(-1.2, 1.2)
            fam = family_member(t, p, theta)
            res = miquel_point(t, fam)
            assert res.point.dist(p) < 1e-8 * t.circumradius
            ped = pedal_triad(t, p)
            ratio = fam.triangle().side_lengths[0] / ped.triangle().side_lengths[0]
            assert abs(ratio - 1.0 / math.cos(theta)) < 1e-8 * (1.0 / math.cos(theta))

    def test_theta_range_enforced(self):
        with pytest.raises(ThetaOutOfRangeError):
            family_member(TSCA, Point(1.2, 0.8), math.pi / 2)

    def test_family_members_mutually_similar(self):
        p = Point(1.2, 0.8)
        tol = Tolerance(angle_eps=1e-8)
        thetas = [-1.4 + 2.8 * k / 19 for k in range(20)]
        tris = [family_member(TSCA, p, th).triangle() for th in thetas]
        ped = pedal_triad(TSCA, p).triangle()
        for th, tri in zip(thetas, tris):
            match = classify_similarity(ped, tri, tol)
            assert match is not None and match.permutation == "ABC"
            assert abs(match.ratio - 1.0 / math.cos(th)) < 1e-8 / math.cos(th)
        for i in range(len(tris) - 1):
            match = classify_similarity(tris[i], tris[i + 1], tol)
            assert match is not None and match.permutation == "ABC"


class TestAngleSextet:
    def test_equilateral_circumcenter_all_pi_six(self):
        s = angle_sextet(EQUI, Point(0, 0))
        for ang in (s.alpha1, s.alpha2, s.beta1, s.beta2, s.gamma1, s.gamma2):
            assert abs(abs(ang.value) - math.pi / 6) < 1e-12

    def test_incenter_halves_the_angles(self):
        l = incenter(TSCA)
        s = angle_sextet(TSCA, l)
        assert s.alpha1.distance(s.alpha2) < 1e-12
        assert s.beta1.distance(s.beta2) < 1e-12
        assert s.gamma1.distance(s.gamma2) < 1e-12

    def test_first_brocard_equalizes_tail_angles(self):
        p = brocard_point(TSCA, "first")
        s = angle_sextet(TSCA, p)
        assert s.alpha2.distance(s.beta2) < 1e-10
        assert s.beta2.distance(s.gamma2) < 1e-10

    def test_pairs_sum_to_vertex_angles(self):
        rng = rng_for(0, "sextet", 0)
        for _ in range(100):
            t = random_triangle(rng)
            p = random_point_in_circumdisk(rng, t)
            s = angle_sextet(t, p)
            assert (s.alpha1 + s.alpha2).distance(t.directed_angle_at("A")) < 1e-12
            assert (s.beta1 + s.beta2).distance(t.directed_angle_at("B")) < 1e-12
            assert (s.gamma1 + s.gamma2).distance(t.directed_angle_at("C")) < 1e-12

    def test_vertex_rejected(self):
        with pytest.raises(AtVertexError):
            angle_sextet(TSCA, Point(0, 0))


class TestMiquelTriangleAngles:
    def test_circumcenter_reproduces_host_angles(self):
        o = circumcenter(TSCA)
        angs = miquel_triangle_angles(TSCA, o)
        assert angs.x.distance(TSCA.directed_angle_at("A")) < 1e-12
        assert angs.y.distance(TSCA.directed_angle_at("B")) < 1e-12
        assert angs.z.distance(TSCA.directed_angle_at("C")) < 1e-12
        assert not angs.extrapolated

    def test_equilateral_circumcenter(self):
        angs = miquel_triangle_angles(EQUI, Point(0, 0))
        for ang in (angs.x, angs.y, angs.z):
            assert ang.distance(DirectedAngle(math.pi / 3)) < 1e-12

    def test_incenter_half_angle_formula(self):
        # at the incenter the formulas reduce to pi/2 - half the host angle
        l = incenter(TSCA)
        angs = miquel_triangle_angles(TSCA, l)
        for got, v in zip((angs.x, angs.y, angs.z), "ABC"):
            expected = DirectedAngle(math.pi / 2 - 0.5 * TSCA.orientation * TSCA.angle(v))
            assert got.distance(expected) < 1e-12

    def test_matches_measured_pedal_angles(self):
        rng = rng_for(0, "lemma-angles", 0)
        for _ in range(200):
            t = random_triangle(rng)
            p = random_point_in_circumdisk(rng, t)
            angs = miquel_triangle_angles(t, p)
            x, y, z = pedal_triad(t, p).points
            assert angs.x.distance(directed_angle(y, x, z)) < 1e-8
            assert angs.y.distance(directed_angle(z, y, x)) < 1e-8
            assert angs.z.distance(directed_angle(x, z, y)) < 1e-8
            # the three formulas sum to the host angle sum: zero mod half turn
            total = angs.x + angs.y + angs.z
            assert total.distance(DirectedAngle(0.0)) < 1e-12

    def test_exterior_points_flagged(self):
        rng = rng_for(0, "lemma-angles", 1)
        t = random_triangle(rng)
        p = random_exterior_point(rng, t)
        assert miquel_triangle_angles(t, p).extrapolated


class TestMiquelEquations:
    def test_circumcenter_doubles_vertex_angles(self):
        o = circumcenter(TSCA)
        res = verify_miquel_equations(TSCA, o, Triad(TSCA, 0.5, 0.5, 0.5))
        assert res.max < 1e-12
        assert directed_angle(TSCA.b, o, TSCA.c).distance(2 * TSCA.directed_angle_at("A")) < 1e-12

    def test_equilateral_center(self):
        o = Point(0, 0)
        res = verify_miquel_equations(EQUI, o, pedal_triad(EQUI, o))
        assert res.max < 1e-12

    def test_random_family_members(self):
        rng = rng_for(0, "equations", 0)
        for _ in range(500):
            t = random_triangle(rng)
            p = random_point_in_circumdisk(rng, t)
            theta = rng.uniform(-1.2, 1.2)
            res = verify_miquel_equations(t, p, family_member(t, p, theta))
            assert res.max < 1e-9

    def test_foreign_triad_rejected(self):
        with pytest.raises(NotAMiquelTriadError):
            verify_miquel_equations(TSCA, Point(1.0, 1.0), Triad(TSCA, 0.5, 0.5, 0.5))


class TestClassifySimilarity:
    def test_identity(self):
        match = classify_similarity(TSCA, TSCA)
        assert match.permutation == "ABC"
        assert match.orientation == "direct"
        assert abs(match.ratio - 1.0) < 1e-12

    def test_mirror_is_inverse_orientation(self):
        mirrored = Triangle(
            Point(-TSCA.a.x, TSCA.a.y), Point(-TSCA.b.x, TSCA.b.y), Point(-TSCA.c.x, TSCA.c.y)
        )
        match = classify_similarity(TSCA, mirrored)
        assert match.permutation == "ABC"
        assert match.orientation == "inverse"

    def test_dissimilar_returns_none(self):
        assert classify_similarity(T345, EQUI) is None

    def test_scaled_rotated_copy(self):
        rng = rng_for(0, "classify", 0)
        for _ in range(50):
            t = random_triangle(rng)
            s = rng.uniform(0.3, 3.0)
            phi = rng.uniform(0, 2 * math.pi)
            shift = Point(rng.uniform(-2, 2), rng.uniform(-2, 2))
            moved = Triangle(*((v - t.a).rotated(phi) * s + shift for v in t.vertices))
            match = classify_similarity(t, moved)
            assert match is not None
            assert match.permutation == "ABC"
            assert abs(match.ratio - s) < 1e-9 * s

    def test_equilateral_ties_return_all(self):
        matches = all_similarities(EQUI, EQUI, Tolerance(angle_eps=1e-6))
        assert len(matches) == 6


class TestDetectSpecialRole:
    def test_named_centers(self):
        tol = Tolerance(length_eps_rel=1e-9)
        assert detect_special_role(TSCA, circumcenter(TSCA), tol) == SpecialRole("circumcenter")
        assert detect_special_role(TSCA, brocard_point(TSCA, "first"), tol) == SpecialRole("first_brocard")
        assert detect_special_role(TSCA, s_point(TSCA, "B"), tol) == SpecialRole("s_role", "B")
        assert detect_special_role(TSCA, m_point(TSCA, "C"), tol) == SpecialRole("m_role", "C")
        assert detect_special_role(TSCA, excenter(TSCA, "A"), tol) == SpecialRole("excenter", "A")

    def test_generic_point_is_none(self):
        assert detect_special_role(TSCA, Point(1.31, 0.87)) == SpecialRole("none")

    def test_q_role_on_incenter_arc(self):
        rng = rng_for(0, "qrole", 0)
        from miquel.sampling import random_arc_point

        for _ in range(20):
            t = random_isosceles(rng, "A")
            l = incenter(t)
            arc = circumcircle(t.b, t.c, l)
            p = random_arc_point(rng, arc.center, arc.radius, t.c, t.b, l)
            role = detect_special_role(t, p, Tolerance(length_eps_rel=1e-7))
            assert role == SpecialRole("q_role", "A")


class TestContainmentParity:
    def test_incenter_inside_both(self):
        rep = containment_parity(TSCA, incenter(TSCA))
        assert rep.inside_host and rep.inside_miquel and rep.agree

    def test_circumcenter_of_acute_host(self):
        rep = containment_parity(TSCA, circumcenter(TSCA))
        assert rep.agree and rep.inside_host
        assert abs(rep.ray_angle_sum - 2 * math.pi) < 1e-9

    def test_far_exterior_point(self):
        rng = rng_for(0, "parity", 0)
        for _ in range(50):
            t = random_triangle(rng)
            p = random_exterior_point(rng, t, min_factor=2.0, max_factor=5.0)
            rep = containment_parity(t, p)
            assert not rep.inside_host and not rep.inside_miquel and rep.agree

    def test_parity_everywhere(self):
        rng = rng_for(0, "parity", 1)
        for _ in range(300):
            t = random_triangle(rng)
            p = (
                random_interior_point(rng, t)
                if rng.random() < 0.5
                else random_exterior_point(rng, t, min_factor=0.2, max_factor=4.0)
            )
            if abs(t.circumcircle.offset_of(p)) < 1e-3 * t.circumradius:
                continue
            if t.min_side_line_distance(p) < 1e-3 * t.circumradius:
                continue
            assert containment_parity(t, p).agree

    def test_on_circle_rejected(self):
        rng = rng_for(0, "parity", 2)
        t = random_triangle(rng)
        with pytest.raises(OnCircumcircleError):
            containment_parity(t, random_circumcircle_point(rng, t))


class TestSimson:
    def test_collinearity_on_circumcircle(self):
        rng = rng_for(0, "simson", 0)
        for _ in range(200):
            t = random_triangle(rng)
            p = random_circumcircle_point(rng, t)
            sim = pedal_triad(t, p)
            assert isinstance(sim, SimsonLine)
            assert sim.max_deviation() < 1e-9 * t.circumradius


class TestExteriorCatalogFeet:
    def test_inverse_s_point_feet_reproduce_host_shape(self):
        # the circumcircle inverse of a symmedian arc point always lands on
        # the opposite side line, so the raw feet are used
        rng = rng_for(0, "extcat", 0)
        from miquel.centers import inverse_in_circumcircle

        for _ in range(20):
            t = random_catalog_triangle(rng)
            for v in "ABC":
                q = inverse_in_circumcircle(t, s_point(t, v))
                assert t.min_side_line_distance(q) < 1e-9 * t.circumradius
                shape = Triangle(*pedal_feet(t, q))
                match = classify_similarity(t, shape, Tolerance(angle_eps=1e-7))
                assert match is not None
