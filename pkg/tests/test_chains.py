"""Nested triad chains: mod-3 similarity, role recurrences, degeneracy."""

import math

import pytest

from miquel.centers import brocard_point, circumcenter, incenter, orthocenter, s_point
from miquel.chains import (
    check_mod3_similarity,
    detect_role_cycle,
    follows_role_cycle,
    iterate_chain,
)
from miquel.errors import DegenerateStepError
from miquel.kernel import Point, Tolerance, Triangle
from miquel.sampling import (
    random_circumcircle_point,
    random_interior_point,
    random_triangle,
    rng_for,
)
from miquel.triads import classify_similarity

SQ3 = math.sqrt(3.0)
TSCA = Triangle(Point(0, 0), Point(4, 0), Point(1, 3))
EQUI = Triangle(Point(0, 1), Point(-SQ3 / 2, -0.5), Point(SQ3 / 2, -0.5))
LOOSE = Tolerance(angle_eps=1e-6, length_eps_rel=1e-9)


class TestIterateChain:
    def test_equilateral_medial_chain(self):
        rec = iterate_chain(EQUI, Point(0, 0), 3)
        for step in rec.steps:
            assert abs(step.triad.u - 0.5) < 1e-12
        for i in range(3):
            match = classify_similarity(rec.triangles[i], rec.triangles[i + 1], LOOSE)
            assert match is not None
            assert abs(match.ratio - 0.5) < 1e-12

    def test_scalene_mod3_seed_similarity(self):
        rec = iterate_chain(TSCA, circumcenter(TSCA), 3)
        match = classify_similarity(rec.triangles[0], rec.triangles[3], LOOSE)
        assert match is not None

    def test_circumcircle_point_collapses(self):
        rng = rng_for(0, "chains", 0)
        p = random_circumcircle_point(rng, TSCA)
        with pytest.raises(DegenerateStepError):
            iterate_chain(TSCA, p, 2)

    def test_miquel_point_fixed_along_chain(self):
        p = Point(1.4, 0.9)
        rec = iterate_chain(TSCA, p, 5)
        for step in rec.steps:
            assert step.result.point.dist(p) < 1e-8 * step.triangle.circumradius

    def test_bad_schedule_length_rejected(self):
        with pytest.raises(ValueError):
            iterate_chain(TSCA, Point(1.4, 0.9), 3, thetas=[0.1, 0.2])

    def test_step_cap(self):
        with pytest.raises(ValueError):
            iterate_chain(TSCA, Point(1.4, 0.9), 13)
        rec = iterate_chain(TSCA, Point(1.4, 0.9), 13, max_steps=13)
        assert len(rec.steps) == 13


class TestMod3Similarity:
    def test_classes_partition(self):
        rec = iterate_chain(TSCA, circumcenter(TSCA), 6)
        rep = check_mod3_similarity(rec, LOOSE)
        assert rep.ok
        assert rep.worst_residual < 1e-6

    def test_brocard_chain_everything_similar(self):
        p = brocard_point(TSCA, "first")
        rec = iterate_chain(TSCA, p, 6)
        tris = rec.triangles
        for i in range(len(tris) - 1):
            assert classify_similarity(tris[i], tris[i + 1], LOOSE) is not None

    def test_circumcenter_chain_merges_first_two_classes(self):
        # the pedal triangle of the circumcenter is the medial triangle,
        # so classes k=0 and k=1 coincide
        rec = iterate_chain(TSCA, circumcenter(TSCA), 6)
        rep = check_mod3_similarity(rec, LOOSE)
        cross = {(i, j) for i, j, _ in rep.cross_class_similar}
        assert (0, 1) in cross

    def test_generic_point_classes_distinct(self):
        rec = iterate_chain(TSCA, Point(1.31, 0.87), 9)
        rep = check_mod3_similarity(rec, LOOSE)
        assert rep.ok
        assert not rep.cross_class_similar

    def test_theta_schedule_invariance(self):
        rng = rng_for(0, "chains", 1)
        for _ in range(10):
            t = random_triangle(rng)
            p = random_interior_point(rng, t)
            thetas = [rng.uniform(-math.pi / 3, math.pi / 3) for _ in range(6)]
            rep = check_mod3_similarity(iterate_chain(t, p, 6, thetas=thetas), LOOSE)
            assert rep.ok


class TestRoleCycles:
    def test_circumcenter_cycle(self):
        rec = iterate_chain(TSCA, circumcenter(TSCA), 4)
        names = [r.role for r in detect_role_cycle(rec).roles]
        assert names == ["circumcenter", "orthocenter", "incenter", "circumcenter", "orthocenter"]
        assert follows_role_cycle(detect_role_cycle(rec))

    def test_symmedian_point_cycle(self):
        rec = iterate_chain(TSCA, s_point(TSCA, "A"), 4)
        roles = detect_role_cycle(rec).roles
        assert [r.role for r in roles] == ["s_role", "m_role", "q_role", "s_role", "m_role"]
        assert all(r.vertex == "A" for r in roles)

    def test_brocard_fixed_role(self):
        rec = iterate_chain(TSCA, brocard_point(TSCA, "first"), 4)
        assert all(r.role == "first_brocard" for r in detect_role_cycle(rec).roles)
        rec2 = iterate_chain(TSCA, brocard_point(TSCA, "second"), 4)
        assert all(r.role == "second_brocard" for r in detect_role_cycle(rec2).roles)

    def test_orthocenter_seed_includes_excenter_leg(self):
        tob = Triangle(Point(0, 0), Point(4, 0), Point(1.6, 0.9))
        rec = iterate_chain(tob, orthocenter(tob), 5)
        names = [r.role for r in detect_role_cycle(rec).roles]
        assert names[0] == "orthocenter"
        assert names[1] in ("incenter", "excenter")
        assert names[2] == "circumcenter"
        assert follows_role_cycle(detect_role_cycle(rec))

    def test_incenter_seed(self):
        rec = iterate_chain(TSCA, incenter(TSCA), 4)
        names = [r.role for r in detect_role_cycle(rec).roles]
        assert names == ["incenter", "circumcenter", "orthocenter", "incenter", "circumcenter"]

    def test_role_positions_track_detected_centers(self):
        rng = rng_for(0, "chains", 2)
        for _ in range(10):
            t = random_triangle(rng)
            o = circumcenter(t)
            rec = iterate_chain(t, o, 6)
            from miquel.centers import classic_center, CenterKind

            expect = {"circumcenter", "orthocenter", "incenter", "excenter"}
            for step in rec.steps:
                assert step.role.role in expect
                kind = CenterKind(step.role.role, step.role.vertex)
                center = classic_center(step.triangle, kind)
                assert center.dist(o) < 1e-6 * step.triangle.circumradius
