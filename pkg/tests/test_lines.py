import random

import pytest

from tangency.errors import (
    NotHeisenberg,
    NotInHeisenberg,
    ParallelToXY,
)
from tangency.field import PrimeField, RationalField, ext, ext_is_zero
from tangency.lines import (
    HLine,
    LineRelation,
    PlueckerPoint,
    coplanar,
    direction_plane,
    heisenberg_membership,
    hline_to_pluecker,
    intersect,
    klein_form,
    lines_through_point,
    on_klein_quadric,
    pluecker_to_hline,
    tangent_plane,
)

Q = RationalField()
F7 = PrimeField(7)


def L(field, *params):
    return HLine.of(field, *params)


def P(field, *coords):
    return PlueckerPoint.of(field, coords)


class TestHeisenbergMembership:
    def test_worked_point(self):
        # x = 1, y = 2+3i: Im(conj(x) y) = 3 = Im(z)
        assert heisenberg_membership(Q, ((1, 0), (2, 3), (7, 3)))

    def test_non_member(self):
        assert not heisenberg_membership(Q, ((0, 0), (0, 0), (0, 1)))

    def test_every_line_point(self):
        rng = random.Random(0)
        for _ in range(200):
            line = L(F7, *(rng.randrange(7) for _ in range(4)))
            tau = (rng.randrange(7), rng.randrange(7))
            assert heisenberg_membership(F7, line.point_at(tau))


class TestPluecker:
    def test_line_to_pluecker(self):
        # (a,b,c,d) = (-1,1,0,0): s = 0, t = -1, u = 1, v = 0, sv - tu = 1
        p = hline_to_pluecker(L(Q, -1, 1, 0, 0))
        assert p.coords == ((1, 0), (1, 0), (0, 0), (1, 0), (-1, 0), (0, 0))

    def test_x_axis(self):
        p = hline_to_pluecker(L(Q, 0, 0, 0, 0))
        assert p.coords == ((1, 0), (0, 0), (0, 0), (0, 0), (0, 0), (0, 0))

    def test_always_on_klein_quadric(self):
        rng = random.Random(1)
        for _ in range(300):
            line = L(F7, *(rng.randrange(7) for _ in range(4)))
            assert on_klein_quadric(hline_to_pluecker(line))

    def test_roundtrip(self):
        rng = random.Random(2)
        for _ in range(300):
            line = L(F7, *(rng.randrange(7) for _ in range(4)))
            assert pluecker_to_hline(hline_to_pluecker(line)) == line

    def test_parallel_to_xy_gate(self):
        with pytest.raises(ParallelToXY):
            pluecker_to_hline(P(Q, (0, 0), (1, 0), (0, 0), (0, 0), (0, 0), (0, 0)))

    def test_not_heisenberg_gate(self):
        with pytest.raises(NotHeisenberg):
            pluecker_to_hline(P(Q, (1, 0), (0, 1), (0, 0), (0, 0), (0, 0), (0, 0)))

    def test_projective_equality(self):
        a = P(F7, (1, 0), (2, 1), (0, 0), (3, 0), (0, 0), (0, 0))
        b = P(F7, (2, 0), (4, 2), (0, 0), (6, 0), (0, 0), (0, 0))
        assert a == b
        assert hash(a) == hash(b)


class TestKleinForm:
    def test_contact_spheres_images(self):
        from tangency.bridge import sphere_to_hline
        from tangency.spheres import OrientedSphere

        s = sphere_to_hline(OrientedSphere.of(Q, 0, 0, 0, 1))
        t = sphere_to_hline(OrientedSphere.of(Q, 0, 0, 2, -1))
        assert ext_is_zero(Q, klein_form(hline_to_pluecker(s), hline_to_pluecker(t)))

    def test_non_contact_spheres_images(self):
        from tangency.bridge import sphere_to_hline
        from tangency.spheres import OrientedSphere

        s = sphere_to_hline(OrientedSphere.of(Q, 0, 0, 0, 1))
        t = sphere_to_hline(OrientedSphere.of(Q, 0, 0, 0, 2))
        assert not ext_is_zero(Q, klein_form(hline_to_pluecker(s), hline_to_pluecker(t)))

    def test_symmetric(self):
        rng = random.Random(3)
        for _ in range(100):
            a = PlueckerPoint(F7, tuple((rng.randrange(7), rng.randrange(7)) for _ in range(6)))
            b = PlueckerPoint(F7, tuple((rng.randrange(7), rng.randrange(7)) for _ in range(6)))
            assert klein_form(a, b) == klein_form(b, a)


class TestCoplanarity:
    def test_tangent_sphere_lines(self):
        assert coplanar(L(Q, -1, 1, 0, 0), L(Q, -1, -3, 0, 0))

    def test_non_coplanar(self):
        assert not coplanar(L(Q, 0, 1, 0, 0), L(Q, 1, 2, 1, 0))

    def test_self(self):
        line = L(Q, 3, 1, 4, 1)
        assert coplanar(line, line)

    def test_matches_klein_form(self):
        rng = random.Random(4)
        for _ in range(300):
            l1 = L(F7, *(rng.randrange(7) for _ in range(4)))
            l2 = L(F7, *(rng.randrange(7) for _ in range(4)))
            kf = klein_form(hline_to_pluecker(l1), hline_to_pluecker(l2))
            assert coplanar(l1, l2) == ext_is_zero(F7, kf)


class TestIntersect:
    def test_meeting_pair(self):
        w = intersect(L(Q, -1, 1, 0, 0), L(Q, -1, -3, 0, 0))
        assert w == ((0, 0), (0, 0), (-1, 0))

    def test_parallel(self):
        assert intersect(L(Q, 0, 0, 0, 0), L(Q, 1, 0, 0, 0)) is LineRelation.PARALLEL

    def test_skew(self):
        assert intersect(L(Q, 0, 1, 0, 0), L(Q, 1, 2, 1, 0)) is LineRelation.SKEW

    def test_identical(self):
        line = L(Q, 1, 2, 3, 4)
        assert intersect(line, line) is LineRelation.IDENTICAL

    def test_intersection_on_both_lines(self):
        rng = random.Random(5)
        found = 0
        while found < 50:
            l1 = L(F7, *(rng.randrange(7) for _ in range(4)))
            l2 = L(F7, *(rng.randrange(7) for _ in range(4)))
            w = intersect(l1, l2)
            if isinstance(w, LineRelation):
                continue
            found += 1
            # w lies on both lines: solve tau from x-coordinate
            assert l1.point_at(w[0]) == w
            assert l2.point_at(w[0]) == w
            assert heisenberg_membership(F7, w)


class TestLinesThroughPoint:
    def test_origin_family(self):
        fam = lines_through_point(F7, ((0, 0), (0, 0), (0, 0)))
        assert {line.params() for line in fam.lines()} == {(0, b, 0, 0) for b in range(7)}

    def test_worked_point(self):
        fam = lines_through_point(Q, ((1, 0), (2, 3), (7, 3)))
        assert fam.line(0).params() == (9, 0, 2, 3)

    def test_membership_postcondition(self):
        w = ((1, 0), (2, 3), (7, 3))
        fam = lines_through_point(Q, w)
        for b in range(-3, 4):
            line = fam.line(b)
            # w = base + x0 * dir with x0 = 1
            assert line.point_at((1, 0)) == tuple(ext(Q, a, b) for a, b in w)

    def test_not_in_heisenberg(self):
        with pytest.raises(NotInHeisenberg):
            lines_through_point(Q, ((0, 0), (0, 0), (0, 1)))


class TestPlanes:
    def test_direction_plane_y_equals_zero(self):
        pl = direction_plane(Q, 0, 0, 0)
        assert pl.contains(((5, 2), (0, 0), (3, 1)))
        assert not pl.contains(((0, 0), (1, 0), (0, 0)))

    def test_direction_plane_contains_line(self):
        pl = direction_plane(Q, 1, 0, 0)
        line = L(Q, 5, 1, 0, 0)
        for tau in ((0, 0), (1, 0), (2, 5)):
            assert pl.contains(line.point_at(tau))

    def test_direction_plane_postcondition(self):
        rng = random.Random(6)
        for _ in range(100):
            a, b, c, d = (rng.randrange(7) for _ in range(4))
            pl = direction_plane(F7, b, c, d)
            line = L(F7, a, b, c, d)
            tau = (rng.randrange(7), rng.randrange(7))
            assert pl.contains(line.point_at(tau))

    def test_tangent_plane_origin(self):
        pl = tangent_plane(Q, ((0, 0), (0, 0), (0, 0)))
        # z = 0
        assert pl.contains(((4, 1), (2, 3), (0, 0)))
        assert not pl.contains(((0, 0), (0, 0), (1, 0)))

    def test_tangent_plane_contains_family(self):
        rng = random.Random(7)
        for _ in range(50):
            line = L(F7, *(rng.randrange(7) for _ in range(4)))
            w = line.point_at((rng.randrange(7), rng.randrange(7)))
            pl = tangent_plane(F7, w)
            fam = lines_through_point(F7, w)
            for member in fam.lines():
                tau = (rng.randrange(7), rng.randrange(7))
                assert pl.contains(member.point_at(tau))

    def test_tangent_plane_injective(self):
        rng = random.Random(8)
        seen = {}
        for _ in range(100):
            line = L(F7, *(rng.randrange(7) for _ in range(4)))
            w = line.point_at((rng.randrange(7), rng.randrange(7)))
            pl = tangent_plane(F7, w)
            key = (pl.alpha, pl.beta, pl.gamma, pl.delta)
            if key in seen:
                assert seen[key] == w
            seen[key] = w
