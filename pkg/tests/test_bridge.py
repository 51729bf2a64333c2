import random

import pytest

from tangency import bridge
from tangency.bridge import (
    hline_to_sphere,
    line_pluecker_of_sphere,
    phi,
    phi_inverse,
    sphere_line_via_pluecker,
    sphere_to_hline,
)
from tangency.census import check_four_way_contact
from tangency.errors import NotInImage
from tangency.field import PrimeField, RationalField, ext_is_zero
from tangency.lines import coplanar, hline_to_pluecker, klein_form, on_klein_quadric
from tangency.spheres import LiePoint, OrientedSphere, contact, lie_form, sphere_to_lie

Q = RationalField()
F7 = PrimeField(7)


def S(field, *q):
    return OrientedSphere.of(field, *q)


class TestPhi:
    def test_worked_example(self):
        p = phi(LiePoint.of(Q, (1, -1, -2, -3, -11, 5)))
        assert p.coords == ((1, 0), (2, 0), (1, -2), (11, 0), (-8, 0), (1, 2))

    def test_single_coordinate(self):
        p = phi(LiePoint.of(Q, (0, 0, 0, 0, 1, 0)))
        assert p.coords == ((0, 0), (0, 0), (0, 0), (-1, 0), (0, 0), (0, 0))

    def test_quadric_to_quadric(self):
        rng = random.Random(0)
        for _ in range(300):
            s = S(F7, *(rng.randrange(7) for _ in range(4)))
            assert on_klein_quadric(phi(sphere_to_lie(s)))

    def test_inverse_worked_example(self):
        from tangency.lines import PlueckerPoint

        p = PlueckerPoint.of(Q, ((1, 0), (2, 0), (1, -2), (11, 0), (-8, 0), (1, 2)))
        assert phi_inverse(p).coords == (1, -1, -2, -3, -11, 5)

    def test_inverse_gate(self):
        from tangency.lines import PlueckerPoint

        p = PlueckerPoint.of(Q, ((1, 0), (0, 1), (0, 0), (0, 0), (0, 0), (0, 0)))
        with pytest.raises(NotInImage):
            phi_inverse(p)

    def test_inverse_identity_random(self):
        rng = random.Random(1)
        for _ in range(10000):
            coords = tuple(rng.randrange(7) for _ in range(6))
            if all(c == 0 for c in coords):
                continue
            q = LiePoint(F7, coords)
            assert phi_inverse(phi(q)).coords == coords


class TestBilinearIdentity:
    def test_representative_level(self):
        rng = random.Random(2)
        for _ in range(2000):
            q = LiePoint(F7, tuple(rng.randrange(7) for _ in range(6)))
            qp = LiePoint(F7, tuple(rng.randrange(7) for _ in range(6)))
            kf = klein_form(phi(q), phi(qp))
            assert kf == (lie_form(q, qp), 0)

    def test_rational(self):
        rng = random.Random(3)
        for _ in range(500):
            q = LiePoint(Q, tuple(rng.randrange(-50, 50) for _ in range(6)))
            qp = LiePoint(Q, tuple(rng.randrange(-50, 50) for _ in range(6)))
            assert klein_form(phi(q), phi(qp)) == (lie_form(q, qp), 0)


class TestSphereLine:
    def test_unit_sphere(self):
        assert sphere_to_hline(S(Q, 0, 0, 0, 1)).params() == (-1, 1, 0, 0)

    def test_worked_example(self):
        assert sphere_to_hline(S(Q, 1, 2, 3, 5)).params() == (-8, 2, -1, -2)

    def test_origin(self):
        assert sphere_to_hline(S(Q, 0, 0, 0, 0)).params() == (0, 0, 0, 0)

    def test_inverse_examples(self):
        from tangency.lines import HLine

        assert hline_to_sphere(HLine.of(Q, -1, 1, 0, 0)).quad() == (0, 0, 0, 1)
        assert hline_to_sphere(HLine.of(Q, 0, 0, 0, 0)).quad() == (0, 0, 0, 0)

    def test_roundtrip_random(self):
        rng = random.Random(4)
        for _ in range(10000):
            s = S(F7, *(rng.randrange(7) for _ in range(4)))
            assert hline_to_sphere(sphere_to_hline(s)) == s

    def test_two_routes_agree(self):
        rng = random.Random(5)
        for _ in range(1000):
            s = S(F7, *(rng.randrange(7) for _ in range(4)))
            assert sphere_to_hline(s) == sphere_line_via_pluecker(s)
        for _ in range(200):
            s = S(Q, *(rng.randrange(-30, 30) for _ in range(4)))
            assert sphere_to_hline(s) == sphere_line_via_pluecker(s)


class TestContactCoplanarity:
    def test_four_way_agreement(self):
        rng = random.Random(6)
        for _ in range(1000):
            s = S(F7, *(rng.randrange(7) for _ in range(4)))
            t = S(F7, *(rng.randrange(7) for _ in range(4)))
            by_contact = contact(s, t)
            by_lie = F7.is_zero(lie_form(sphere_to_lie(s), sphere_to_lie(t)))
            kf = klein_form(line_pluecker_of_sphere(s), line_pluecker_of_sphere(t))
            by_klein = ext_is_zero(F7, kf)
            by_coplanar = coplanar(sphere_to_hline(s), sphere_to_hline(t))
            assert by_contact == by_lie == by_klein == by_coplanar

    def test_mutation_detected(self, monkeypatch):
        # a sign flip in the closed-form line assignment must break
        # the four-way agreement, proving the check has teeth
        original = bridge.sphere_to_hline

        def flipped(s):
            line = original(s)
            from tangency.lines import HLine

            return HLine(line.field, line.field.neg(line.a), line.b, line.c, line.d)

        monkeypatch.setattr("tangency.census.sphere_to_hline", flipped)
        result = check_four_way_contact(F7, 200, seed=0)
        assert result.failures > 0
