"""The linear map between the Lie and Klein quadrics and the end-to-end
sphere <-> Heisenberg-line correspondence.

The defining identity, checked exactly on random representatives by the
verification suite, is

    klein_form(phi(q), phi(q')) = lie_form(q, q')

for all 6-tuples q, q' over F, not only on the quadrics.  Consequently
contact of spheres is coplanarity of their image lines.
"""

from __future__ import annotations

from .errors import NotInImage
from .field import Field
from .lines import HLine, PlueckerPoint, hline_to_pluecker, pluecker_to_hline
from .spheres import LiePoint, OrientedSphere, sphere_to_lie


def phi(q: LiePoint) -> PlueckerPoint:
    """[a:b:c:d:e:f] -> [a : d+f : -b+ic : -e : d-f : -b-ic]."""
    F = q.field
    a, b, c, d, e, f = q.coords
    nb = F.neg(b)
    return PlueckerPoint(
        F,
        (
            (a, F.reduce(0)),
            (F.reduce(d + f), F.reduce(0)),
            (nb, c),
            (F.neg(e), F.reduce(0)),
            (F.reduce(d - f), F.reduce(0)),
            (nb, F.neg(c)),
        ),
    )


def phi_inverse(p: PlueckerPoint) -> LiePoint:
    """Algebraic inverse of phi; requires p to have the image shape."""
    F = p.field
    p01, p02, p03, p23, p31, p12 = p.coords
    for w in (p01, p02, p23, p31):
        if not F.is_zero(w[1]):
            raise NotInImage("p01, p02, p23, p31 must be purely real")
    if not F.is_zero(p03[1] + p12[1]):
        raise NotInImage("p03 + p12 must be purely real")
    if not F.is_zero(p03[0] - p12[0]):
        raise NotInImage("p03 - p12 must be purely imaginary")
    a = p01[0]
    e = F.neg(p23[0])
    d = F.half(F.reduce(p02[0] + p31[0]))
    f = F.half(F.reduce(p02[0] - p31[0]))
    b = F.neg(F.half(F.reduce(p03[0] + p12[0])))
    c = F.half(F.reduce(p03[1] - p12[1]))
    return LiePoint(F, (a, b, c, d, e, f))


def sphere_to_hline(s: OrientedSphere) -> HLine:
    """Closed form (a, b, c, d) = (-z-r, -z+r, -x, -y).

    Must agree with pluecker_to_hline(phi(sphere_to_lie(s))); the test
    suite keeps the composite route as an independent oracle.
    """
    F = s.field
    return HLine(
        F,
        F.reduce(-s.z - s.r),
        F.reduce(-s.z + s.r),
        F.neg(s.x),
        F.neg(s.y),
    )


def hline_to_sphere(line: HLine) -> OrientedSphere:
    """Inverse assignment (x, y, z, r) = (-c, -d, -(a+b)/2, (b-a)/2)."""
    F = line.field
    return OrientedSphere(
        F,
        F.neg(line.c),
        F.neg(line.d),
        F.neg(F.half(F.reduce(line.a + line.b))),
        F.half(F.reduce(line.b - line.a)),
    )


def sphere_line_via_pluecker(s: OrientedSphere) -> HLine:
    """Composite route phi then Pluecker decoding; oracle for sphere_to_hline."""
    return pluecker_to_hline(phi(sphere_to_lie(s)))


def line_pluecker_of_sphere(s: OrientedSphere) -> PlueckerPoint:
    return hline_to_pluecker(sphere_to_hline(s))
