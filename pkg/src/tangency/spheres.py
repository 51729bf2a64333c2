"""Oriented spheres, the Lie quadric and the contact predicate.

An oriented sphere is a quadruple (x, y, z, r) in F^4; r = 0 encodes a
point.  Two spheres are in contact when

    (dx)^2 + (dy)^2 + (dz)^2 = (dr)^2

which is exactly the vanishing of the Lie form on their embedded Lie
points.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .errors import AtInfinity, FieldMismatch, InvalidInput
from .field import Element, Field

Quad = Tuple[Element, Element, Element, Element]


def _same_field(a, b) -> None:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field!r} vs {b.field!r}")


@dataclass(frozen=True, slots=True)
class OrientedSphere:
    field: Field
    x: Element
    y: Element
    z: Element
    r: Element

    @classmethod
    def of(cls, field: Field, x, y, z, r) -> "OrientedSphere":
        return cls(field, field.reduce(x), field.reduce(y), field.reduce(z), field.reduce(r))

    def quad(self) -> Quad:
        return (self.x, self.y, self.z, self.r)

    def center(self) -> Tuple[Element, Element, Element]:
        return (self.x, self.y, self.z)


class LiePoint:
    """Projective 6-tuple [a:b:c:d:e:f] over F carrying the Lie form.

    The constructed representative is stored as-is (the bilinear
    identities of the correspondence are statements about
    representatives); equality and hashing use the projective canonical
    form, first nonzero coordinate scaled to 1.
    """

    __slots__ = ("field", "coords")

    def __init__(self, field: Field, coords: Tuple[Element, ...]):
        # coords must already be canonical field elements; use .of() otherwise
        self.field = field
        self.coords = coords

    @classmethod
    def of(cls, field: Field, coords) -> "LiePoint":
        cs = tuple(field.reduce(c) for c in coords)
        if len(cs) != 6:
            raise InvalidInput("LiePoint needs 6 coordinates")
        if all(field.is_zero(c) for c in cs):
            raise InvalidInput("LiePoint coordinates cannot all vanish")
        return cls(field, cs)

    def canonical(self) -> Tuple[Element, ...]:
        F = self.field
        for c in self.coords:
            if not F.is_zero(c):
                inv = F.inv(c)
                return tuple(F.mul(v, inv) for v in self.coords)
        raise InvalidInput("zero LiePoint")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LiePoint)
            and self.field == other.field
            and self.canonical() == other.canonical()
        )

    def __hash__(self) -> int:
        return hash((self.field, self.canonical()))

    def __repr__(self) -> str:
        return "[" + ":".join(self.field.format(c) for c in self.coords) + "]"


def contact(s: OrientedSphere, t: OrientedSphere) -> bool:
    """Exact contact predicate; contact(S, S) is True by the formula."""
    _same_field(s, t)
    dx = s.x - t.x
    dy = s.y - t.y
    dz = s.z - t.z
    dr = s.r - t.r
    return s.field.is_zero(dx * dx + dy * dy + dz * dz - dr * dr)


def sphere_to_lie(s: OrientedSphere) -> LiePoint:
    """Embed a sphere as [1 : -x : -y : -z : x^2+y^2+z^2-r^2 : r]."""
    F = s.field
    x, y, z, r = s.x, s.y, s.z, s.r
    return LiePoint(
        F,
        (
            F.reduce(1),
            F.neg(x),
            F.neg(y),
            F.neg(z),
            F.reduce(x * x + y * y + z * z - r * r),
            r,
        ),
    )


def lie_to_sphere(q: LiePoint) -> OrientedSphere:
    """Inverse of the embedding on quadric points with a != 0."""
    F = q.field
    a, b, c, d, _e, f = q.coords
    if F.is_zero(a):
        raise AtInfinity("Lie point with a = 0 is a plane or improper point")
    inv = F.inv(a)
    return OrientedSphere(
        F,
        F.neg(F.mul(b, inv)),
        F.neg(F.mul(c, inv)),
        F.neg(F.mul(d, inv)),
        F.mul(f, inv),
    )


def lie_form(q: LiePoint, qp: LiePoint) -> Element:
    """L(q, q') = 2bb' + 2cc' + 2dd' - ae' - ea' - 2ff' on stored reps."""
    _same_field(q, qp)
    a, b, c, d, e, f = q.coords
    ap, bp, cp, dp, ep, fp = qp.coords
    return q.field.reduce(2 * (b * bp + c * cp + d * dp - f * fp) - a * ep - e * ap)


def on_lie_quadric(q: LiePoint) -> bool:
    a, b, c, d, e, f = q.coords
    return q.field.is_zero(b * b + c * c + d * d - a * e - f * f)


def sphere_point_membership(point, q: LiePoint) -> bool:
    """True iff a(x^2+y^2+z^2) + 2bx + 2cy + 2dz + e = 0."""
    x, y, z = point
    a, b, c, d, e, _f = q.coords
    return q.field.is_zero(a * (x * x + y * y + z * z) + 2 * (b * x + c * y + d * z) + e)
