"""Heisenberg lines over E, Pluecker coordinates and the Klein form.

A Heisenberg line with parameters (a, b, c, d) in F^4 is the affine line

    (0, c + di, a) + E * (1, b, -c + di)

in E^3.  Every point of such a line lies on the variety

    H* = {(x, y, z) in E^3 : Im(z) = Im(conj(x) * y)}.

This is the convention forced by the Pluecker coordinates of sphere
images: it is the unique choice under which the Klein form of two line
images equals the Lie form of the corresponding sphere pair, and it pins
the coplanarity normal form to (dc)^2 + (dd)^2 + da*db = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Tuple

from .errors import (
    FieldMismatch,
    InvalidInput,
    NotHeisenberg,
    NotInHeisenberg,
    ParallelToXY,
)
from .field import (
    Element,
    ExtElement,
    Field,
    ext,
    ext_add,
    ext_conj,
    ext_div,
    ext_is_zero,
    ext_mul,
    ext_neg,
    ext_sub,
)

EPoint = Tuple[ExtElement, ExtElement, ExtElement]


def _same_field(a, b) -> None:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field!r} vs {b.field!r}")


@dataclass(frozen=True, slots=True)
class HLine:
    field: Field
    a: Element
    b: Element
    c: Element
    d: Element

    @classmethod
    def of(cls, field: Field, a, b, c, d) -> "HLine":
        return cls(field, field.reduce(a), field.reduce(b), field.reduce(c), field.reduce(d))

    def params(self):
        return (self.a, self.b, self.c, self.d)

    def base_point(self) -> EPoint:
        F = self.field
        zero = F.reduce(0)
        return ((zero, zero), (self.c, self.d), (self.a, zero))

    def direction(self) -> EPoint:
        F = self.field
        zero = F.reduce(0)
        return ((F.reduce(1), zero), (self.b, zero), (F.neg(self.c), self.d))

    def point_at(self, tau: ExtElement) -> EPoint:
        F = self.field
        base = self.base_point()
        dirn = self.direction()
        return tuple(ext_add(F, base[k], ext_mul(F, tau, dirn[k])) for k in range(3))


class LineRelation(Enum):
    PARALLEL = "parallel"
    SKEW = "skew"
    IDENTICAL = "identical"


class PlueckerPoint:
    """Projective 6-tuple of E-elements [p01:p02:p03:p23:p31:p12].

    Stores the constructed representative; equality and hashing use the
    projective canonical form (first nonzero coordinate scaled to 1).
    """

    __slots__ = ("field", "coords")

    def __init__(self, field: Field, coords: Tuple[ExtElement, ...]):
        self.field = field
        self.coords = coords

    @classmethod
    def of(cls, field: Field, coords) -> "PlueckerPoint":
        cs = tuple(ext(field, w[0], w[1]) for w in coords)
        if len(cs) != 6:
            raise InvalidInput("PlueckerPoint needs 6 coordinates")
        if all(ext_is_zero(field, w) for w in cs):
            raise InvalidInput("PlueckerPoint coordinates cannot all vanish")
        return cls(field, cs)

    def canonical(self) -> Tuple[ExtElement, ...]:
        F = self.field
        for w in self.coords:
            if not ext_is_zero(F, w):
                return tuple(ext_div(F, v, w) for v in self.coords)
        raise InvalidInput("zero PlueckerPoint")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PlueckerPoint)
            and self.field == other.field
            and self.canonical() == other.canonical()
        )

    def __hash__(self) -> int:
        return hash((self.field, self.canonical()))

    def __repr__(self) -> str:
        def fmt(w):
            return f"{self.field.format(w[0])}+{self.field.format(w[1])}i"

        return "[" + ":".join(fmt(w) for w in self.coords) + "]"


@dataclass(frozen=True, slots=True)
class Plane:
    """Locus alpha*x + beta*y + gamma*z = delta in E^3."""

    field: Field
    alpha: ExtElement
    beta: ExtElement
    gamma: ExtElement
    delta: ExtElement

    def __post_init__(self):
        F = self.field
        if ext_is_zero(F, self.alpha) and ext_is_zero(F, self.beta) and ext_is_zero(F, self.gamma):
            raise InvalidInput("plane normal cannot vanish")

    def contains(self, w: EPoint) -> bool:
        F = self.field
        lhs = ext_add(
            F,
            ext_add(F, ext_mul(F, self.alpha, w[0]), ext_mul(F, self.beta, w[1])),
            ext_mul(F, self.gamma, w[2]),
        )
        return ext_is_zero(F, ext_sub(F, lhs, self.delta))


def heisenberg_membership(field: Field, w: EPoint) -> bool:
    """True iff Im(z) = Im(conj(x) * y)."""
    (xr, xi), (yr, yi), (_zr, zi) = w
    return field.is_zero(zi - (xr * yi - xi * yr))


def hline_to_pluecker(line: HLine) -> PlueckerPoint:
    """[1 : u : v : sv - tu : t : -s] with s = c+di, t = a, u = b, v = -c+di."""
    F = line.field
    a, b, c, d = line.a, line.b, line.c, line.d
    zero = F.reduce(0)
    one = F.reduce(1)
    # s*v = (c+di)(-c+di) = -(c^2 + d^2) is purely real, as is t*u = a*b
    return PlueckerPoint(
        F,
        (
            (one, zero),
            (b, zero),
            (F.neg(c), d),
            (F.reduce(-(c * c + d * d) - a * b), zero),
            (a, zero),
            (F.neg(c), F.neg(d)),
        ),
    )


def pluecker_to_hline(p: PlueckerPoint) -> HLine:
    """Inverse of hline_to_pluecker on its image."""
    F = p.field
    if ext_is_zero(F, p.coords[0]):
        raise ParallelToXY("p01 = 0: line parallel to the xy plane")
    p01 = p.coords[0]
    u, v, p23, t, p12 = (ext_div(F, p.coords[k], p01) for k in (1, 2, 3, 4, 5))
    s = ext_neg(F, p12)
    if not F.is_zero(u[1]) or not F.is_zero(t[1]):
        raise NotHeisenberg("direction slope and base height must lie in F")
    if v != ext_neg(F, ext_conj(F, s)):
        raise NotHeisenberg("v != -conj(s)")
    if p23 != ext_sub(F, ext_mul(F, s, v), ext_mul(F, t, u)):
        raise NotHeisenberg("Pluecker relation violated")
    return HLine(F, t[0], u[0], s[0], s[1])


def klein_form(p: PlueckerPoint, pp: PlueckerPoint) -> ExtElement:
    """K(p, p') on the stored representatives; symmetric and bilinear."""
    _same_field(p, pp)
    F = p.field
    (a01, a02, a03, a23, a31, a12) = p.coords
    (b01, b02, b03, b23, b31, b12) = pp.coords
    re = (
        a01[0] * b23[0] - a01[1] * b23[1] + a23[0] * b01[0] - a23[1] * b01[1]
        + a02[0] * b31[0] - a02[1] * b31[1] + a31[0] * b02[0] - a31[1] * b02[1]
        + a03[0] * b12[0] - a03[1] * b12[1] + a12[0] * b03[0] - a12[1] * b03[1]
    )
    im = (
        a01[0] * b23[1] + a01[1] * b23[0] + a23[0] * b01[1] + a23[1] * b01[0]
        + a02[0] * b31[1] + a02[1] * b31[0] + a31[0] * b02[1] + a31[1] * b02[0]
        + a03[0] * b12[1] + a03[1] * b12[0] + a12[0] * b03[1] + a12[1] * b03[0]
    )
    return (F.reduce(re), F.reduce(im))


def on_klein_quadric(p: PlueckerPoint) -> bool:
    F = p.field
    kf = klein_form(p, p)
    return ext_is_zero(F, kf)


def coplanar(l1: HLine, l2: HLine) -> bool:
    """True iff (dc)^2 + (dd)^2 + da*db = 0; equals K(images) = 0."""
    _same_field(l1, l2)
    dc = l1.c - l2.c
    dd = l1.d - l2.d
    return l1.field.is_zero(dc * dc + dd * dd + (l1.a - l2.a) * (l1.b - l2.b))


def intersect(l1: HLine, l2: HLine):
    """Classify the pair: a common point of E^3, PARALLEL, IDENTICAL or SKEW."""
    _same_field(l1, l2)
    F = l1.field
    if l1.params() == l2.params():
        return LineRelation.IDENTICAL
    if (l1.b, l1.c, l1.d) == (l2.b, l2.c, l2.d):
        return LineRelation.PARALLEL
    if not coplanar(l1, l2):
        return LineRelation.SKEW
    # coplanar and not parallel forces b1 != b2 (since -1 is a non-square,
    # dc^2 + dd^2 = 0 implies dc = dd = 0)
    db = F.reduce(l1.b - l2.b)
    tau = (F.div(l2.c - l1.c, db), F.div(l2.d - l1.d, db))
    return l1.point_at(tau)


@dataclass(frozen=True, slots=True)
class LineFamily:
    """The one-parameter family V_w of Heisenberg lines through a point w.

    Parametrized by the slope b; the (a, b, c, d) quadruples form a line
    in F^4.
    """

    field: Field
    w: EPoint

    def line(self, b) -> HLine:
        F = self.field
        b = F.reduce(b)
        (xr, xi), (yr, yi), (zr, _zi) = self.w
        c = F.reduce(yr - b * xr)
        d = F.reduce(yi - b * xi)
        a = F.reduce(zr + c * xr + d * xi)
        return HLine(F, a, b, c, d)

    def lines(self) -> Iterator[HLine]:
        for b in self.field.elements():
            yield self.line(b)


def lines_through_point(field: Field, w: EPoint) -> LineFamily:
    if not heisenberg_membership(field, w):
        raise NotInHeisenberg(f"{w} is not on the Heisenberg variety")
    w = tuple(ext(field, v[0], v[1]) for v in w)
    return LineFamily(field, w)


def direction_plane(field: Field, b, c, d) -> Plane:
    """Plane {y - bx = c + di} containing every HLine with slope data (b, c, d)."""
    zero = field.reduce(0)
    return Plane(
        field,
        (field.neg(field.reduce(b)), zero),
        (field.reduce(1), zero),
        (zero, zero),
        (field.reduce(c), field.reduce(d)),
    )


def tangent_plane(field: Field, w: EPoint) -> Plane:
    """Plane containing every Heisenberg line through w.

    In coordinates: conj(y0)*x - conj(x0)*y + z = z0 + conj(y0)*x0 - conj(x0)*y0.
    """
    if not heisenberg_membership(field, w):
        raise NotInHeisenberg(f"{w} is not on the Heisenberg variety")
    F = field
    x0, y0, z0 = (ext(F, v[0], v[1]) for v in w)
    alpha = ext_conj(F, y0)
    beta = ext_neg(F, ext_conj(F, x0))
    gamma = ext(F, 1)
    delta = ext_add(F, z0, ext_add(F, ext_mul(F, alpha, x0), ext_mul(F, beta, y0)))
    return Plane(F, alpha, beta, gamma, delta)
