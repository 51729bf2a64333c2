"""Canonical pencils of contacting spheres and complimentary conic sections.

A pencil is a line in F^4 whose direction satisfies
dx^2 + dy^2 + dz^2 = dr^2; its canonical key (monic direction, base
reduced to zero at the pivot) makes grouping by representational
equality exact.  A conic section is the intersection of the Lie quadric
with the rank-3 linear system "in contact with three fixed pairwise
non-contacting spheres".
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import List, Sequence, Tuple

from .errors import (
    BadPencilDirection,
    DegenerateTriple,
    FieldMismatch,
    IdenticalSpheres,
    InvalidInput,
    NotInContact,
    PairInContact,
    UnsupportedForRationals,
)
from .field import Element, Field, PrimeField
from .spheres import LiePoint, OrientedSphere, contact, lie_to_sphere, sphere_to_lie

Quad = Tuple[Element, Element, Element, Element]


# ---------------------------------------------------------------------------
# Small exact linear algebra (fixed sizes: 3x6 systems, 3x3 forms).

def rref(field: Field, rows: Sequence[Sequence[Element]]):
    """Reduced row-echelon form; returns (nonzero rows, pivot columns)."""
    mat = [[field.reduce(v) for v in row] for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((k for k in range(r, nrows) if not field.is_zero(mat[k][col])), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = field.inv(mat[r][col])
        mat[r] = [field.mul(v, inv) for v in mat[r]]
        for k in range(nrows):
            if k != r and not field.is_zero(mat[k][col]):
                fac = mat[k][col]
                mat[k] = [field.reduce(mat[k][j] - fac * mat[r][j]) for j in range(ncols)]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return [tuple(row) for row in mat[:r]], pivots


def nullspace(field: Field, rref_rows, pivots, ncols: int):
    """Basis of the solution space of the homogeneous system in RREF."""
    zero = field.reduce(0)
    one = field.reduce(1)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for fj in free:
        v = [zero] * ncols
        v[fj] = one
        for row, pc in zip(rref_rows, pivots):
            v[pc] = field.neg(row[fj])
        basis.append(tuple(v))
    return basis


def matrix_rank(field: Field, rows) -> int:
    _, pivots = rref(field, rows)
    return len(pivots)


# ---------------------------------------------------------------------------
# Pencils.

@dataclass(frozen=True, slots=True)
class PencilKey:
    field: Field
    base: Quad
    dir: Quad

    def __post_init__(self):
        F = self.field
        pivot = next((k for k in range(4) if not F.is_zero(self.dir[k])), None)
        if pivot is None:
            raise BadPencilDirection("pencil direction cannot vanish")
        if self.dir[pivot] != F.reduce(1):
            raise InvalidInput("pencil direction must be monic at its pivot")
        if not F.is_zero(self.base[pivot]):
            raise InvalidInput("pencil base must vanish at the pivot")
        dx, dy, dz, dr = self.dir
        if not F.is_zero(dx * dx + dy * dy + dz * dz - dr * dr):
            raise BadPencilDirection("direction fails dx^2 + dy^2 + dz^2 = dr^2")

    def pivot(self) -> int:
        F = self.field
        return next(k for k in range(4) if not F.is_zero(self.dir[k]))

    def sphere_at(self, t) -> OrientedSphere:
        F = self.field
        t = F.reduce(t)
        q = tuple(F.reduce(b + t * d) for b, d in zip(self.base, self.dir))
        return OrientedSphere(F, *q)


def canonical_pencil_key(field: Field, point: Quad, direction: Quad) -> PencilKey:
    """Canonical key of the line {point + t*direction} in F^4."""
    F = field
    point = tuple(F.reduce(v) for v in point)
    direction = tuple(F.reduce(v) for v in direction)
    pivot = next((k for k in range(4) if not F.is_zero(direction[k])), None)
    if pivot is None:
        raise BadPencilDirection("pencil direction cannot vanish")
    inv = F.inv(direction[pivot])
    dirn = tuple(F.mul(v, inv) for v in direction)
    t = point[pivot]
    base = tuple(F.reduce(p - t * d) for p, d in zip(point, dirn))
    return PencilKey(F, base, dirn)


def pencil_from_pair(s: OrientedSphere, t: OrientedSphere) -> PencilKey:
    """Canonical key of the pencil determined by a contacting pair."""
    if s.field != t.field:
        raise FieldMismatch(f"{s.field!r} vs {t.field!r}")
    if s == t:
        raise IdenticalSpheres(f"{s} given twice")
    if not contact(s, t):
        raise NotInContact(f"{s} and {t} are not in contact")
    sq, tq = s.quad(), t.quad()
    direction = tuple(b - a for a, b in zip(sq, tq))
    return canonical_pencil_key(s.field, sq, direction)


def pencil_members(key: PencilKey, spheres: Sequence[OrientedSphere]) -> List[OrientedSphere]:
    """Spheres of the input whose quadruple lies on the key's line."""
    F = key.field
    pivot = key.pivot()
    out = []
    for s in spheres:
        if s.field != F:
            raise FieldMismatch(f"{s.field!r} vs {F!r}")
        q = s.quad()
        t = q[pivot]  # base[pivot] = 0 and dir[pivot] = 1
        if all(F.is_zero(q[k] - key.base[k] - t * key.dir[k]) for k in range(4)):
            out.append(s)
    return out


def enumerate_pencil(key: PencilKey) -> List[OrientedSphere]:
    """All p spheres of the pencil; prime fields only."""
    if not isinstance(key.field, PrimeField):
        raise UnsupportedForRationals("pencil enumeration needs a finite field")
    return [key.sphere_at(t) for t in key.field.elements()]


# ---------------------------------------------------------------------------
# Conic sections.

class ConicClass(Enum):
    IRREDUCIBLE = "irreducible"
    TWO_LINES = "two_lines"
    DOUBLE_LINE = "double_line"


class ConicSection:
    """Plane section of the Lie quadric cut out by three contact constraints.

    constraints: 3x6 RREF rows (the linear conditions L(q, q_i) = 0);
    basis: three 6-tuples spanning the solution space;
    form: symmetric 3x3 restriction of the Lie quadric to the basis.
    Equality and hashing use the RREF rows (basis independent).
    """

    __slots__ = ("field", "constraints", "basis", "form")

    def __init__(self, field, constraints, basis, form):
        self.field = field
        self.constraints = constraints
        self.basis = basis
        self.form = form

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ConicSection)
            and self.field == other.field
            and self.constraints == other.constraints
        )

    def __hash__(self) -> int:
        return hash((self.field, self.constraints))

    def __repr__(self) -> str:
        return f"ConicSection(constraints={self.constraints!r})"


def _lie_form_raw(field: Field, q, qp) -> Element:
    a, b, c, d, e, f = q
    ap, bp, cp, dp, ep, fp = qp
    return field.reduce(2 * (b * bp + c * cp + d * dp - f * fp) - a * ep - e * ap)


def _constraint_row(field: Field, q: LiePoint) -> Tuple[Element, ...]:
    # gradient of q' -> L(q', q) in the coordinates (a, b, c, d, e, f)
    a, b, c, d, e, f = q.coords
    return (
        field.neg(e),
        field.reduce(2 * b),
        field.reduce(2 * c),
        field.reduce(2 * d),
        field.neg(a),
        field.reduce(-2 * f),
    )


def common_contact_conic(s1: OrientedSphere, s2: OrientedSphere, s3: OrientedSphere) -> ConicSection:
    """ConicSection of all spheres in contact with the three given ones."""
    trio = (s1, s2, s3)
    for x, y in combinations(trio, 2):
        if contact(x, y):
            raise PairInContact(f"{x} and {y} are in contact")
    F = s1.field
    rows = [_constraint_row(F, sphere_to_lie(s)) for s in trio]
    rref_rows, pivots = rref(F, rows)
    if len(pivots) != 3:
        raise DegenerateTriple("contact constraints have rank < 3")
    basis = tuple(nullspace(F, rref_rows, pivots, 6))
    form = tuple(
        tuple(_lie_form_raw(F, basis[j], basis[k]) for k in range(3)) for j in range(3)
    )
    return ConicSection(F, tuple(rref_rows), basis, form)


def conic_membership(conic: ConicSection, s: OrientedSphere) -> bool:
    """True iff the sphere's Lie point satisfies the three linear constraints."""
    if s.field != conic.field:
        raise FieldMismatch(f"{s.field!r} vs {conic.field!r}")
    F = conic.field
    q = sphere_to_lie(s).coords
    return all(
        F.is_zero(sum(row[k] * q[k] for k in range(6))) for row in conic.constraints
    )


def _form_value(field: Field, form, alpha, beta, gamma) -> Element:
    return field.reduce(
        alpha * alpha * form[0][0]
        + beta * beta * form[1][1]
        + gamma * gamma * form[2][2]
        + 2 * (alpha * beta * form[0][1] + alpha * gamma * form[0][2] + beta * gamma * form[1][2])
    )


def conic_enumerate(conic: ConicSection) -> Tuple[List[OrientedSphere], int]:
    """All F_p-points of the conic: (spheres, count of a = 0 solutions)."""
    F = conic.field
    if not isinstance(F, PrimeField):
        raise UnsupportedForRationals("conic enumeration needs a finite field")
    one = F.reduce(1)
    zero = F.reduce(0)
    reps = [(one, b, g) for b in F.elements() for g in F.elements()]
    reps += [(zero, one, g) for g in F.elements()]
    reps.append((zero, zero, one))
    spheres = []
    at_infinity = 0
    v0, v1, v2 = conic.basis
    for alpha, beta, gamma in reps:
        if not F.is_zero(_form_value(F, conic.form, alpha, beta, gamma)):
            continue
        q = tuple(
            F.reduce(alpha * v0[k] + beta * v1[k] + gamma * v2[k]) for k in range(6)
        )
        if F.is_zero(q[0]):
            at_infinity += 1
        else:
            spheres.append(lie_to_sphere(LiePoint(F, q)))
    spheres.sort(key=lambda s: s.quad())
    return spheres, at_infinity


def conic_classify(conic: ConicSection) -> ConicClass:
    """Rank of the restricted form: 3 irreducible, 2 two lines, 1 double line."""
    rank = matrix_rank(conic.field, conic.form)
    if rank == 3:
        return ConicClass.IRREDUCIBLE
    if rank == 2:
        return ConicClass.TWO_LINES
    if rank == 1:
        return ConicClass.DOUBLE_LINE
    raise InvalidInput("restricted form vanishes identically")


def complementary_of(conic: ConicSection, members) -> ConicSection:
    """Conic of all spheres in contact with three given members of `conic`."""
    members = tuple(members)
    if len(members) != 3:
        raise InvalidInput("need exactly three member spheres")
    for s in members:
        if not conic_membership(conic, s):
            raise InvalidInput(f"{s} is not on the conic")
    return common_contact_conic(*members)
