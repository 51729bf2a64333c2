"""Exception hierarchy shared across the library."""


class GeometryError(Exception):
    """Base class for every error raised by this package."""


class InvalidField(GeometryError):
    """Field spec violates the standing hypotheses (p prime, p = 3 mod 4)."""


class FieldMismatch(GeometryError):
    """Operands belong to different fields."""


class DivisionByZero(GeometryError, ZeroDivisionError):
    """Exact division by the zero element."""


class UnsupportedForRationals(GeometryError):
    """Operation requires a finite field (exhaustive enumeration)."""


class AtInfinity(GeometryError):
    """Lie point with a = 0: a plane or improper point, out of scope."""


class ParallelToXY(GeometryError):
    """Pluecker point with p01 = 0 does not come from a Heisenberg line."""


class NotHeisenberg(GeometryError):
    """Pluecker point violates the Heisenberg line shape constraints."""


class NotInHeisenberg(GeometryError):
    """Point of E^3 is not on the Heisenberg variety."""


class NotInImage(GeometryError):
    """Pluecker point is not in the image of the Lie-to-Klein map."""


class NotInContact(GeometryError):
    """Pencil construction requires a contacting pair."""


class IdenticalSpheres(GeometryError):
    """Pencil construction requires two distinct spheres."""


class PairInContact(GeometryError):
    """Conic construction requires a pairwise non-contacting triple."""


class DegenerateTriple(GeometryError):
    """Contact constraints of the triple have rank < 3."""


class BadPencilDirection(GeometryError):
    """Direction quadruple fails dx^2 + dy^2 + dz^2 = dr^2 or s = 0."""


class ZeroRadius(GeometryError):
    """Repeated-distance census requires r != 0."""


class ZeroRadiusSphere(GeometryError):
    """Incidence census requires spheres of nonzero radius."""


class InvalidInput(GeometryError):
    """Malformed file, parameter, or precondition violation."""
