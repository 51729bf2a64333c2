"""Exact sphere-tangency geometry over fields where -1 is not a square.

Oriented spheres in F^3 correspond to lines on a Heisenberg-type variety
in E^3 (E = F[i]) so that contact of spheres becomes coplanarity of
lines; this package implements the correspondence exactly, together
with pencil/conic structure of contacting families and counting
censuses over finite fields F_p, p = 3 (mod 4), and the rationals.
"""

from .bridge import (
    hline_to_sphere,
    line_pluecker_of_sphere,
    phi,
    phi_inverse,
    sphere_line_via_pluecker,
    sphere_to_hline,
)
from .census import (
    CensusReport,
    SphereSet,
    bichromatic_census,
    conic_pair_census,
    contact_pair_indices,
    distance_histogram,
    eta_check,
    gen_conic_pair,
    gen_grid,
    gen_pencil,
    gen_plane_points,
    gen_random,
    incidence_census,
    make_sphere_set,
    pencil_census,
    repeated_distance_census,
    verify,
)
from .errors import GeometryError
from .field import (
    Element,
    ExtElement,
    Field,
    PrimeField,
    RationalField,
    parse_field,
)
from .lines import (
    HLine,
    LineFamily,
    LineRelation,
    Plane,
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
from .spheres import (
    LiePoint,
    OrientedSphere,
    contact,
    lie_form,
    lie_to_sphere,
    on_lie_quadric,
    sphere_point_membership,
    sphere_to_lie,
)
from .structures import (
    ConicClass,
    ConicSection,
    PencilKey,
    canonical_pencil_key,
    common_contact_conic,
    complementary_of,
    conic_classify,
    conic_enumerate,
    conic_membership,
    enumerate_pencil,
    pencil_from_pair,
    pencil_members,
)

__version__ = "0.1.0"
