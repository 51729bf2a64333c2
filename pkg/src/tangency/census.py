"""Generators, counting censuses and the verification suite.

Censuses are exact O(n^2) pair scans.  For prime fields (and for
integer-valued rational sets such as grids) the scan is vectorized with
numpy on int64; grouping and everything downstream of it stays in exact
field arithmetic.  Pair ranges may be split across processes; partial
results merge associatively and the final sort restores determinism.
"""

from __future__ import annotations

import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import combinations
from time import perf_counter
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .bridge import phi, sphere_line_via_pluecker, sphere_to_hline
from .errors import (
    BadPencilDirection,
    GeometryError,
    InvalidInput,
    UnsupportedForRationals,
    ZeroRadius,
    ZeroRadiusSphere,
)
from .field import Element, Field, PrimeField, RationalField, ext_is_zero
from .lines import (
    HLine,
    LineRelation,
    coplanar,
    heisenberg_membership,
    hline_to_pluecker,
    intersect,
    klein_form,
)
from .spheres import (
    LiePoint,
    OrientedSphere,
    contact,
    lie_form,
    sphere_to_lie,
)
from .structures import (
    ConicClass,
    ConicSection,
    PencilKey,
    common_contact_conic,
    conic_classify,
    conic_enumerate,
    conic_membership,
    enumerate_pencil,
    pencil_from_pair,
    pencil_members,
)

Point3 = Tuple[Element, Element, Element]

# Exhaustive triple scans above this size switch to seeded sampling.
EXHAUSTIVE_TRIPLE_LIMIT = 300
_NUMPY_VALUE_LIMIT = 1 << 30


@dataclass
class SphereSet:
    field: Field
    spheres: List[OrientedSphere]
    dedup_dropped: int = 0

    @property
    def n(self) -> int:
        return len(self.spheres)


@dataclass
class CensusReport:
    n: int
    field_spec: str
    contact_pairs: int
    histogram: Dict[int, int]
    warnings: List[str] = dc_field(default_factory=list)
    runtime_ms: float = 0.0

    def to_payload(self) -> dict:
        # runtime_ms is forced to 0 in serialized payloads so that equal
        # inputs always produce byte-identical reports; wall-clock time is
        # reported on stderr by the CLI instead.
        return {
            "n": self.n,
            "field": self.field_spec,
            "contact_pairs": self.contact_pairs,
            "histogram": {str(k): self.histogram[k] for k in sorted(self.histogram)},
            "warnings": list(self.warnings),
            "runtime_ms": 0,
        }


def make_sphere_set(field: Field, quads: Sequence[Sequence[Element]]) -> SphereSet:
    """Deduplicate quadruples (first occurrence wins) into a SphereSet."""
    seen = set()
    spheres = []
    dropped = 0
    for q in quads:
        s = OrientedSphere.of(field, *q)
        key = s.quad()
        if key in seen:
            dropped += 1
            continue
        seen.add(key)
        spheres.append(s)
    return SphereSet(field, spheres, dropped)


# ---------------------------------------------------------------------------
# Generators.

def gen_random(field: Field, n: int, seed: int = 0, bound: Optional[int] = None) -> SphereSet:
    if n < 1:
        raise InvalidInput("n must be positive")
    rng = random.Random(seed)
    if bound is None:
        quads = [[field.random(rng) for _ in range(4)] for _ in range(n)]
    else:
        quads = [[field.reduce(rng.randrange(bound)) for _ in range(4)] for _ in range(n)]
    return make_sphere_set(field, quads)


def gen_grid(field: Field, m: int) -> SphereSet:
    """All quadruples of {1, ..., m}^4."""
    if m < 2:
        raise InvalidInput("grid needs m >= 2")
    if isinstance(field, PrimeField) and field.p <= m:
        raise InvalidInput(f"grid m = {m} needs p > m")
    rng_vals = range(1, m + 1)
    quads = [
        (a, b, c, d)
        for a in rng_vals
        for b in rng_vals
        for c in rng_vals
        for d in rng_vals
    ]
    return make_sphere_set(field, quads)


def gen_pencil(field: Field, base: Sequence[Element], direction: Sequence[Element], count: int) -> SphereSet:
    """count spheres along a pencil line {base + t*dir}."""
    u, v, w, s = (field.reduce(x) for x in direction)
    if field.is_zero(s):
        raise BadPencilDirection("pencil radius step s must be nonzero")
    if not field.is_zero(u * u + v * v + w * w - s * s):
        raise BadPencilDirection("direction fails u^2 + v^2 + w^2 = s^2")
    if count < 1:
        raise InvalidInput("count must be positive")
    if isinstance(field, PrimeField) and count > field.p:
        raise InvalidInput(f"a pencil over F_{field.p} has only {field.p} spheres")
    base = tuple(field.reduce(x) for x in base)
    quads = [
        tuple(field.reduce(b + t * d) for b, d in zip(base, (u, v, w, s)))
        for t in range(count)
    ]
    return make_sphere_set(field, quads)


def gen_conic_pair(field: Field, seed: int = 0) -> SphereSet:
    """Union of the enumerations of a seeded pair of complimentary conics."""
    if not isinstance(field, PrimeField):
        raise UnsupportedForRationals("conic_pair generation needs a finite field")
    rng = random.Random(seed)
    for _ in range(2000):
        trio = [
            OrientedSphere.of(field, *(field.random(rng) for _ in range(4)))
            for _ in range(3)
        ]
        if len({s.quad() for s in trio}) != 3:
            continue
        if any(contact(a, b) for a, b in combinations(trio, 2)):
            continue
        try:
            conic = common_contact_conic(*trio)
        except GeometryError:
            continue
        if conic_classify(conic) is not ConicClass.IRREDUCIBLE:
            continue
        members, _inf = conic_enumerate(conic)
        if len(members) < 3:
            continue
        comp = common_contact_conic(*members[:3])
        comp_members, _inf2 = conic_enumerate(comp)
        if len(comp_members) < 3:
            continue
        return make_sphere_set(
            field, [s.quad() for s in members] + [s.quad() for s in comp_members]
        )
    raise InvalidInput("no admissible conic pair found for this seed")


def gen_plane_points(field: Field) -> List[Point3]:
    """The p^2 points of F_p x F_p x {0}."""
    if not isinstance(field, PrimeField):
        raise UnsupportedForRationals("plane_points needs a finite field")
    zero = field.reduce(0)
    return [(x, y, zero) for x in field.elements() for y in field.elements()]


# ---------------------------------------------------------------------------
# Contact-pair scan (numpy fast path, process workers, exact fallback).

def _int_matrix(rows) -> Optional[np.ndarray]:
    flat_ok = all(
        isinstance(v, int) and -_NUMPY_VALUE_LIMIT < v < _NUMPY_VALUE_LIMIT
        for row in rows
        for v in row
    )
    if not flat_ok:
        return None
    return np.asarray([list(r) for r in rows], dtype=np.int64)


def _scan_chunk(args):
    arr, modulus, lo, hi = args
    out = []
    for i in range(lo, hi):
        d = arr[i + 1 :] - arr[i]
        v = d[:, 0] * d[:, 0] + d[:, 1] * d[:, 1] + d[:, 2] * d[:, 2] - d[:, 3] * d[:, 3]
        if modulus:
            v %= modulus
        for j in np.nonzero(v == 0)[0]:
            out.append((i, int(j) + i + 1))
    return out


def contact_pair_indices(field: Field, spheres: Sequence[OrientedSphere], workers: int = 1) -> List[Tuple[int, int]]:
    """Sorted index pairs (i < j) of contacting distinct spheres."""
    n = len(spheres)
    arr = _int_matrix([s.quad() for s in spheres])
    if arr is None:
        pairs = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if contact(spheres[i], spheres[j])
        ]
        return pairs
    modulus = field.p if isinstance(field, PrimeField) else 0
    if workers <= 1 or n < 64:
        pairs = _scan_chunk((arr, modulus, 0, n - 1))
    else:
        nchunks = workers * 4
        bounds = [round(k * (n - 1) / nchunks) for k in range(nchunks + 1)]
        tasks = [
            (arr, modulus, lo, hi)
            for lo, hi in zip(bounds, bounds[1:])
            if hi > lo
        ]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            pairs = [p for part in pool.map(_scan_chunk, tasks) for p in part]
    pairs.sort()
    return pairs


# ---------------------------------------------------------------------------
# Censuses.

def pencil_census(sset: SphereSet, workers: int = 1) -> CensusReport:
    """Group contacting pairs by canonical pencil key; histogram by richness."""
    t0 = perf_counter()
    spheres = sset.spheres
    pairs = contact_pair_indices(sset.field, spheres, workers=workers)
    groups: Dict[PencilKey, set] = {}
    for i, j in pairs:
        key = pencil_from_pair(spheres[i], spheres[j])
        groups.setdefault(key, set()).update((i, j))
    histogram = dict(Counter(len(members) for members in groups.values()))
    warnings = []
    if sset.dedup_dropped:
        warnings.append(f"dropped {sset.dedup_dropped} duplicate quadruples")
    char = sset.field.char
    if char and sset.n > char * char:
        warnings.append(
            f"n = {sset.n} exceeds (char F)^2 = {char * char}: the k-rich pencil "
            "bound hypothesis does not apply"
        )
    return CensusReport(
        n=sset.n,
        field_spec=sset.field.spec(),
        contact_pairs=len(pairs),
        histogram=histogram,
        warnings=warnings,
        runtime_ms=(perf_counter() - t0) * 1000.0,
    )


def repeated_distance_census(field: Field, points: Sequence[Point3], r: Element) -> int:
    """Unordered point pairs at squared distance r^2; r must be nonzero."""
    r = field.reduce(r)
    if field.is_zero(r):
        raise ZeroRadius("repeated-distance census needs r != 0")
    rr = field.reduce(r * r)
    arr = _int_matrix(points)
    if arr is None:
        count = 0
        for (x1, y1, z1), (x2, y2, z2) in combinations(points, 2):
            dx, dy, dz = x1 - x2, y1 - y2, z1 - z2
            if field.is_zero(dx * dx + dy * dy + dz * dz - rr):
                count += 1
        return count
    modulus = field.p if isinstance(field, PrimeField) else 0
    count = 0
    for i in range(len(points) - 1):
        d = arr[i + 1 :] - arr[i]
        v = d[:, 0] * d[:, 0] + d[:, 1] * d[:, 1] + d[:, 2] * d[:, 2] - int(rr)
        if modulus:
            v %= modulus
        count += int(np.count_nonzero(v == 0))
    return count


def distance_histogram(field: Field, points: Sequence[Point3]) -> Dict[Element, int]:
    """Pair counts keyed by squared distance; the classes partition all pairs."""
    hist: Dict[Element, int] = {}
    for (x1, y1, z1), (x2, y2, z2) in combinations(points, 2):
        dx, dy, dz = x1 - x2, y1 - y2, z1 - z2
        key = field.reduce(dx * dx + dy * dy + dz * dz)
        hist[key] = hist.get(key, 0) + 1
    return hist


def incidence_census(field: Field, points: Sequence[Point3], sset: SphereSet) -> int:
    """Point-sphere incidences, computed by two routes that must agree.

    Route one substitutes into the sphere equation through the Lie
    coefficients; route two counts contacts between radius-0 spheres at
    the points and the given spheres.
    """
    for s in sset.spheres:
        if field.is_zero(s.r):
            raise ZeroRadiusSphere(f"{s} has radius 0")
    parr = _int_matrix(points)
    sarr = _int_matrix([s.quad() for s in sset.spheres])
    if parr is not None and sarr is not None:
        modulus = field.p if isinstance(field, PrimeField) else 0
        px, py, pz = parr[:, 0], parr[:, 1], parr[:, 2]
        norms = px * px + py * py + pz * pz
        direct = 0
        via_contact = 0
        for sx, sy, sz, sr in sarr:
            # Lie coefficients of the sphere: b = -x, c = -y, d = -z,
            # e = x^2 + y^2 + z^2 - r^2
            e = sx * sx + sy * sy + sz * sz - sr * sr
            v1 = norms + 2 * (-sx * px - sy * py - sz * pz) + e
            v2 = (px - sx) ** 2 + (py - sy) ** 2 + (pz - sz) ** 2 - sr * sr
            if modulus:
                v1 %= modulus
                v2 %= modulus
            direct += int(np.count_nonzero(v1 == 0))
            via_contact += int(np.count_nonzero(v2 == 0))
    else:
        from .spheres import sphere_point_membership

        direct = 0
        via_contact = 0
        for s in sset.spheres:
            q = sphere_to_lie(s)
            for pt in points:
                if sphere_point_membership(pt, q):
                    direct += 1
                zero_sphere = OrientedSphere.of(field, pt[0], pt[1], pt[2], 0)
                if contact(zero_sphere, s):
                    via_contact += 1
    if direct != via_contact:
        raise GeometryError(
            f"incidence routes disagree: {direct} direct vs {via_contact} via contact"
        )
    return direct


def bichromatic_census(red: Sequence[HLine], blue: Sequence[HLine]) -> int:
    """Distinct points of E^3 incident to at least one red and one blue line.

    Only transversal intersection points are countable; an identical
    red/blue pair shares a whole line and contributes no isolated points.
    """
    points = set()
    for r in red:
        for b in blue:
            w = intersect(r, b)
            if isinstance(w, LineRelation):
                continue
            points.add(w)
    return len(points)


@dataclass
class ConicPairEntry:
    conic: ConicSection
    complement: ConicSection
    members: int
    complement_members: int
    member_spheres: List[OrientedSphere]
    complement_spheres: List[OrientedSphere]


def conic_pair_census(
    sset: SphereSet,
    threshold: int,
    budget: int = 20000,
    seed: int = 0,
) -> List[ConicPairEntry]:
    """Deduplicated complimentary conic pairs with both member counts >= threshold.

    Exhaustive over triples for n <= EXHAUSTIVE_TRIPLE_LIMIT, seeded
    sampling of `budget` triples otherwise.  Pairs also need three
    pairwise non-contacting witnesses on the first conic to construct
    the complement, so thresholds below 3 behave like 3.
    """
    spheres = sset.spheres
    n = len(spheres)
    if n < 3:
        return []
    # bitmask contact matrix: row i has bit j set iff contact(s_i, s_j)
    pairs = contact_pair_indices(sset.field, spheres)
    masks = [1 << i for i in range(n)]  # self-contact
    for i, j in pairs:
        masks[i] |= 1 << j
        masks[j] |= 1 << i
    need = max(threshold, 3)

    if n <= EXHAUSTIVE_TRIPLE_LIMIT:
        triples = combinations(range(n), 3)
    else:
        rng = random.Random(seed)
        triples = (tuple(sorted(rng.sample(range(n), 3))) for _ in range(budget))

    seen = set()
    entries: List[ConicPairEntry] = []
    for i, j, k in triples:
        mi, mj, mk = masks[i], masks[j], masks[k]
        if mi >> j & 1 or mi >> k & 1 or mj >> k & 1:
            continue  # a pair of the triple is in contact
        common = mi & mj & mk
        if common.bit_count() < need:
            continue
        idx = [t for t in range(n) if common >> t & 1]
        # three pairwise non-contacting members of the first conic
        witnesses = None
        for a, b, c in combinations(idx, 3):
            if not (masks[a] >> b & 1 or masks[a] >> c & 1 or masks[b] >> c & 1):
                witnesses = (a, b, c)
                break
        if witnesses is None:
            continue
        comp_common = masks[witnesses[0]] & masks[witnesses[1]] & masks[witnesses[2]]
        if comp_common.bit_count() < threshold:
            continue
        try:
            conic = common_contact_conic(spheres[i], spheres[j], spheres[k])
            comp = common_contact_conic(*(spheres[t] for t in witnesses))
        except GeometryError:
            continue
        dedup_key = frozenset((conic.constraints, comp.constraints))
        if dedup_key in seen:
            continue
        seen.add(dedup_key)
        entries.append(
            ConicPairEntry(
                conic=conic,
                complement=comp,
                members=len(idx),
                complement_members=comp_common.bit_count(),
                member_spheres=[spheres[t] for t in idx],
                complement_spheres=[
                    spheres[t] for t in range(n) if comp_common >> t & 1
                ],
            )
        )
    entries.sort(key=lambda e: tuple(sorted((e.conic.constraints, e.complement.constraints))))
    return entries


def eta_check(s: OrientedSphere, points: Sequence[Point3]) -> Tuple[int, int]:
    """(incident point count, max points of the sphere on a single plane)."""
    F = s.field
    rr = s.r * s.r
    incident = []
    for (x, y, z) in points:
        dx, dy, dz = x - s.x, y - s.y, z - s.z
        if F.is_zero(dx * dx + dy * dy + dz * dz - rr):
            incident.append((x, y, z))
    k = len(incident)
    if k <= 2:
        return k, k
    best = 0
    for p1, p2, p3 in combinations(incident, 3):
        u = tuple(b - a for a, b in zip(p1, p2))
        v = tuple(b - a for a, b in zip(p1, p3))
        normal = (
            F.reduce(u[1] * v[2] - u[2] * v[1]),
            F.reduce(u[2] * v[0] - u[0] * v[2]),
            F.reduce(u[0] * v[1] - u[1] * v[0]),
        )
        if all(F.is_zero(c) for c in normal):
            continue  # collinear triple spans no unique plane
        offset = normal[0] * p1[0] + normal[1] * p1[1] + normal[2] * p1[2]
        count = sum(
            1
            for q in incident
            if F.is_zero(normal[0] * q[0] + normal[1] * q[1] + normal[2] * q[2] - offset)
        )
        best = max(best, count)
    return k, max(best, 2)


# ---------------------------------------------------------------------------
# Verification suite.

@dataclass
class SuiteResult:
    name: str
    checked: int
    failures: int
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.failures == 0


def _random_lie_pair(field: Field, rng) -> Tuple[LiePoint, LiePoint]:
    while True:
        q = tuple(field.random(rng) for _ in range(6))
        if any(not field.is_zero(v) for v in q):
            break
    while True:
        qp = tuple(field.random(rng) for _ in range(6))
        if any(not field.is_zero(v) for v in qp):
            break
    return LiePoint(field, q), LiePoint(field, qp)


def random_sphere(field: Field, rng) -> OrientedSphere:
    return OrientedSphere(field, *(field.random(rng) for _ in range(4)))


def check_bilinear_identity(field: Field, samples: int, seed: int = 0) -> SuiteResult:
    # bulk-generate the random 6-tuples (the per-sample RNG calls would
    # otherwise dominate the timing of this identity check)
    bound = field.p if isinstance(field, PrimeField) else RationalField.RANDOM_BOUND
    block = np.random.default_rng(seed).integers(0, bound, size=(samples, 12)).tolist()
    failures = 0
    is_zero, lp, ph, kform, lform = field.is_zero, LiePoint, phi, klein_form, lie_form
    for row in block:
        q = lp(field, tuple(row[:6]))
        qp = lp(field, tuple(row[6:]))
        lf = lform(q, qp)
        kf = kform(ph(q), ph(qp))
        if not (is_zero(kf[0] - lf) and is_zero(kf[1])):
            failures += 1
    return SuiteResult("bilinear_identity", samples, failures)


def check_four_way_contact(field: Field, samples: int, seed: int = 0) -> SuiteResult:
    rng = random.Random(seed)
    failures = 0
    for idx in range(samples):
        s = random_sphere(field, rng)
        if idx % 4 == 0:
            # force a contacting partner so the True branch is exercised
            t = _contact_partner(field, rng, s)
        else:
            t = random_sphere(field, rng)
        by_contact = contact(s, t)
        by_lie = field.is_zero(lie_form(sphere_to_lie(s), sphere_to_lie(t)))
        kf = klein_form(
            hline_to_pluecker(sphere_to_hline(s)), hline_to_pluecker(sphere_to_hline(t))
        )
        by_klein = ext_is_zero(field, kf)
        by_coplanar = coplanar(sphere_to_hline(s), sphere_to_hline(t))
        if not (by_contact == by_lie == by_klein == by_coplanar):
            failures += 1
    return SuiteResult("four_way_contact", samples, failures)


def _contact_partner(field: Field, rng, s: OrientedSphere) -> OrientedSphere:
    # (a^2+b^2-c^2)^2 + (2ac)^2 + (2bc)^2 = (a^2+b^2+c^2)^2 gives an
    # admissible displacement direction without square-root sampling
    a, b, c, t = (field.random(rng) for _ in range(4))
    return OrientedSphere(
        field,
        field.reduce(s.x + t * (a * a + b * b - c * c)),
        field.reduce(s.y + t * (2 * a * c)),
        field.reduce(s.z + t * (2 * b * c)),
        field.reduce(s.r + t * (a * a + b * b + c * c)),
    )


def check_two_route_lines(field: Field, samples: int, seed: int = 0) -> SuiteResult:
    rng = random.Random(seed)
    failures = 0
    for _ in range(samples):
        s = random_sphere(field, rng)
        if sphere_to_hline(s) != sphere_line_via_pluecker(s):
            failures += 1
    return SuiteResult("two_route_lines", samples, failures)


def check_heisenberg_containment(field: Field, samples: int, seed: int = 0, taus: int = 5) -> SuiteResult:
    rng = random.Random(seed)
    failures = 0
    for _ in range(samples):
        line = sphere_to_hline(random_sphere(field, rng))
        for _ in range(taus):
            tau = (field.random(rng), field.random(rng))
            if not heisenberg_membership(field, line.point_at(tau)):
                failures += 1
    return SuiteResult("heisenberg_containment", samples * taus, failures)


def brute_force_common_contact(field: PrimeField, s: OrientedSphere, t: OrientedSphere) -> List[OrientedSphere]:
    """Exhaustive {U : contact(U, s) and contact(U, t)} over all of F_p^4."""
    p = field.p
    quads = np.indices((p, p, p, p)).reshape(4, -1).T.astype(np.int64)
    out = []
    for ref in (s, t):
        d = quads - np.asarray(ref.quad(), dtype=np.int64)
        v = (d[:, 0] ** 2 + d[:, 1] ** 2 + d[:, 2] ** 2 - d[:, 3] ** 2) % p
        quads = quads[v == 0]
    return [OrientedSphere(field, *(int(x) for x in q)) for q in quads]


def check_lemma1_oracle(samples: int = 100, seed: int = 0) -> SuiteResult:
    field = PrimeField(7)
    rng = random.Random(seed)
    failures = 0
    for _ in range(samples):
        while True:
            s = random_sphere(field, rng)
            t = random_sphere(field, rng)
            if s != t and contact(s, t):
                break
        key = pencil_from_pair(s, t)
        pencil = {u.quad() for u in enumerate_pencil(key)}
        brute = {u.quad() for u in brute_force_common_contact(field, s, t)}
        if pencil != brute:
            failures += 1
    return SuiteResult("lemma1_pencil_oracle", samples, failures)


def brute_force_triple_contact(field: PrimeField, trio) -> List[OrientedSphere]:
    """Exhaustive spheres in contact with all three, over all of F_p^4."""
    p = field.p
    quads = np.indices((p, p, p, p)).reshape(4, -1).T.astype(np.int64)
    for ref in trio:
        d = quads - np.asarray(ref.quad(), dtype=np.int64)
        v = (d[:, 0] ** 2 + d[:, 1] ** 2 + d[:, 2] ** 2 - d[:, 3] ** 2) % p
        quads = quads[v == 0]
    return [OrientedSphere(field, *(int(x) for x in q)) for q in quads]


def random_admissible_triple(field: PrimeField, rng):
    """Seeded pairwise non-contacting rank-3 triple."""
    while True:
        trio = [random_sphere(field, rng) for _ in range(3)]
        if len({s.quad() for s in trio}) != 3:
            continue
        if any(contact(a, b) for a, b in combinations(trio, 2)):
            continue
        try:
            common_contact_conic(*trio)
        except GeometryError:
            continue
        return tuple(trio)


def check_conic_oracle(samples: int = 20, seed: int = 0) -> SuiteResult:
    field = PrimeField(11)
    rng = random.Random(seed)
    failures = 0
    for _ in range(samples):
        trio = random_admissible_triple(field, rng)
        conic = common_contact_conic(*trio)
        enumerated = {s.quad() for s in conic_enumerate(conic)[0]}
        brute = {s.quad() for s in brute_force_triple_contact(field, trio)}
        if enumerated != brute:
            failures += 1
    return SuiteResult("conic_oracle", samples, failures)


def check_three_sphere_solutions(samples: int = 10000, seed: int = 0) -> SuiteResult:
    """Non-collinear center triples in F_7^3: every r != 0 has <= 2 solutions."""
    field = PrimeField(7)
    p = field.p
    rng = random.Random(seed)
    pts = np.indices((p, p, p)).reshape(3, -1).T.astype(np.int64)
    nonzero_squares = {(r * r) % p for r in range(1, p)}
    failures = 0
    for _ in range(samples):
        while True:
            centers = np.asarray(
                [[rng.randrange(p) for _ in range(3)] for _ in range(3)], dtype=np.int64
            )
            u = centers[1] - centers[0]
            v = centers[2] - centers[0]
            cross = np.cross(u, v) % p
            if cross.any():
                break
        d0 = ((pts - centers[0]) ** 2).sum(axis=1) % p
        d1 = ((pts - centers[1]) ** 2).sum(axis=1) % p
        d2 = ((pts - centers[2]) ** 2).sum(axis=1) % p
        common = (d0 == d1) & (d0 == d2)
        counts = np.bincount(d0[common], minlength=p)
        for sq in nonzero_squares:
            if counts[sq] > 2:
                failures += 1
                break
    return SuiteResult("three_sphere_solutions", samples, failures)


def check_sphere_contains_no_lines(samples: int = 5, seed: int = 0) -> SuiteResult:
    """Random spheres over F_7 have no 3 collinear points."""
    field = PrimeField(7)
    p = field.p
    rng = random.Random(seed)
    pts = np.indices((p, p, p)).reshape(3, -1).T.astype(np.int64)
    failures = 0
    checked = 0
    for _ in range(samples):
        s = random_sphere(field, rng)
        center = np.asarray(s.center(), dtype=np.int64)
        on = pts[(((pts - center) ** 2).sum(axis=1) - s.r * s.r) % p == 0]
        for a, b, c in combinations(range(len(on)), 3):
            checked += 1
            u = (on[b] - on[a]) % p
            v = (on[c] - on[a]) % p
            if not (np.cross(u, v) % p).any():
                failures += 1
    return SuiteResult("sphere_no_collinear_points", checked, failures)


DEFAULT_VERIFY_SAMPLES = {
    "bilinear": 5000,
    "four_way": 5000,
    "two_route": 2000,
    "heisenberg": 1000,
    "lemma1": 30,
    "conic": 5,
    "three_sphere": 1000,
    "no_lines": 2,
}


def verify(field: Field, seed: int = 0, samples: Optional[dict] = None) -> List[SuiteResult]:
    """Cross-module invariant suites; oracles run on fixed small fields."""
    sizes = dict(DEFAULT_VERIFY_SAMPLES)
    if samples:
        sizes.update(samples)
    return [
        check_bilinear_identity(field, sizes["bilinear"], seed),
        check_four_way_contact(field, sizes["four_way"], seed),
        check_two_route_lines(field, sizes["two_route"], seed),
        check_heisenberg_containment(field, sizes["heisenberg"], seed),
        check_lemma1_oracle(sizes["lemma1"], seed),
        check_conic_oracle(sizes["conic"], seed),
        check_three_sphere_solutions(sizes["three_sphere"], seed),
        check_sphere_contains_no_lines(sizes["no_lines"], seed),
    ]
