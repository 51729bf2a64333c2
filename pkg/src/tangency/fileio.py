"""Delimited input/output: sphere and point TSV files, report serialization.

Sphere files are tab-separated with one header line naming the field:

    # field=p:7
    x<TAB>y<TAB>z<TAB>r

Point files carry three columns (a fourth is accepted when it is zero,
or unconditionally with drop_r=True).  JSON reports have the fixed key
order n, field, contact_pairs, histogram, warnings, runtime_ms, with
histogram keys stringified and sorted numerically; runtime_ms is always
serialized as 0 so equal inputs give byte-identical bytes.
"""

from __future__ import annotations

import json
from typing import List, Sequence, TextIO, Tuple

from .census import CensusReport, Point3, SphereSet, make_sphere_set
from .errors import InvalidInput
from .field import Field, parse_field
from .spheres import OrientedSphere

FIELD_PREFIX = "# field="


def _data_lines(fh: TextIO):
    header = None
    rows = []
    for lineno, raw in enumerate(fh, 1):
        line = raw.rstrip("\n")
        if not line.strip():
            continue
        if line.startswith("#"):
            if line.startswith(FIELD_PREFIX):
                if header is not None:
                    raise InvalidInput(f"line {lineno}: duplicate field header")
                header = line[len(FIELD_PREFIX):].strip()
            continue
        rows.append((lineno, line.split("\t")))
    if header is None:
        raise InvalidInput(f"missing '{FIELD_PREFIX}<spec>' header line")
    return header, rows


def read_spheres(fh: TextIO) -> SphereSet:
    spec, rows = _data_lines(fh)
    field = parse_field(spec)
    quads = []
    for lineno, cols in rows:
        if len(cols) != 4:
            raise InvalidInput(f"line {lineno}: expected 4 columns, got {len(cols)}")
        try:
            quads.append([field.parse(c) for c in cols])
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInput(f"line {lineno}: {exc}") from exc
    return make_sphere_set(field, quads)


def write_spheres(fh: TextIO, sset: SphereSet) -> None:
    fh.write(f"{FIELD_PREFIX}{sset.field.spec()}\n")
    fmt = sset.field.format
    for s in sset.spheres:
        fh.write("\t".join(fmt(v) for v in s.quad()) + "\n")


def read_points(fh: TextIO, drop_r: bool = False) -> Tuple[Field, List[Point3]]:
    spec, rows = _data_lines(fh)
    field = parse_field(spec)
    points: List[Point3] = []
    for lineno, cols in rows:
        if len(cols) not in (3, 4):
            raise InvalidInput(f"line {lineno}: expected 3 or 4 columns, got {len(cols)}")
        try:
            vals = [field.parse(c) for c in cols]
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInput(f"line {lineno}: {exc}") from exc
        if len(vals) == 4:
            if not drop_r and not field.is_zero(vals[3]):
                raise InvalidInput(
                    f"line {lineno}: nonzero radius in a point file (use --drop-r)"
                )
            vals = vals[:3]
        points.append(tuple(vals))
    return field, points


def write_points(fh: TextIO, field: Field, points: Sequence[Point3]) -> None:
    fh.write(f"{FIELD_PREFIX}{field.spec()}\n")
    fmt = field.format
    for p in points:
        fh.write("\t".join(fmt(v) for v in p) + "\n")


def report_json(report: CensusReport) -> str:
    return json.dumps(report.to_payload(), indent=2) + "\n"


def report_tsv(report: CensusReport) -> str:
    payload = report.to_payload()
    lines = [
        f"n\t{payload['n']}",
        f"field\t{payload['field']}",
        f"contact_pairs\t{payload['contact_pairs']}",
    ]
    for k, v in payload["histogram"].items():
        lines.append(f"histogram.{k}\t{v}")
    for w in payload["warnings"]:
        lines.append(f"warning\t{w}")
    lines.append("runtime_ms\t0")
    return "\n".join(lines) + "\n"


def payload_json(payload: dict) -> str:
    """Stable serialization for the non-report subcommand outputs."""
    return json.dumps(payload, indent=2) + "\n"
