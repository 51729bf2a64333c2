"""Command-line interface.

Exit codes: 0 success, 1 domain error (bad input, precondition
violation), 2 verification counterexample.  All reports are
deterministic given the inputs: wall-clock timing goes to stderr, never
into the serialized output.
"""

from __future__ import annotations

import sys
from contextlib import contextmanager
from time import perf_counter

import click

from . import census as cz
from . import fileio
from .bridge import sphere_to_hline
from .errors import GeometryError, InvalidInput
from .field import parse_field
from .spheres import OrientedSphere


def _fail(exc: GeometryError):
    click.echo(f"error: {exc}", err=True)
    sys.exit(1)


@contextmanager
def _domain_errors():
    try:
        yield
    except GeometryError as exc:
        _fail(exc)


def _emit(text: str, output):
    if output in (None, "-"):
        click.echo(text, nl=False)
    else:
        with open(output, "w") as fh:
            fh.write(text)


def _stderr_timing(label: str, t0: float) -> None:
    click.echo(f"{label}: {(perf_counter() - t0) * 1000.0:.1f} ms", err=True)


def _parse_quad(field, text: str):
    parts = [p for p in text.replace(",", " ").split() if p]
    if len(parts) != 4:
        raise InvalidInput(f"expected 4 comma-separated values, got {text!r}")
    return tuple(field.parse(p) for p in parts)


FIELD_OPT = click.option("--field", "field_spec", required=True, help="p:<prime> or rational")
OUT_OPT = click.option("-o", "--output", default=None, help="output path (default stdout)")
WORKERS_OPT = click.option("--workers", default=1, show_default=True, help="parallel workers")
SEED_OPT = click.option("--seed", default=0, show_default=True, help="deterministic RNG seed")


@click.group()
def main():
    """Exact sphere-tangency and Heisenberg-line toolkit."""


# ---------------------------------------------------------------------------
# gen

@main.command("gen")
@click.argument("kind", type=click.Choice(["random", "grid", "pencil", "conic_pair", "plane_points"]))
@FIELD_OPT
@click.option("--n", default=100, show_default=True, help="sphere count (random)")
@click.option("--m", default=3, show_default=True, help="grid side (grid)")
@click.option("--base", default="0,0,0,0", show_default=True, help="pencil base quadruple")
@click.option("--dir", "direction", default="0,0,1,1", show_default=True, help="pencil direction quadruple")
@click.option("-k", "--count", default=5, show_default=True, help="sphere count (pencil)")
@click.option("--bound", default=None, type=int, help="value bound for random generation")
@SEED_OPT
@WORKERS_OPT
@OUT_OPT
def gen_cmd(kind, field_spec, n, m, base, direction, count, bound, seed, workers, output):
    """Write a generated sphere (or point) TSV to -o/stdout."""
    with _domain_errors():
        field = parse_field(field_spec)
        t0 = perf_counter()
        if kind == "plane_points":
            points = cz.gen_plane_points(field)
            import io

            buf = io.StringIO()
            fileio.write_points(buf, field, points)
            _emit(buf.getvalue(), output)
            _stderr_timing("gen plane_points", t0)
            return
        if kind == "random":
            sset = cz.gen_random(field, n, seed=seed, bound=bound)
        elif kind == "grid":
            sset = cz.gen_grid(field, m)
        elif kind == "pencil":
            sset = cz.gen_pencil(field, _parse_quad(field, base), _parse_quad(field, direction), count)
        else:
            sset = cz.gen_conic_pair(field, seed=seed)
        import io

        buf = io.StringIO()
        fileio.write_spheres(buf, sset)
        _emit(buf.getvalue(), output)
        _stderr_timing(f"gen {kind}", t0)


# ---------------------------------------------------------------------------
# pencils

@main.command("pencils")
@click.argument("spheres", type=click.File("r"))
@click.option("--json", "as_json", is_flag=True, default=True, help="JSON report (default)")
@click.option("--tsv", "as_tsv", is_flag=True, default=False, help="TSV report")
@click.option("--plot", default=None, help="also render the richness histogram to this image path")
@WORKERS_OPT
@OUT_OPT
def pencils_cmd(spheres, as_json, as_tsv, plot, workers, output):
    """Pencil census: contact pairs grouped by pencil, richness histogram."""
    with _domain_errors():
        sset = fileio.read_spheres(spheres)
        t0 = perf_counter()
        report = cz.pencil_census(sset, workers=workers)
        text = fileio.report_tsv(report) if as_tsv else fileio.report_json(report)
        _emit(text, output)
        if plot:
            from .plotting import plot_richness_histogram

            plot_richness_histogram(report, plot)
            click.echo(f"figure written to {plot}", err=True)
        _stderr_timing("pencils", t0)


# ---------------------------------------------------------------------------
# distances

@main.command("distances")
@click.argument("points", type=click.File("r"))
@click.option("--r", "radius", required=True, help="nonzero distance value")
@click.option("--drop-r", is_flag=True, default=False, help="ignore a 4th nonzero column")
@WORKERS_OPT
@OUT_OPT
def distances_cmd(points, radius, drop_r, workers, output):
    """Count unordered point pairs at squared distance r^2."""
    with _domain_errors():
        field, pts = fileio.read_points(points, drop_r=drop_r)
        r = field.parse(radius)
        t0 = perf_counter()
        count = cz.repeated_distance_census(field, pts, r)
        payload = {
            "n": len(pts),
            "field": field.spec(),
            "r": field.format(field.reduce(r)),
            "pairs": count,
        }
        _emit(fileio.payload_json(payload), output)
        _stderr_timing("distances", t0)


# ---------------------------------------------------------------------------
# incidences

@main.command("incidences")
@click.option("--points", "points_file", required=True, type=click.File("r"))
@click.option("--spheres", "spheres_file", required=True, type=click.File("r"))
@click.option("--drop-r", is_flag=True, default=False, help="ignore a 4th nonzero point column")
@WORKERS_OPT
@OUT_OPT
def incidences_cmd(points_file, spheres_file, drop_r, workers, output):
    """Count point-sphere incidences (two independent routes must agree)."""
    with _domain_errors():
        field, pts = fileio.read_points(points_file, drop_r=drop_r)
        sset = fileio.read_spheres(spheres_file)
        if sset.field != field:
            raise InvalidInput(
                f"point field {field.spec()} != sphere field {sset.field.spec()}"
            )
        t0 = perf_counter()
        count = cz.incidence_census(field, pts, sset)
        payload = {
            "points": len(pts),
            "spheres": sset.n,
            "field": field.spec(),
            "incidences": count,
        }
        _emit(fileio.payload_json(payload), output)
        _stderr_timing("incidences", t0)


# ---------------------------------------------------------------------------
# bichromatic

@main.command("bichromatic")
@click.option("--red", "red_file", required=True, type=click.File("r"))
@click.option("--blue", "blue_file", required=True, type=click.File("r"))
@WORKERS_OPT
@OUT_OPT
def bichromatic_cmd(red_file, blue_file, workers, output):
    """Distinct intersection points between the line images of two sphere sets."""
    with _domain_errors():
        red = fileio.read_spheres(red_file)
        blue = fileio.read_spheres(blue_file)
        if red.field != blue.field:
            raise InvalidInput(
                f"red field {red.field.spec()} != blue field {blue.field.spec()}"
            )
        t0 = perf_counter()
        red_lines = [sphere_to_hline(s) for s in red.spheres]
        blue_lines = [sphere_to_hline(s) for s in blue.spheres]
        count = cz.bichromatic_census(red_lines, blue_lines)
        payload = {
            "red": red.n,
            "blue": blue.n,
            "field": red.field.spec(),
            "points": count,
        }
        _emit(fileio.payload_json(payload), output)
        _stderr_timing("bichromatic", t0)


# ---------------------------------------------------------------------------
# conics

@main.command("conics")
@click.argument("spheres", type=click.File("r"))
@click.option("--threshold", default=3, show_default=True, help="minimum members on each conic")
@click.option("--budget", default=20000, show_default=True, help="sampled triples for large inputs")
@click.option("--dump-quadruples", is_flag=True, default=False, help="include member quadruples")
@SEED_OPT
@WORKERS_OPT
@OUT_OPT
def conics_cmd(spheres, threshold, budget, dump_quadruples, seed, workers, output):
    """Census of complimentary conic pairs rich in input spheres."""
    with _domain_errors():
        sset = fileio.read_spheres(spheres)
        t0 = perf_counter()
        entries = cz.conic_pair_census(sset, threshold, budget=budget, seed=seed)
        fmt = sset.field.format
        items = []
        for e in entries:
            item = {"members": e.members, "complement_members": e.complement_members}
            if dump_quadruples:
                item["member_quadruples"] = [
                    [fmt(v) for v in s.quad()] for s in e.member_spheres
                ]
                item["complement_quadruples"] = [
                    [fmt(v) for v in s.quad()] for s in e.complement_spheres
                ]
            items.append(item)
        payload = {
            "n": sset.n,
            "field": sset.field.spec(),
            "threshold": threshold,
            "pairs": items,
        }
        _emit(fileio.payload_json(payload), output)
        _stderr_timing("conics", t0)


# ---------------------------------------------------------------------------
# eta

@main.command("eta")
@click.argument("points", type=click.File("r"))
@click.option("--sphere", "sphere_text", required=True, help="x,y,z,r quadruple")
@click.option("--drop-r", is_flag=True, default=False, help="ignore a 4th nonzero point column")
@WORKERS_OPT
@OUT_OPT
def eta_cmd(points, sphere_text, drop_r, workers, output):
    """Incident point count and largest coplanar subset on one sphere."""
    with _domain_errors():
        field, pts = fileio.read_points(points, drop_r=drop_r)
        quad = _parse_quad(field, sphere_text)
        s = OrientedSphere.of(field, *quad)
        t0 = perf_counter()
        incident, max_coplanar = cz.eta_check(s, pts)
        payload = {
            "field": field.spec(),
            "sphere": [field.format(v) for v in s.quad()],
            "incident": incident,
            "max_coplanar": max_coplanar,
            "eta_nondegenerate": incident <= 2 or max_coplanar < incident,
        }
        _emit(fileio.payload_json(payload), output)
        _stderr_timing("eta", t0)


# ---------------------------------------------------------------------------
# verify

@main.command("verify")
@FIELD_OPT
@SEED_OPT
@click.option("--fast", is_flag=True, default=False, help="smaller sample sizes")
@WORKERS_OPT
@OUT_OPT
def verify_cmd(field_spec, seed, fast, workers, output):
    """Run the cross-module verification suites; exit 2 on a counterexample."""
    with _domain_errors():
        field = parse_field(field_spec)
        sizes = None
        if fast:
            sizes = {
                "bilinear": 500,
                "four_way": 500,
                "two_route": 200,
                "heisenberg": 100,
                "lemma1": 5,
                "conic": 2,
                "three_sphere": 100,
                "no_lines": 1,
            }
        t0 = perf_counter()
        results = cz.verify(field, seed=seed, samples=sizes)
        payload = {
            "field": field.spec(),
            "seed": seed,
            "suites": [
                {
                    "name": r.name,
                    "checked": r.checked,
                    "failures": r.failures,
                    "passed": r.passed,
                }
                for r in results
            ],
            "all_passed": all(r.passed for r in results),
        }
        _emit(fileio.payload_json(payload), output)
        _stderr_timing("verify", t0)
        if not payload["all_passed"]:
            sys.exit(2)


if __name__ == "__main__":
    main()
