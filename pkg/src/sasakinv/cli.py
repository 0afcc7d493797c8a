"""Command-line front end: thin wrappers around the library plus emitters.

Exit codes: 0 success, 1 verification mismatch, 2 usage error,
3 domain/integrity error.  JSON output renders every unbounded integer as
a decimal string; CSV mirrors the reference table column orders.
"""

from __future__ import annotations

import csv
import functools
import io
import json
import sys

import click

from . import complete_intersection as ci
from . import jsonio, reference
from .boothby_wang import BaseSurfaceData, bw_classify, link_sign
from .cohomology import AmbientSpace
from .errors import DomainError, IntegrityError
from .horikawa import horikawa_invariants, horikawa_spin, matched_pair, nonspin_tuple
from .pair_search import SearchBounds, search_collisions
from .surface_tuples import SurfaceInvariants, tuple_search
from .verify import verify_all


def _report_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (DomainError, IntegrityError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(3)

    return wrapper


def format_option(default="table"):
    return click.option(
        "--format",
        "fmt",
        type=click.Choice(["table", "json", "csv"]),
        default=default,
        show_default=True,
        help="Output format.",
    )


def _parse_ints(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise click.UsageError(f"malformed {what}: {text!r}")


def _parse_degrees(text: str, nfactors: int) -> tuple[tuple[int, ...], ...]:
    """Semicolons separate hypersurfaces, commas separate factor entries; on
    a single-factor ambient a bare comma list is a list of hypersurfaces."""
    text = text.strip()
    if not text:
        return ()
    if ";" in text:
        parts = [p for p in text.split(";") if p.strip()]
    elif nfactors == 1:
        parts = [p for p in text.split(",") if p.strip()]
    else:
        parts = [text]
    return tuple(tuple(_parse_ints(p, "degrees")) for p in parts)


def _emit_table(headers, rows) -> None:
    rows = [[str(c) for c in row] for row in rows]
    widths = [
        max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
        for i, h in enumerate(headers)
    ]
    click.echo("  ".join(h.ljust(w) for h, w in zip(headers, widths)))
    for row in rows:
        click.echo("  ".join(c.rjust(w) for c, w in zip(row, widths)))


def _emit_csv(headers, rows) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(headers)
    writer.writerows(rows)
    click.echo(buf.getvalue(), nl=False)


def _emit(fmt, headers, rows, payload) -> None:
    if fmt == "json":
        click.echo(json.dumps(payload, indent=2))
    elif fmt == "csv":
        _emit_csv(headers, rows)
    else:
        _emit_table(headers, rows)


def _surface_fields(inv: SurfaceInvariants) -> dict:
    data = jsonio.encode(inv)
    data["c1"] = " ".join(str(c) for c in inv.c1_coeffs)
    return data


@click.group()
def main():
    """Exact invariants of complete intersections and circle-bundle total spaces."""


@main.command("ci")
@click.option("--ambient", required=True, help="Comma-separated factor dimensions, e.g. 4 or 1,2.")
@click.option("--degrees", default="", help="Hypersurface multidegrees, e.g. 70,16,16,14,7,6 or 2,5;1,1.")
@click.option("--wall", "wall_flag", is_flag=True, help="Report the threefold Wall data (d, k, m, e).")
@click.option("--hodge", "hodge_flag", is_flag=True, help="Report the threefold Hodge numbers.")
@format_option()
@_report_errors
def cmd_ci(ambient, degrees, wall_flag, hodge_flag, fmt):
    """Chern data of a complete intersection in a product of projective spaces."""
    amb = AmbientSpace(tuple(_parse_ints(ambient, "ambient")))
    spec = ci.CompleteIntersectionSpec(amb, _parse_degrees(degrees, amb.nfactors))
    if amb.nfactors == 1:
        deg_str = ",".join(str(md[0]) for md in spec.degrees)
    else:
        deg_str = ";".join(",".join(map(str, md)) for md in spec.degrees)
    if wall_flag or hodge_flag:
        w = ci.wall_invariants(spec)
        payload = {"degrees": deg_str, **jsonio.encode(w), "k_parity": str(w.k_parity)}
        headers = ["degrees", "d", "p1", "chi", "c1"]
        row = [deg_str, w.d, w.m, w.e, w.k]
        if hodge_flag:
            hodge = ci.ci3_hodge(w, w.d)
            payload.update(jsonio.encode(hodge))
            headers += ["h03", "h12", "b3", "chiO"]
            row += [hodge.h03, hodge.h12, hodge.b3, hodge.chiO]
        _emit(fmt, headers, [row], payload)
        return
    rep = ci.chern_numbers(spec)
    payload = {
        "ambient": [str(n) for n in amb.factor_dims],
        "degrees": deg_str,
        "dim": str(rep.dim),
        "c1": str(rep.c1),
    }
    if rep.dim == 2:
        pairs = [("c1sq", rep.c1sq), ("c2", rep.c2)]
    else:
        pairs = [("c1cubed", rep.c1cubed), ("c1c2", rep.c1c2), ("c3", rep.c3)]
        if rep.p1 is not None:
            pairs.append(("p1", rep.p1))
    payload.update({name: str(value) for name, value in pairs})
    headers = ["degrees", "dim", "c1"] + [name for name, _ in pairs]
    row = [deg_str, rep.dim, str(rep.c1)] + [value for _, value in pairs]
    _emit(fmt, headers, [row], payload)


@main.command("tuple-search")
@click.option("-k", "--k", "k", type=int, required=True, help="Number of distinct c1^2 values wanted.")
@click.option("--q", "q_csv", default=None, help="Comma-separated q override, e.g. 2,3,4,6,8.")
@format_option()
@_report_errors
def cmd_tuple_search(k, q_csv, fmt):
    """Fixed-c2 tuples of (p, 3q)-hypersurfaces with distinct c1^2."""
    q_override = _parse_ints(q_csv, "q list") if q_csv else None
    result = tuple_search(k, q_override)
    headers = ["q", "p", "c1sq", "d_c1"]
    rows = [[row.q, row.p, row.c1sq, row.c1_div] for row in result.rows]
    payload = {
        "n": str(result.n),
        "c2": str(result.c2),
        "q_list": [str(q) for q in result.q_list],
        "rows": [
            {
                "q": str(row.q),
                "p": str(row.p),
                "c1sq": str(row.c1sq),
                "c2": str(result.c2),
                "d_c1": str(row.c1_div),
            }
            for row in result.rows
        ],
        "groups": [[str(row.q) for row in group] for group in result.groups],
    }
    if fmt == "table":
        click.echo(f"n = {result.n}  (c2 = 3n = {result.c2})")
    _emit(fmt, headers, rows, payload)


@main.command("horikawa")
@click.option("--i", "i", type=int, required=True, help="Degree of the Hirzebruch surface.")
@format_option()
@_report_errors
def cmd_horikawa(i, fmt):
    """Invariants of the double cover of the degree-i Hirzebruch surface."""
    inv = horikawa_invariants(i)
    _, witness = horikawa_spin(i)
    payload = {"i": str(i), **_surface_fields(inv), "spin_witness": str(witness)}
    headers = ["i", "c1sq", "c2", "chiO", "b2", "h02", "h11", "spin", "d_c1"]
    rows = [[i, inv.c1sq, inv.c2, inv.chiO, inv.b2, inv.h02, inv.h11, inv.spin, inv.c1_div]]
    _emit(fmt, headers, rows, payload)


@main.command("theorem-c")
@click.option("--k", "k", type=int, required=True)
@format_option()
@_report_errors
def cmd_theorem_c(k, fmt):
    """The matched pair: complete intersection vs double cover at i = 8k+2."""
    pair = matched_pair(k)
    payload = {
        "k": str(k),
        "ci_surface": _surface_fields(pair.ci_surface),
        "cover_surface": _surface_fields(pair.cover_surface),
        "hodge_differ": pair.hodge_differ,
        "contact_obstruction": pair.contact_obstruction.value,
        "sphere_bundle_summands": str(pair.sphere_bundle_summands),
    }
    headers = ["side", "c1sq", "c2", "chiO", "b2", "h02", "h11", "spin", "d_c1"]
    rows = [
        ["ci", *(getattr(pair.ci_surface, f) for f in ("c1sq", "c2", "chiO", "b2", "h02", "h11", "spin", "c1_div"))],
        ["cover", *(getattr(pair.cover_surface, f) for f in ("c1sq", "c2", "chiO", "b2", "h02", "h11", "spin", "c1_div"))],
    ]
    if fmt == "table":
        click.echo(
            f"k = {k}: total space #{pair.sphere_bundle_summands}(S^2 x S^3), "
            f"hodge_differ = {pair.hodge_differ}, "
            f"contact = {pair.contact_obstruction.value}"
        )
    _emit(fmt, headers, rows, payload)


@main.command("nonspin-tuple")
@click.option("-k", "--k", "k", type=int, required=True)
@click.option("--euler", "euler_csv", default="1,2", show_default=True, help="Kahler class a,b (b even, gcd 1).")
@format_option()
@_report_errors
def cmd_nonspin_tuple(k, euler_csv, fmt):
    """Non-spin fixed-c2 tuples over even q, with a shared Kahler class."""
    coeffs = _parse_ints(euler_csv, "euler class")
    if len(coeffs) != 2:
        raise click.UsageError("euler class needs exactly two coefficients")
    rows_out = nonspin_tuple(k, (coeffs[0], coeffs[1]))
    headers = ["q", "p", "c1sq", "d_c1", "c1_mod2", "euler_mod2", "manifold"]
    rows = []
    payload = []
    for row in rows_out:
        base = BaseSurfaceData(
            invariants=row.invariants, euler_class=row.euler_class
        )
        report = bw_classify(base)
        rows.append(
            [
                row.surface.q,
                row.surface.p,
                row.invariants.c1sq,
                row.invariants.c1_div,
                " ".join(map(str, row.c1_mod2)),
                " ".join(map(str, row.euler_mod2)),
                report.manifold.label(),
            ]
        )
        payload.append(
            {
                "q": str(row.surface.q),
                "p": str(row.surface.p),
                "invariants": _surface_fields(row.invariants),
                "euler_class": [str(c) for c in row.euler_class],
                "report": {**jsonio.encode(report), "label": report.manifold.label()},
            }
        )
    _emit(fmt, headers, rows, payload)


@main.group()
def bw():
    """Boothby-Wang classification of circle-bundle total spaces."""


@bw.command("classify")
@click.option("--from-file", "path", required=True, type=click.Path(exists=True, dir_okay=False), help="JSON surface record.")
@format_option()
@_report_errors
def cmd_bw_classify(path, fmt):
    """Classify the total space over a surface given as a JSON record.

    Schema: c1_coeffs, c1sq, c2, spin, ample_canonical, euler_class,
    simply_connected (integers as decimal strings or numbers).
    """
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise click.UsageError(f"invalid JSON in {path}: {exc}")
    try:
        inv = SurfaceInvariants.from_chern(
            c1_coeffs=[int(x) for x in data["c1_coeffs"]],
            c1sq=int(data["c1sq"]),
            c2=int(data["c2"]),
            spin=bool(data["spin"]),
            ample_canonical=bool(data["ample_canonical"]),
        )
        base = BaseSurfaceData(
            invariants=inv,
            euler_class=tuple(int(x) for x in data["euler_class"]),
            simply_connected=bool(data.get("simply_connected", True)),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise click.UsageError(f"bad surface record in {path}: {exc!r}")
    report = bw_classify(base)
    payload = {**jsonio.encode(report), "label": report.manifold.label()}
    headers = ["manifold", "contact_c1_zero", "hamilton_div", "h02", "h11", "b2", "negative_type"]
    rows = [
        [
            report.manifold.label(),
            report.contact_c1_zero,
            report.hamilton_div,
            *report.basic_hodge,
            report.negative_type,
        ]
    ]
    _emit(fmt, headers, rows, payload)


@main.command("link-sign")
@click.option("--weights", required=True, help="Comma-separated positive weights.")
@click.option("--degree", type=int, required=True)
@format_option()
@_report_errors
def cmd_link_sign(weights, degree, fmt):
    """Sign of sum(weights) - degree for a weighted homogeneous link."""
    ws = _parse_ints(weights, "weights")
    sign = link_sign(ws, degree)
    payload = {
        "weights": [str(w) for w in ws],
        "degree": str(degree),
        "sign": sign.value,
    }
    _emit(fmt, ["weights", "degree", "sign"], [[" ".join(map(str, ws)), degree, sign.value]], payload)


@main.command("pair-search")
@click.option("--max-r", type=int, required=True, help="Maximum codimension.")
@click.option("--max-degree", type=int, required=True)
@click.option("--max-total-degree", type=int, default=None)
@click.option("--jobs", type=int, default=1, show_default=True, help="Worker processes for phase 1.")
@click.option("--spill-dir", type=click.Path(file_okay=False), default=None, envvar="SASAKINV_SPILL_DIR")
@click.option("--memory-budget", type=int, default=None, help="Max in-core records before spilling.")
@click.option("--checkpoint-dir", type=click.Path(file_okay=False), default=None, help="Persist per-shard records; reruns resume.")
@format_option(default="json")
@_report_errors
def cmd_pair_search(max_r, max_degree, max_total_degree, jobs, spill_dir, memory_budget, checkpoint_dir, fmt):
    """Search for Wall-invariant collisions with distinct first Chern classes."""
    bounds = SearchBounds(
        max_codim=max_r,
        max_degree=max_degree,
        max_total_degree=max_total_degree,
        memory_budget=memory_budget,
    )
    groups = search_collisions(
        bounds, jobs=jobs, spill_dir=spill_dir, checkpoint_dir=checkpoint_dir
    )
    payload = jsonio.encode(groups)
    headers = ["group", "d", "m", "e", "k_parity", "degrees", "k", "h03", "h12"]
    rows = []
    for idx, group in enumerate(groups):
        for member in group.members:
            rows.append(
                [
                    idx,
                    group.d,
                    group.m,
                    group.e,
                    group.k_parity,
                    ",".join(map(str, member.degrees)),
                    member.k,
                    member.h03,
                    member.h12,
                ]
            )
    _emit(fmt, headers, rows, payload)


@main.command("verify")
@click.option("--seed-tables", is_flag=True, help="Dump the recorded fixtures as JSON and exit.")
@click.option("--kmax", type=int, default=100, show_default=True, help="Range of the family identity suite.")
@format_option()
@_report_errors
def cmd_verify(seed_tables, kmax, fmt):
    """Recompute every recorded reference value; exit 1 on any mismatch."""
    if seed_tables:
        click.echo(
            json.dumps(
                {
                    "surface_tuple": {
                        "q": [str(q) for q in reference.SURFACE_TUPLE_Q],
                        "n": str(reference.SURFACE_TUPLE_N),
                        "rows": {
                            str(q): [str(x) for x in row]
                            for q, row in reference.SURFACE_TUPLE_ROWS.items()
                        },
                    },
                    "known_wall_rows": [
                        {
                            "degrees": [str(d) for d in degrees],
                            "d": str(d),
                            "m": str(m),
                            "e": str(e),
                            "k": str(k),
                        }
                        for degrees, (d, m, e, k) in reference.KNOWN_WALL_ROWS.items()
                    ],
                },
                indent=2,
            )
        )
        return
    report = verify_all(kmax)
    sections = [
        ("surface tuple", report.surface_tuple),
        ("known pairs", report.known_pairs),
        ("family identities", report.family_identities),
    ]
    if fmt == "json":
        click.echo(json.dumps(jsonio.encode(report), indent=2))
    else:
        for name, diffs in sections:
            click.echo(f"{name}: {'ok' if not diffs else 'MISMATCH'}")
            for line in diffs:
                click.echo(f"  {line}")
    if not report.ok:
        sys.exit(1)


if __name__ == "__main__":
    main()
