"""Command-line front end.

Subcommands mirror the HTTP service (fiber, gamma, zeros, classify,
decompose, structure, monomial) and call the same handler layer in
process; the CLI never opens a network connection.

Function-spec arguments (``--b``, ``--g``, ``--f``) take JSON: inline
when the argument starts with ``{``, otherwise the path of a JSON file.
``--json`` emits the full schema-versioned report (to stdout with no
value or ``-``, otherwise to the named file); grid output is CSV with
the fixed header ``re,im,gamma_re,gamma_im,abs,arg``.

Exit codes: 0 success; 2 spec or argument parse error; 3 domain error;
4 exact form requested for a non-rational function; 5 analysis
inconclusive or degenerate.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys

from .errors import (BlaschkeGammaError, DomainError, NotRational,
                     SpecParseError)
from .funcspec import read_spec_argument
from .service import handlers
from .service.models import CSV_HEADER, Report

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_NOT_RATIONAL = 4
EXIT_INCONCLUSIVE = 5


def _parse_point(text: str, flag: str = "--z") -> complex:
    parts = text.split(",")
    if len(parts) != 2:
        raise SpecParseError(flag, f"expected RE,IM, got {text!r}")
    try:
        return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        raise SpecParseError(flag, f"cannot read {text!r} as RE,IM") from None


def _parse_radii(text: str):
    try:
        radii = tuple(float(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise SpecParseError("--radii",
                             f"cannot read {text!r} as comma-separated "
                             "floats") from None
    if len(radii) < 2:
        raise SpecParseError("--radii", "need at least two radii")
    return radii


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _fmt_pair(pair) -> str:
    re, im = pair
    if im == 0:
        return _fmt(re)
    sign = "+" if im >= 0 else "-"
    return f"{_fmt(re)} {sign} {_fmt(abs(im))}i"


# ---------------------------------------------------------------------------
# text renderers
# ---------------------------------------------------------------------------

def _render_fiber(report: Report, out) -> None:
    fb = report.fiber
    print(f"fiber through z = {_fmt_pair(fb.base)} "
          f"(residual {fb.residual:.3e}):", file=out)
    for point, mult in zip(fb.points, fb.multiplicities):
        print(f"  {_fmt_pair(point)}  x{mult}", file=out)


def _render_gamma(report: Report, out) -> None:
    if report.exact is not None:
        print("gamma numerator coefficients (ascending): "
              + json.dumps(report.exact.num), file=out)
        print("gamma denominator coefficients (ascending): "
              + json.dumps(report.exact.den), file=out)
    if report.values is None:
        return
    if len(report.values) == 1:
        entry = report.values[0]
        print(f"gamma({_fmt_pair(entry.z)}) = {_fmt_pair(entry.value)}   "
              f"|gamma| = {_fmt(entry.abs)}, arg = {_fmt(entry.arg)}",
              file=out)
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER.split(","))
    for entry in report.values:
        writer.writerow([repr(entry.z[0]), repr(entry.z[1]),
                         repr(entry.value[0]), repr(entry.value[1]),
                         repr(entry.abs), repr(entry.arg)])


def _render_zero_list(entries, out) -> None:
    for entry in entries:
        print(f"  {_fmt_pair(entry.location)}  multiplicity "
              f"{entry.multiplicity}", file=out)


def _render_zeros(report: Report, out) -> None:
    total = sum(e.multiplicity for e in report.zeros)
    print(f"zeros of gamma inside |z| < {_fmt(report.search_radius)}: "
          f"{total} (counted with multiplicity)", file=out)
    _render_zero_list(report.zeros, out)


def _render_defect(defect, out) -> None:
    print(f"defect table ({defect.points} circle points, "
          f"{defect.origin_multiplicity} origin zeros removed):", file=out)
    print("  radius      raw           zero-removed", file=out)
    for row in defect.rows:
        print(f"  {row.radius:<10.6g}{row.raw:<14.6g}{row.removed:.6g}",
              file=out)
    print(f"  boundary limits: raw {_fmt(defect.raw_limit)}, "
          f"zero-removed {_fmt(defect.removed_limit)}", file=out)


def _render_classify(report: Report, out) -> None:
    v = report.verdict
    print(f"verdict: {v.kind}  (space {v.space}, reason {v.reason})",
          file=out)
    if v.codim_bound is not None:
        print(f"codimension bound: {v.codim_bound}", file=out)
    if v.exact_codim is not None:
        print(f"exact codimension: {v.exact_codim}", file=out)
    if report.zeros:
        print("interior zeros of gamma:", file=out)
        _render_zero_list(report.zeros, out)
    if report.boundary_zeros:
        print("boundary zeros of gamma:", file=out)
        _render_zero_list(report.boundary_zeros, out)
    if report.defect is not None:
        _render_defect(report.defect, out)
    if report.structure is not None:
        _render_structure(report, out)
    if report.diagnostics:
        parts = ", ".join(f"{k}={v}" for k, v in report.diagnostics.items())
        print(f"diagnostics: {parts}", file=out)


def _render_decompose(report: Report, out) -> None:
    d = report.decomposition
    print(f"decomposition samples: {d.sample_count} "
          f"(skipped {len(d.skipped)})", file=out)
    if d.max_residual is not None:
        print(f"max residual: {d.max_residual:.3e}", file=out)
    if d.mean_residual is not None:
        print(f"mean residual: {d.mean_residual:.3e}", file=out)
    if d.fiber_constancy is not None:
        print(f"fiber-constancy deviation: {d.fiber_constancy:.3e}",
              file=out)
    print(f"degenerate: {'yes' if d.degenerate else 'no'}", file=out)
    if d.samples:
        print("coefficients per sample (ascending powers of g):", file=out)
        for s in d.samples:
            coeffs = ", ".join(_fmt_pair(c) for c in s.coeffs)
            print(f"  z = {_fmt_pair(s.z)}: [{coeffs}]  "
                  f"residual {s.residual:.3e}", file=out)


def _render_structure(report: Report, out) -> None:
    s = report.structure
    divides = "divides" if s.divides_degree else "does not divide"
    print(f"fibers partition into g-level blocks of size {s.level_size} "
          f"({s.level_size} {divides} the generator degree); "
          f"{len(s.partitions)} sample fibers checked", file=out)


def _render_monomial(report: Report, out) -> None:
    m = report.monomial
    print(f"B = z^{m.n}, g = z^{m.m}: gamma has {m.zero_count} zeros "
          f"(all at the origin); codimension {m.codimension}", file=out)


_RENDERERS = {
    "fiber": _render_fiber,
    "gamma": _render_gamma,
    "zeros": _render_zeros,
    "classify": _render_classify,
    "decompose": _render_decompose,
    "structure": _render_structure,
    "monomial": _render_monomial,
}


def _emit(report: Report, args) -> None:
    json_target = getattr(args, "json", None)
    payload = None
    if json_target is not None:
        payload = report.model_dump_json(indent=2, exclude_none=True)
    if json_target == "-":
        print(payload)
        return
    if json_target is not None:
        with open(json_target, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    if report.status != "ok":
        print(f"status: {report.status} -- {report.detail}",
              file=sys.stdout)
    renderer = _RENDERERS[report.command]
    if _has_payload(report):
        renderer(report, sys.stdout)


def _has_payload(report: Report) -> bool:
    return any(getattr(report, name) is not None
               for name in ("fiber", "values", "exact", "zeros", "verdict",
                            "defect", "structure", "decomposition",
                            "monomial"))


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_fiber(args) -> Report:
    return handlers.run_fiber(read_spec_argument(args.b),
                              _parse_point(args.z))


def cmd_gamma(args) -> Report:
    if args.z is None and args.grid is None and not args.exact:
        raise SpecParseError("gamma", "need --z, --grid, or --exact")
    if args.z is not None and args.grid is not None:
        raise SpecParseError("gamma", "--z and --grid are mutually exclusive")
    z = _parse_point(args.z) if args.z is not None else None
    grid = (args.grid, args.radius) if args.grid is not None else None
    return handlers.run_gamma(read_spec_argument(args.b),
                              read_spec_argument(args.g),
                              z=z, grid=grid, exact=args.exact)


def cmd_zeros(args) -> Report:
    return handlers.run_zeros(read_spec_argument(args.b),
                              read_spec_argument(args.g),
                              radius=args.radius, max_zeros=args.max_zeros)


def cmd_classify(args) -> Report:
    radii = _parse_radii(args.radii) if args.radii else None
    return handlers.run_classify(
        read_spec_argument(args.b), read_spec_argument(args.g),
        space=args.space, tol=args.tol,
        defect_threshold=args.defect_threshold, max_zeros=args.max_zeros,
        radii=radii, points=args.points)


def cmd_decompose(args) -> Report:
    return handlers.run_decompose(
        read_spec_argument(args.b), read_spec_argument(args.g),
        read_spec_argument(args.f), points=args.grid, radius=args.radius,
        include_samples=args.samples)


def cmd_structure(args) -> Report:
    return handlers.run_structure(read_spec_argument(args.b),
                                  read_spec_argument(args.g))


def cmd_monomial(args) -> Report:
    return handlers.run_monomial(args.n, args.m)


def _add_json_flag(sp) -> None:
    sp.add_argument("--json", nargs="?", const="-", metavar="PATH",
                    help="write the JSON report (to stdout when no PATH)")


def _add_specs(sp, *, b=True, g=False, f=False) -> None:
    if b:
        sp.add_argument("--b", required=True, metavar="SPEC",
                        help="generator: JSON inline or a file path")
    if g:
        sp.add_argument("--g", required=True, metavar="SPEC",
                        help="second function: JSON inline or a file path")
    if f:
        sp.add_argument("--f", required=True, metavar="SPEC",
                        help="function to decompose: JSON inline or a path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bgamma",
        description=("Discriminant-quotient analysis of two-generator "
                     "function algebras on the unit disk"))
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fiber", help="preimage of B(z) under B")
    _add_specs(p)
    p.add_argument("--z", required=True, metavar="RE,IM")
    _add_json_flag(p)
    p.set_defaults(run=cmd_fiber)

    p = sub.add_parser("gamma", help="evaluate gamma at a point or grid")
    _add_specs(p, g=True)
    p.add_argument("--z", metavar="RE,IM")
    p.add_argument("--grid", type=int, metavar="N",
                   help="N x N polar grid, CSV output")
    p.add_argument("--radius", type=float, default=0.95,
                   help="outer radius of the polar grid (default 0.95)")
    p.add_argument("--exact", action="store_true",
                   help="also print the rational form's coefficient lists")
    _add_json_flag(p)
    p.set_defaults(run=cmd_gamma)

    p = sub.add_parser("zeros", help="locate the zeros of gamma in the disk")
    _add_specs(p, g=True)
    p.add_argument("--radius", type=float, default=0.999)
    p.add_argument("--max-zeros", type=int, default=64)
    _add_json_flag(p)
    p.set_defaults(run=cmd_zeros)

    p = sub.add_parser("classify",
                       help="closure verdict for the algebra generated by "
                            "B and g")
    _add_specs(p, g=True)
    p.add_argument("--space", choices=("h2", "disk-algebra"), default="h2")
    p.add_argument("--tol", type=float,
                   help="zero-certification tolerance override")
    p.add_argument("--defect-threshold", type=float)
    p.add_argument("--max-zeros", type=int)
    p.add_argument("--radii", metavar="R1,R2,...",
                   help="defect-table radii override")
    p.add_argument("--points", type=int,
                   help="defect circle-grid points override")
    _add_json_flag(p)
    p.set_defaults(run=cmd_classify)

    p = sub.add_parser("decompose",
                       help="verify f*gamma(g) = sum A_k g^k over a grid")
    _add_specs(p, g=True, f=True)
    p.add_argument("--grid", type=int, default=50, metavar="N",
                   help="number of sample points (default 50)")
    p.add_argument("--radius", type=float, default=0.75)
    p.add_argument("--samples", action="store_true",
                   help="dump per-sample coefficients")
    _add_json_flag(p)
    p.set_defaults(run=cmd_decompose)

    p = sub.add_parser("structure",
                       help="fiber partition when gamma vanishes identically")
    _add_specs(p, g=True)
    _add_json_flag(p)
    p.set_defaults(run=cmd_structure)

    p = sub.add_parser("monomial",
                       help="zero count and codimension for B=z^n, g=z^m")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    _add_json_flag(p)
    p.set_defaults(run=cmd_monomial)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = args.run(args)
    except SpecParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotRational as exc:
        print(f"not rational: {exc}", file=sys.stderr)
        return EXIT_NOT_RATIONAL
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except BlaschkeGammaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    _emit(report, args)
    return EXIT_OK if report.status == "ok" else EXIT_INCONCLUSIVE


if __name__ == "__main__":
    sys.exit(main())
