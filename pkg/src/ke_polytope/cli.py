"""Command-line front end: ``ke-polytope list|check|figure|verify|export``.

Exit codes: 0 success (and every checked case is KE), 1 runtime or input
error, 2 some checked case fails the criterion (``check``) or the oracle
disagrees (``verify``), 64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import __version__
from .casedb import builtin_cases, case_to_json, dump_case, get_case, load_case
from .criterion import Verdict, verdict
from .dhmeasure import barycenter, volume
from .errors import KEPolytopeError
from .figure import render_svg
from .oracle import MIN_SAMPLES, mc_moments
from .qfield import quad_to_json

EXIT_OK, EXIT_ERROR, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ke-polytope", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def selector(sp, allow_all=True):
        sp.add_argument("case", nargs="?", type=int, help="built-in case id (1-6)")
        if allow_all:
            sp.add_argument("--all", action="store_true", help="every built-in case")
        sp.add_argument("--case-file", type=Path, metavar="PATH", help="JSON case file")

    sp = sub.add_parser("list", help="list the built-in cases")
    sp.add_argument("--format", choices=("table", "json", "csv"), default="table")

    sp = sub.add_parser("check", help="run the full pipeline and print the verdict")
    selector(sp)
    sp.add_argument("--format", choices=("table", "json", "csv"), default="table")

    sp = sub.add_parser("figure", help="write an SVG drawing of a moment polytope")
    selector(sp, allow_all=False)
    sp.add_argument("--out", type=Path, metavar="PATH")

    sp = sub.add_parser("verify", help="Monte-Carlo cross-check of volumes and barycenters")
    selector(sp)
    sp.add_argument("--samples", type=int, default=10**6)
    sp.add_argument("--seed", type=int, default=42)

    sp = sub.add_parser("export", help="write case files for built-in cases")
    selector(sp)
    sp.add_argument("--out", type=Path, metavar="PATH",
                    help="output file (one case) or directory (--all); stdout if omitted")
    return p


def _select(args, default_all: bool = False):
    chosen = sum(x is not None and x is not False
                 for x in (args.case, getattr(args, "all", False), args.case_file))
    if chosen > 1:
        raise UsageError("give exactly one of CASE, --all, --case-file")
    if args.case_file is not None:
        return [load_case(args.case_file)]
    if getattr(args, "all", False) or (chosen == 0 and default_all):
        return builtin_cases()
    if args.case is None:
        raise UsageError("no case selected (give CASE, --all or --case-file)")
    try:
        return [get_case(args.case)]
    except KeyError as exc:
        raise UsageError(f"unknown case {args.case}; built-in cases are 1-6") from exc


def _vec(v):
    return [quad_to_json(v.x), quad_to_json(v.y)]


def verdict_to_json(case, v: Verdict) -> dict:
    entry = {
        "id": v.case_id,
        "name": case.name,
        "vertices": [_vec(p) for p in v.polytope_vertices],
        "volume": quad_to_json(v.volume),
        "barycenter": _vec(v.barycenter),
        "two_rho_theta": _vec(v.two_rho_theta),
        "cone_generators": [_vec(g) for g in v.cone_generators],
        "cone_coefficients": [quad_to_json(c) for c in v.cone_coefficients],
        "ke_exists": v.ke_exists,
        "approx": {
            "volume": float(v.volume),
            "barycenter": list(v.barycenter.to_float()),
            "cone_coefficients": [float(c) for c in v.cone_coefficients],
        },
    }
    if v.proportionality is not None:
        entry["proportionality"] = quad_to_json(v.proportionality)
    return entry


def build_report(cases) -> dict:
    entries = [verdict_to_json(c, verdict(c)) for c in cases]
    return {
        "version": __version__,
        "cases": entries,
        "all_ke": all(e["ke_exists"] for e in entries),
    }


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _table(rows, header) -> str:
    widths = [max(len(str(r[i])) for r in [header] + rows) for i in range(len(header))]
    lines = [header, ["-" * w for w in widths]] + rows
    return "".join("  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip() + "\n" for r in lines)


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cmd_list(args) -> int:
    header = ["id", "name", "dimension", "fano_index", "restricted_type", "multiplicity", "description"]
    rows = [[c.id, c.name, c.dimension, c.fano_index, c.restricted_type, c.multiplicity, c.description]
            for c in builtin_cases()]
    if args.format == "json":
        sys.stdout.write(_dumps([dict(zip(header, r)) for r in rows]))
    elif args.format == "csv":
        sys.stdout.write(_csv(rows, header))
    else:
        sys.stdout.write(_table(rows, header))
    return EXIT_OK


def _pair(v) -> str:
    return f'("{v.x}", "{v.y}")'


def cmd_check(args) -> int:
    cases = _select(args)
    if args.format == "json":
        report = build_report(cases)
        sys.stdout.write(_dumps(report))
        return EXIT_OK if report["all_ke"] else EXIT_NEGATIVE

    verdicts = [(c, verdict(c)) for c in cases]
    if args.format == "csv":
        header = ["id", "name", "volume", "barycenter_x", "barycenter_y",
                  "cone_s", "cone_t", "ke_exists", "proportionality"]
        rows = [[v.case_id, c.name, str(v.volume), str(v.barycenter.x), str(v.barycenter.y),
                 str(v.cone_coefficients[0]), str(v.cone_coefficients[1]), v.ke_exists,
                 "" if v.proportionality is None else str(v.proportionality)]
                for c, v in verdicts]
        sys.stdout.write(_csv(rows, header))
    else:
        for c, v in verdicts:
            print(f"case {v.case_id}: {c.name}")
            print(f"  vertices        {', '.join(_pair(p) for p in v.polytope_vertices)}")
            print(f"  volume          {v.volume}  (~{float(v.volume):.6g})")
            print(f"  barycenter      {_pair(v.barycenter)}")
            print(f"  2rho_theta      {_pair(v.two_rho_theta)}")
            s, t = v.cone_coefficients
            print(f"  cone coeffs     s = {s}, t = {t}")
            if v.proportionality is not None:
                print(f"  barycenter      = {v.proportionality} x 2rho_theta")
            print(f"  verdict         {'KE' if v.ke_exists else 'not KE'}")
    return EXIT_OK if all(v.ke_exists for _, v in verdicts) else EXIT_NEGATIVE


def cmd_figure(args) -> int:
    (case,) = _select(args)
    svg = render_svg(case, verdict(case))
    if args.out is None:
        sys.stdout.write(svg)
    else:
        args.out.write_text(svg, encoding="utf-8")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.samples < MIN_SAMPLES:
        raise UsageError(f"--samples must be at least {MIN_SAMPLES}")
    cases = _select(args, default_all=True)
    header = ["case", "quantity", "exact", "monte_carlo", "stderr", "rel_err", "z"]
    rows, ok = [], True
    for c in cases:
        estimates = mc_moments(c, args.samples, args.seed)
        b = barycenter(c)
        for label, exact, est in zip(("volume", "bar_x", "bar_y"), (volume(c), b.x, b.y), estimates):
            e = float(exact)
            err = abs(est.value - e)
            z = err / est.stderr if est.stderr > 0 else (0.0 if err == 0 else float("inf"))
            ok &= z <= 3.0
            rows.append([c.id, label, f"{e:.10g}", f"{est.value:.10g}", f"{est.stderr:.4g}",
                         f"{err / abs(e):.3e}", f"{z:.3f}"])
    sys.stdout.write(f"samples={args.samples} seed={args.seed}\n")
    sys.stdout.write(_table(rows, header))
    sys.stdout.write("all estimates within 3 stderr\n" if ok else "some estimate outside 3 stderr\n")
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_export(args) -> int:
    cases = _select(args)
    if len(cases) == 1 and (args.out is None or not args.out.is_dir()):
        if args.out is None:
            sys.stdout.write(_dumps(case_to_json(cases[0])))
        else:
            dump_case(cases[0], args.out)
        return EXIT_OK
    if args.out is None:
        sys.stdout.write(_dumps([case_to_json(c) for c in cases]))
        return EXIT_OK
    args.out.mkdir(parents=True, exist_ok=True)
    for c in cases:
        dump_case(c, args.out / f"case{c.id}.json")
    return EXIT_OK


COMMANDS = {
    "list": cmd_list,
    "check": cmd_check,
    "figure": cmd_figure,
    "verify": cmd_verify,
    "export": cmd_export,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"ke-polytope: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (KEPolytopeError, OSError) as exc:
        print(f"ke-polytope: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
