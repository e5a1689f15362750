"""Command-line front end.

Exit codes: 0 ok, 1 verification failure, 2 usage or parse error,
3 numerical failure (non-convergence, zero on contour, ...).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import gallery, verify
from .errors import (ConvergenceFailure, DegenerateResult, DomainError,
                     HarmonicZerosError, IndeterminateValue, IsolationFailure,
                     NotAZero, OnCurveZero, PoleEvaluation, RefinementExhausted,
                     SingularPoint, ViolationSuspected)
from .harmonic import RationalHarmonicFunction, ZeroConfig
from .mobius import MobiusTransform, co_conjugate
from .portrait import PortraitConfig, render
from .rational import format_rational, parse_complex, parse_rational
from .topology import Circle, argument_principle_check, winding

SCHEMA_VERSION = 1

_NUMERICAL_ERRORS = (ConvergenceFailure, DegenerateResult, IndeterminateValue,
                     IsolationFailure, NotAZero, OnCurveZero, PoleEvaluation,
                     RefinementExhausted, SingularPoint, ViolationSuspected)


def _rational_arg(text: str):
    if text.startswith("@"):
        text = Path(text[1:]).read_text(encoding="utf-8")
    return parse_rational(text)


def _complex_list(text: str, expected: int) -> list[complex]:
    toks = text.split(",")
    if len(toks) != expected:
        raise DomainError(f"expected {expected} comma-separated values, got {len(toks)}")
    return [parse_complex(t) for t in toks]


def _zero_table(zeros) -> str:
    lines = [f"{'location':>28}  {'|f(z)|':>10}  {'|r\'(z)|':>10}  {'sense':<10}  index"]
    for z in zeros:
        idx = "-" if z.index is None else f"{z.index:+d}"
        loc = f"{z.location.real:+.12f}{z.location.imag:+.12f}i"
        lines.append(f"{loc:>28}  {z.residual:>10.2e}  "
                     f"{z.derivative_modulus:>10.6f}  {z.sense:<10}  {idx}")
    return "\n".join(lines)


def _build_function(args) -> RationalHarmonicFunction:
    if getattr(args, "rational", None):
        return RationalHarmonicFunction(_rational_arg(args.rational))
    if getattr(args, "family", None):
        if args.n is None or args.a is None:
            raise DomainError("--family needs --n and --a")
        if args.family == "mpw":
            return gallery.mpw(args.n, args.a)
        return gallery.rhie(args.n, args.a, args.eps if args.eps is not None else 0.0)
    raise DomainError("provide --rational or --family")


# -- subcommand handlers ---------------------------------------------------------


def _cmd_zeros(args) -> int:
    f = RationalHarmonicFunction(_rational_arg(args.rational))
    cfg = ZeroConfig(residual_tol=args.tol) if args.tol else ZeroConfig()
    zeros = f.find_zeros(cfg)
    if args.json:
        doc = {"schema": SCHEMA_VERSION,
               "rational": format_rational(f.rational),
               "degree": f.degree,
               "zeros": [z.to_json_dict() for z in zeros]}
        print(json.dumps(doc, indent=2))
    else:
        print(f"r = {format_rational(f.rational)}   (degree {f.degree})")
        print(f"{len(zeros)} zero(s)")
        if zeros:
            print(_zero_table(zeros))
    return 0


def _cmd_verify(args) -> int:
    if args.random:
        seed = args.seed if args.seed is not None else 0
        degrees = (args.degree,) if args.degree else (2, 3, 4)
        summary = verify.bound_property_run(seed, degrees=degrees,
                                            per_degree=args.random)
        if args.json:
            print(json.dumps({"schema": SCHEMA_VERSION,
                              "property_run": summary.to_json_dict()}, indent=2))
        else:
            print(f"seed {summary.seed}: {summary.instances} instances -> "
                  f"{summary.n_pass} pass, {summary.n_indeterminate} indeterminate, "
                  f"{summary.n_fail} fail, {summary.n_error} error")
        return 1 if (summary.n_fail or summary.n_error) else 0

    f = _build_function(args)
    if f.degree < 2:
        print("error: the zero-count bounds are stated for degree n >= 2; "
              f"this function has degree {f.degree}", file=sys.stderr)
        return 2
    c = verify.census(f)
    at_cap = c.total == 5 * (c.n - 1) or (c.deg_p > c.deg_q
                                          and c.total == 5 * (c.n - 1) - 1)
    regularity = verify.regularity_from_census(c) if at_cap else None
    if args.json:
        doc = {"schema": SCHEMA_VERSION, "census": c.to_json_dict()}
        if regularity is not None:
            doc["regularity"] = regularity.to_json_dict()
        print(json.dumps(doc, indent=2))
    else:
        print(f"degree n = {c.n}   deg p = {c.deg_p}   deg q = {c.deg_q}")
        print(f"sense-preserving    {c.n_plus:>3}   bound {c.bound_plus}")
        print(f"sense-reversing     {c.n_minus:>3}")
        print(f"reversing+singular  {c.n_minus + c.n_singular_flagged:>3}   "
              f"bound {c.bound_minus_zero}")
        print(f"singular flagged    {c.n_singular_flagged:>3}")
        print(f"total               {c.total:>3}   bound {c.bound_total}")
        print(f"verdict: {c.verdict}")
        if regularity is not None:
            print(f"{c.total}/{c.bound_total} zeros, at cap, "
                  f"{'regular' if regularity.regular else 'NOT regular'} "
                  f"(margin {regularity.margin:.3e})")
    return 1 if c.verdict == verify.VERDICT_FAIL else 0


def _cmd_winding(args) -> int:
    f = RationalHarmonicFunction(_rational_arg(args.rational))
    if args.center:
        x, y = (float(t) for t in args.center.split(","))
        circle = Circle(complex(x, y), args.radius)
        result = winding(f, circle)
        if args.json:
            print(json.dumps({"schema": SCHEMA_VERSION, "winding": result.value,
                              "samples_used": result.samples_used,
                              "max_step_phase": result.max_step_phase}, indent=2))
        else:
            print(f"winding = {result.value:+d}  "
                  f"(samples {result.samples_used}, "
                  f"max phase step {result.max_step_phase:.4f})")
        return 0
    report = argument_principle_check(f)
    if args.json:
        print(json.dumps({"schema": SCHEMA_VERSION,
                          "argument_principle": report.to_json_dict()}, indent=2))
    else:
        print(f"enclosing circle radius {report.circle.radius:g}: "
              f"winding = {report.winding:+d}, index sum = {report.sum_of_indices:+d}"
              f" -> {'consistent' if report.consistent else 'INCONSISTENT'}"
              if not report.indeterminate else
              f"winding = {report.winding:+d} (indeterminate: singular flags)")
    return 0


def _cmd_portrait(args) -> int:
    f = RationalHarmonicFunction(_rational_arg(args.rational))
    window = tuple(float(t) for t in args.window.split(","))
    if len(window) != 4:
        raise DomainError("--window needs x_min,x_max,y_min,y_max")
    try:
        w, h = (int(t) for t in args.resolution.lower().split("x"))
    except ValueError as exc:
        raise DomainError("--resolution must look like 400x400") from exc
    cfg = PortraitConfig(window=window, resolution=(w, h),
                         output_format=args.format,
                         brighten_factor=args.brighten,
                         marker_radius_px=args.marker_radius)
    zeros = [] if args.no_markers else f.find_zeros()
    data = render(f, zeros, cfg)
    Path(args.out).write_bytes(data)
    print(f"wrote {args.out} ({w}x{h} {args.format}, {len(zeros)} zero markers)")
    return 0


def _cmd_coconjugate(args) -> int:
    r = _rational_arg(args.rational)
    a, b, c, d = _complex_list(args.mobius, 4)
    transform = MobiusTransform(a, b, c, d)
    image = co_conjugate(r, transform)
    if args.print_spec:
        print(format_rational(image))
    else:
        print(f"input : {format_rational(r)}")
        print(f"output: {format_rational(image)}")
        print(f"degree {image.degree} (deg p = {image.p.degree}, "
              f"deg q = {image.q.degree})")
    return 0


def _cmd_sweep(args) -> int:
    a_lo, a_hi = (float(t) for t in args.a_range.split(":"))
    eps_range = None
    if args.eps_range:
        e_lo, e_hi = (float(t) for t in args.eps_range.split(":"))
        eps_range = (e_lo, e_hi)
    rows = gallery.sweep(args.family, args.n, (a_lo, a_hi), eps_range, args.step)
    text = gallery.sweep_csv_text(rows)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {args.out} ({len(rows)} rows)")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_gallery(args) -> int:
    if args.action == "list":
        for e in gallery.manifest():
            count = "unknown" if e.expected_zero_count is None else e.expected_zero_count
            print(f"{e.name:<18} zeros={count:<8} {e.provenance}")
        return 0
    e = gallery.entry(args.name)
    print(e.spec_text)
    return 0


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="harmonic-zeros",
        description="Zeros of rational harmonic functions r(z) - conj(z): "
                    "find, classify, verify bounds, and render phase portraits.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("zeros", help="find and classify all zeros")
    sp.add_argument("--rational", required=True,
                    help="'p: c0, c1, ... ; q: d0, ...' or @file")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--tol", type=float, default=None,
                    help="residual tolerance (default 1e-9)")
    sp.set_defaults(handler=_cmd_zeros)

    sp = sub.add_parser("verify", help="zero-count census against the sharp bounds")
    sp.add_argument("--rational")
    sp.add_argument("--family", choices=("mpw", "rhie"))
    sp.add_argument("--n", type=int)
    sp.add_argument("--a", type=float)
    sp.add_argument("--eps", type=float)
    sp.add_argument("--random", type=int, metavar="COUNT",
                    help="census COUNT random instances per degree instead")
    sp.add_argument("--degree", type=int, help="restrict --random to one degree")
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(handler=_cmd_verify)

    sp = sub.add_parser("winding", help="winding of f on a circle")
    sp.add_argument("--rational", required=True)
    sp.add_argument("--center", help="x,y (omit for the auto enclosing-circle check)")
    sp.add_argument("--radius", type=float)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(handler=_cmd_winding)

    sp = sub.add_parser("portrait", help="render a phase portrait")
    sp.add_argument("--rational", required=True)
    sp.add_argument("--window", required=True, help="x_min,x_max,y_min,y_max")
    sp.add_argument("--resolution", default="400x400")
    sp.add_argument("--out", required=True)
    sp.add_argument("--format", choices=("ppm", "png"), default="ppm")
    sp.add_argument("--brighten", type=float, default=0.35)
    sp.add_argument("--marker-radius", type=int, default=4)
    sp.add_argument("--no-markers", action="store_true")
    sp.set_defaults(handler=_cmd_portrait)

    sp = sub.add_parser("coconjugate",
                        help="co-conjugate conj(T) o r o T^-1 of a rational function")
    sp.add_argument("--rational", required=True)
    sp.add_argument("--mobius", required=True, help="a,b,c,d (complex literals)")
    sp.add_argument("--print-spec", action="store_true",
                    help="print only the resulting rational spec text")
    sp.set_defaults(handler=_cmd_coconjugate)

    sp = sub.add_parser("sweep", help="zero counts over a parameter grid")
    sp.add_argument("--family", required=True, choices=("mpw", "rhie"))
    sp.add_argument("--n", required=True, type=int)
    sp.add_argument("--a-range", required=True, help="lo:hi")
    sp.add_argument("--eps-range", help="lo:hi (rhie only)")
    sp.add_argument("--step", type=float, default=0.01)
    sp.add_argument("--out", help="CSV path (default stdout)")
    sp.set_defaults(handler=_cmd_sweep)

    sp = sub.add_parser("gallery", help="list packaged instances or dump one")
    sp.add_argument("action", choices=("list", "dump"))
    sp.add_argument("name", nargs="?")
    sp.set_defaults(handler=_cmd_gallery)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    if args.command == "gallery" and args.action == "dump" and not args.name:
        print("error: 'gallery dump' needs a name", file=sys.stderr)
        return 2
    try:
        return args.handler(args)
    except _NUMERICAL_ERRORS as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    except (DomainError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HarmonicZerosError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
