"""Command-line front end: constants table, radius lookup, curve samples,
extremal coefficients, the Hankel-determinant scan, and the verification
suites.  Output is JSON by default (CSV for plotting) and is byte-stable for
fixed arguments: fields appear in fixed order at 12 significant digits.

Exit codes: 0 success, 2 verification failure, 3 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys

from . import checks, coefficients, curves, geometry
from .kernels import ACTIVE_BACKEND
from .radii import REFS, RadiusQuery, extremal_map, solve_radius
from .subordination import radius_sharpness

E = math.e


def _f(x):
    if x is None:
        return None
    return float(f"{float(x):.12g}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(3)


def _emit(rows: list[dict], fmt: str, stream) -> None:
    if fmt == "json":
        json.dump(rows, stream, indent=2)
        stream.write("\n")
        return
    if not rows:
        return
    writer = csv.DictWriter(stream, fieldnames=list(rows[0].keys()))
    writer.writeheader()
    for row in rows:
        writer.writerow(row)


CONSTANT_ROWS = [
    ("convexity-of-p", {}),
    ("convex-alpha", {"alpha": 0.0}),
    ("convexity-numeric", {}),
    ("F-class", {"n": 1}),
    ("CSn-alpha", {"n": 1, "alpha": 0.0}),
    ("Mn-beta", {"n": 1, "beta": 2.0}),
    ("SL-radius", {}),
    ("SRL-radius", {}),
    ("Se-radius", {}),
    ("SC-radius", {}),
    ("Ss-radius", {}),
    ("Delta-radius", {}),
    ("F1-zero", {"n": 1}),
    ("F1-half", {"n": 1}),
    ("F2", {"n": 1}),
    ("F3", {"n": 1}),
    ("S-star-into", {}),
]


def cmd_constants(args) -> int:
    rows = []
    for name, params in CONSTANT_ROWS:
        res = solve_radius(RadiusQuery(name, params))
        rows.append({
            "name": name,
            "params": json.dumps(params, sort_keys=True),
            "value": _f(res.value),
            "residual": _f(res.residual),
            "closed_form": _f(res.closed_form),
            "ref": REFS[name],
        })
    fb = geometry.function_bounds()
    pt = geometry.parabola_threshold()
    extra = [
        ("min-re", fb.min_re, "minimum of 1 + e^{cos t} cos(t + sin t)"),
        ("max-im", fb.max_im, "maximum of e^{cos t} sin(t + sin t)"),
        ("max-arg-ratio", fb.max_arg / (math.pi / 2.0), "max |arg w| over the region, over pi/2"),
        ("parabola-b", pt.b, "smallest parabolic-region parameter containing the region"),
        ("ellipse-k", E - 1.0, "smallest conic parameter whose region fits inside"),
        ("covering", math.exp(1.0 / E - 1.0), "radius of the disk covered by every class member"),
        ("modulus-sup", math.exp(E - 1.0), "supremum of |f| over the class"),
        ("inscribed-center", geometry.INNER_BRANCH_POINT, "centre of the largest inscribed disk"),
        ("inscribed-radius", geometry.inner_disk(geometry.INNER_BRANCH_POINT).radius,
         "radius of the largest inscribed disk"),
        ("circumscribed-center", geometry.OUTER_BRANCH_POINT, "centre of the smallest circumscribed disk"),
        ("circumscribed-radius", geometry.outer_disk(geometry.OUTER_BRANCH_POINT).radius,
         "radius of the smallest circumscribed disk"),
    ]
    for name, value, ref in extra:
        rows.append({"name": name, "params": "{}", "value": _f(value),
                     "residual": None, "closed_form": None, "ref": ref})
    _emit(rows, args.format, sys.stdout)
    return 0


def cmd_radius(args) -> int:
    params = {}
    for key in ("alpha", "beta", "gamma", "n", "A", "B"):
        val = getattr(args, key)
        if val is not None:
            params[key] = val
    query = RadiusQuery(args.name, params)
    res = solve_radius(query)
    sharp = None
    if extremal_map(args.name, params) is not None:
        rep = radius_sharpness(query)
        sharp = bool(rep.contact_ok and rep.violation_ok)
    row = {
        "name": args.name,
        "params": json.dumps(params, sort_keys=True),
        "value": _f(res.value),
        "residual": _f(res.residual),
        "closed_form": _f(res.closed_form),
        "saturated": res.saturated,
        "sharp": sharp,
        "ref": REFS[args.name],
    }
    _emit([row], args.format, sys.stdout)
    return 0


def cmd_curve(args) -> int:
    t, w = curves.curve_points(args.name, args.samples)
    rows = [{"t": _f(ti), "re": _f(wi.real), "im": _f(wi.imag)} for ti, wi in zip(t, w)]
    _emit(rows, args.format, sys.stdout)
    return 0


def cmd_coeffs(args) -> int:
    fold = {"f1": 1, "f2": 2, "f3": 3}[args.function]
    series = coefficients.extremal_coeffs(fold, args.order)
    rows = [{"k": k, "re": _f(c.real), "im": _f(c.imag)}
            for k, c in enumerate(series.coeffs)]
    _emit(rows, args.format, sys.stdout)
    return 0


def cmd_hankel_bound(args) -> int:
    rep = coefficients.h3_upper_bound(grid=args.grid, refine_tol=args.tol)
    row = {
        "bound": _f(rep.bound),
        "scan_max": _f(rep.interior_value),
        "scan_location_p": _f(rep.interior_location[0]),
        "scan_location_x": _f(rep.interior_location[1]),
        "edge_x0_max": _f(rep.g1_max),
        "edge_x0_argmax": _f(rep.g1_argmax),
        "edge_x1_max": _f(rep.g2_max),
        "edge_x1_argmax": _f(rep.g2_argmax),
        "case_p0_max": _f(rep.g3_max),
        "case_p0_argmax": _f(rep.g3_argmax),
        "triangle_bound": _f(coefficients.h3_triangle_bound()),
    }
    _emit([row], args.format, sys.stdout)
    return 0


def cmd_verify(args) -> int:
    report = checks.run_suite(args.suite, args.seed)
    report["backend"] = ACTIVE_BACKEND
    for c in report["checks"]:
        c["margin"] = _f(c["margin"])
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0 if report["all_pass"] else 2


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cardioidstar",
                     description="constants, curves and verification for the "
                                 "cardioid starlike-function toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constants", help="emit the constant catalog")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("radius", help="solve one radius catalog entry")
    p.add_argument("name", choices=sorted(REFS))
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--gamma", type=float)
    p.add_argument("--n", type=int)
    p.add_argument("--A", type=float)
    p.add_argument("--B", type=float)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_radius)

    p = sub.add_parser("curve", help="sample a comparison curve")
    p.add_argument("name", choices=curves.CURVE_IDS)
    p.add_argument("--samples", type=int, default=256)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("coeffs", help="extremal map Taylor coefficients")
    p.add_argument("--function", choices=("f1", "f2", "f3"), default="f1")
    p.add_argument("--order", type=int, default=16)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("hankel-bound", help="rectangle scan for the third Hankel bound")
    p.add_argument("--grid", type=int, default=128)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_hankel_bound)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=("geometry", "radii", "coefficients", "all"),
                   default="all")
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
