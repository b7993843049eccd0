"""Command-line interface: one verb per concept.

Subcommands: nc (count/enum/stats), cumulants, convolve, clt, poisson-limit,
density, transforms, verify.  Outputs are byte-deterministic for fixed flags:
rationals print as p/q, floats as their shortest round-trip decimal, CSV uses
LF endings, and randomized verification runs from a fixed seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import verify as verify_mod
from .convolution import ScalingSpec, boolean_convolve, cfree_convolve, free_convolve, scaled_power
from .cumulants import (
    CFreeCumulantSequence,
    FreeCumulantSequence,
    MeasurePair,
    MomentSequence,
    cfree_cumulants_from_moments,
    free_cumulants_from_moments,
    moments_from_cfree_cumulants,
    moments_from_free_cumulants,
)
from .limit_laws import (
    gaussian_cauchy_evaluator,
    gaussian_limit_measure,
    gaussian_limit_moments,
    poisson_cauchy_evaluator,
    poisson_limit_measure,
    poisson_limit_moments,
)
from .partitions import catalan, classify, count_a, count_s, count_t, enumerate_nc, enumerate_nc2
from .series import (
    CauchyEvaluator,
    abcd_from_pair,
    gaussian_cf_levels,
    poisson_cf_levels,
    stieltjes_density,
)

MAX_GRID_POINTS = 10**6


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str, text: str):
    if path == "-" or path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _parse_grid(spec: str):
    parts = spec.split(":")
    if len(parts) != 3:
        raise SystemExit("--grid must be lo:hi:points")
    lo, hi, points = float(parts[0]), float(parts[1]), int(parts[2])
    if points < 1 or points > MAX_GRID_POINTS:
        raise SystemExit("points must be in 1..%d" % MAX_GRID_POINTS)
    if hi <= lo:
        raise SystemExit("grid needs hi > lo")
    return lo, hi, points


def _grid_values(lo, hi, points):
    if points == 1:
        return [lo]
    step = (hi - lo) / (points - 1)
    return [lo + i * step for i in range(points)]


def cmd_nc(args) -> int:
    n = args.n
    if args.action == "count":
        value = catalan(n // 2) if args.pairs else catalan(n)
        print(value)
        return 0
    if args.action == "enum":
        parts = enumerate_nc2(n) if args.pairs else enumerate_nc(n)
        if args.format == "json":
            print(json.dumps([[list(b) for b in p.blocks] for p in parts]))
        else:
            for p in parts:
                print("|".join(",".join(str(x) for x in b) for b in p.blocks))
        return 0
    # stats: inner/outer census from the recursions
    if args.pairs:
        m = n // 2
        rows = [{"inner": k, "count": count_a(m, k)} for k in range(m + 1)]
    else:
        rows = []
        for k in range(1, n + 1):
            for l in range(0, n - k + 1):
                cnt = count_s(n, k, l)
                if cnt:
                    rows.append({"outer": k, "inner": l, "count": cnt})
        rows.append({"blocks_total": {str(k): count_t(n, k) for k in range(1, n + 1)}})
    if args.format == "json":
        print(json.dumps(rows))
    else:
        for row in rows:
            print(json.dumps(row, sort_keys=True))
    return 0


def cmd_cumulants(args) -> int:
    text = _read_text(args.infile)
    if args.invert:
        if args.kind == "free":
            out = moments_from_free_cumulants(FreeCumulantSequence.from_json(text)).to_json()
        elif args.kind == "boolean":
            R = CFreeCumulantSequence.from_json(text)
            nu = MomentSequence.point_mass(0, R.order)
            out = moments_from_cfree_cumulants(R, nu).to_json()
        else:
            data = json.loads(text)
            R = CFreeCumulantSequence([Fraction(s) for s in data["cumulants"]["cumulants"]])
            nu = MomentSequence([Fraction(s) for s in data["nu"]["moments"]])
            out = moments_from_cfree_cumulants(R, nu).to_json()
    else:
        if args.kind == "free":
            out = free_cumulants_from_moments(MomentSequence.from_json(text)).to_json()
        elif args.kind == "boolean":
            mu = MomentSequence.from_json(text)
            out = cfree_cumulants_from_moments(MeasurePair.with_delta0(mu)).to_json()
        else:
            out = cfree_cumulants_from_moments(MeasurePair.from_json(text)).to_json()
    _write_text(args.out, out + "\n")
    return 0


def cmd_convolve(args) -> int:
    t1, t2 = _read_text(args.in1), _read_text(args.in2)
    if args.kind == "cfree":
        out = cfree_convolve(MeasurePair.from_json(t1), MeasurePair.from_json(t2)).to_json()
    elif args.kind == "free":
        out = free_convolve(MomentSequence.from_json(t1), MomentSequence.from_json(t2)).to_json()
    else:
        out = boolean_convolve(MomentSequence.from_json(t1), MomentSequence.from_json(t2)).to_json()
    _write_text(args.out, out + "\n")
    return 0


def _limit_rows(pair, spec, limit_fn, order):
    result = scaled_power(pair, spec)
    rows = []
    for component, seq in (("mu", result.mu), ("nu", result.nu)):
        alpha_like = component == "mu"
        for n in range(1, order + 1):
            limit = limit_fn(n, alpha_like)
            err = abs(float(seq[n] - limit))
            rows.append(
                {
                    "component": component,
                    "n": n,
                    "prelimit": str(seq[n]),
                    "limit": str(limit),
                    "abs_error": repr(err),
                }
            )
    return rows


def _print_rows(rows, fmt):
    if fmt == "json":
        print(json.dumps(rows))
    else:
        for row in rows:
            print(
                "%s n=%d prelimit=%s limit=%s abs_error=%s"
                % (row["component"], row["n"], row["prelimit"], row["limit"], row["abs_error"])
            )


def cmd_clt(args) -> int:
    alpha, beta = Fraction(args.alpha), Fraction(args.beta)
    mu = MomentSequence.symmetric_two_point(alpha, args.order)
    nu = MomentSequence.symmetric_two_point(beta, args.order)
    spec = ScalingSpec.clt(args.copies)

    def limit_fn(n, alpha_like):
        return gaussian_limit_moments(alpha if alpha_like else beta, beta, n)

    _print_rows(_limit_rows(MeasurePair(mu, nu), spec, limit_fn, args.order), args.format)
    return 0


def cmd_poisson_limit(args) -> int:
    alpha, beta = Fraction(args.alpha), Fraction(args.beta)
    N = args.copies
    mu = MomentSequence([Fraction(1)] + [alpha / N] * args.order)
    nu = MomentSequence([Fraction(1)] + [beta / N] * args.order)

    def limit_fn(n, alpha_like):
        return poisson_limit_moments(alpha if alpha_like else beta, beta, n)

    _print_rows(_limit_rows(MeasurePair(mu, nu), ScalingSpec(N), limit_fn, args.order), args.format)
    return 0


def _density_evaluator(args, measure):
    if args.method == "closed-form":
        return measure.density_at
    if args.method == "inversion":
        G = (
            gaussian_cauchy_evaluator(args.alpha, args.beta)
            if args.family == "gaussian"
            else poisson_cauchy_evaluator(args.alpha, args.beta)
        )
    else:  # cf-inversion
        levels = (
            gaussian_cf_levels(args.alpha, args.beta, args.depth)
            if args.family == "gaussian"
            else poisson_cf_levels(args.alpha, args.beta, args.depth)
        )
        G = CauchyEvaluator.continued_fraction(levels)
    return lambda t: stieltjes_density(G, t, args.eps)


def cmd_density(args) -> int:
    if args.family == "gaussian":
        measure = gaussian_limit_measure(args.alpha, args.beta)
    else:
        measure = poisson_limit_measure(args.alpha, args.beta)
    lo, hi, points = _parse_grid(args.grid)
    evaluate = _density_evaluator(args, measure)
    ts = _grid_values(lo, hi, points)
    if args.format == "json":
        payload = {"t": [repr(t) for t in ts], "density": [repr(evaluate(t)) for t in ts]}
        _write_text(args.out, json.dumps(payload, sort_keys=True) + "\n")
    else:
        lines = ["t,density"]
        lines.extend("%s,%s" % (repr(t), repr(evaluate(t))) for t in ts)
        _write_text(args.out, "\n".join(lines) + "\n")
    sidecar = {
        "atoms": [{"location": loc, "weight": w} for loc, w in measure.atoms]
    }
    sidecar_path = os.path.splitext(args.out)[0] + ".atoms.json"
    _write_text(sidecar_path, json.dumps(sidecar, sort_keys=True) + "\n")
    return 0


def cmd_transforms(args) -> int:
    pair = MeasurePair.from_json(_read_text(args.infile))
    if args.order is not None:
        pair = MeasurePair(pair.mu.truncated(args.order), pair.nu.truncated(args.order))
    A, B, C, D = abcd_from_pair(pair)
    if args.format == "json":
        payload = {
            name: [str(c) for c in ts.coeffs]
            for name, ts in (("A", A), ("B", B), ("C", C), ("D", D))
        }
        payload["order"] = pair.order
        _write_text(args.out, json.dumps(payload, sort_keys=True) + "\n")
    else:
        lines = ["n,A,B,C,D"]
        for n in range(pair.order + 1):
            lines.append("%d,%s,%s,%s,%s" % (n, A[n], B[n], C[n], D[n]))
        _write_text(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_verify(args) -> int:
    results = verify_mod.run(args.selector)
    if args.format == "json":
        print(
            json.dumps(
                [
                    {"group": r.group, "name": r.name, "passed": r.passed, "detail": r.detail}
                    for r in results
                ]
            )
        )
    else:
        for r in results:
            print(r.line())
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cfree", description="c-free probability workbench"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nc", help="non-crossing partition counts, enumeration, statistics")
    p.add_argument("action", choices=["count", "enum", "stats"])
    p.add_argument("--n", type=int, required=True, help="ground-set size")
    p.add_argument("--pairs", action="store_true", help="pair partitions only")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_nc)

    p = sub.add_parser("cumulants", help="moment <-> cumulant transforms")
    p.add_argument("--kind", choices=["free", "cfree", "boolean"], required=True)
    p.add_argument("--invert", action="store_true", help="cumulants -> moments")
    p.add_argument("--in", dest="infile", default="-", help="input JSON path or -")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_cumulants)

    p = sub.add_parser("convolve", help="convolve two inputs")
    p.add_argument("--kind", choices=["cfree", "free", "boolean"], default="cfree")
    p.add_argument("--in1", required=True)
    p.add_argument("--in2", required=True)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_convolve)

    p = sub.add_parser("clt", help="central-limit experiment: prelimit vs limit moments")
    p.add_argument("--alpha", default="1")
    p.add_argument("--beta", default="1")
    p.add_argument("--copies", type=int, default=100)
    p.add_argument("--order", type=int, default=6)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_clt)

    p = sub.add_parser("poisson-limit", help="Poisson-limit experiment: prelimit vs limit moments")
    p.add_argument("--alpha", default="1")
    p.add_argument("--beta", default="1")
    p.add_argument("--copies", type=int, default=200)
    p.add_argument("--order", type=int, default=6)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_poisson_limit)

    p = sub.add_parser("density", help="emit a density grid plus atom sidecar")
    p.add_argument("family", choices=["gaussian", "poisson"])
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--grid", required=True, help="lo:hi:points")
    p.add_argument("--out", required=True)
    p.add_argument(
        "--method", choices=["closed-form", "inversion", "cf-inversion"], default="closed-form"
    )
    p.add_argument("--eps", type=float, default=1e-4, help="Stieltjes inversion height")
    p.add_argument(
        "--depth",
        type=int,
        default=64,
        help="continued-fraction depth; cf-inversion needs depth >~ support width / eps",
    )
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("transforms", help="print the A,B,C,D series of a pair")
    p.add_argument("--in", dest="infile", default="-", help="pair JSON path or -")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--out", default="-")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_transforms)

    p = sub.add_parser("verify", help="run the invariant suite")
    p.add_argument(
        "selector",
        nargs="?",
        default="all",
        choices=["all", "partitions", "cumulants", "oracle", "series", "laws", "limits"],
    )
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
