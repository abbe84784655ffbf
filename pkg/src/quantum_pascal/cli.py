"""Command-line interface: pyramid, triangle, spectrum, bounds, verify.

Exit codes: 0 ok, 1 verification failure, 2 argument error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import bounds, combinatorics as cb, render, spectra
from .operators import MAX_DIAGONAL_N
from .verify import run_suite

MAX_N = 64


class UsageError(Exception):
    pass


def _output_args(p: argparse.ArgumentParser, formats=("csv", "json")) -> None:
    p.add_argument("--format", choices=formats, default="csv")
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.add_argument("--precision", type=int, default=12, help="significant digits for floats")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quantum-pascal", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pyramid", help="slice of the quantum Pascal pyramid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--reduced", action="store_true", help="coefficients of z_N^q (drop the C(N,q) factor)")
    _output_args(p)

    p = sub.add_parser("triangle", help="rows N = q..N_max of the T^(q) triangle")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--rows", type=int, required=True, help="largest N to emit")
    p.add_argument("--scaled", action="store_true", help="emit A_k^(q) = C(N,q) a_k^(q)")
    _output_args(p)

    p = sub.add_parser("spectrum", help="multiplet spectrum and optional envelope")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, default=0)
    p.add_argument("--linewidth", type=float, default=0.05, help="in units of J_IS")
    p.add_argument("--points", type=int, default=spectra.DEFAULT_POINTS)
    p.add_argument("--span", type=float, default=None, help="half-width of the grid (default N/2 + 1)")
    p.add_argument("--envelope", action="store_true")
    p.add_argument("--j-hz", type=float, default=None, help="J_IS in Hz, for axis labels only")
    _output_args(p, render.FORMATS)

    p = sub.add_parser("bounds", help="maximum I_z -> S_z enhancement")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k-gamma", type=float, default=1.0)
    _output_args(p)

    p = sub.add_parser("verify", help="run the invariant suite")
    p.add_argument("--max-n", "--n", dest="max_n", type=int, default=12)
    p.add_argument("--deep", action="store_true", help="larger dense and triangle caps")
    p.add_argument("--golden", default=None, help="directory of golden fixtures to check against")
    p.add_argument("--out", default=None)
    return parser


def cmd_pyramid(args) -> str:
    if not 1 <= args.n <= MAX_N:
        raise UsageError(f"--n must lie in 1..{MAX_N}")
    sl = cb.pyramid_slice(args.n, reduced=args.reduced)
    return render.pyramid_json(sl) if args.format == "json" else render.pyramid_csv(sl)


def cmd_triangle(args) -> str:
    if args.q < 0 or not args.q <= args.rows <= MAX_N:
        raise UsageError(f"need 0 <= --q <= --rows <= {MAX_N}")
    rows = [cb.triangle_row(N, args.q, scaled=args.scaled) for N in range(max(args.q, 1), args.rows + 1)]
    return render.triangle_json(rows) if args.format == "json" else render.triangle_csv(rows)


def cmd_spectrum(args) -> str:
    if not 1 <= args.n <= MAX_N or not 0 <= args.q <= args.n:
        raise UsageError("need 1 <= --n <= 64 and 0 <= --q <= --n")
    if not args.linewidth > 0:
        raise UsageError("--linewidth must be positive")
    if args.points < 2 or (args.span is not None and not args.span > 0):
        raise UsageError("need --points >= 2 and --span > 0")
    grid = spectra.Grid(args.points, args.span)
    comb = spectra.multiplet_spectrum(args.n, args.q, args.linewidth, grid)
    env = report = None
    if args.envelope:
        if args.q == 0:
            env = spectra.gaussian_envelope(args.n, args.linewidth, comb.nu)
        else:
            env = spectra.hermite_gauss_envelope(args.n, args.q, args.linewidth, comb.nu)
        report = spectra.envelope_error(comb, env)
    if args.format == "svg":
        return render.spectrum_svg(comb, env, j_hz=args.j_hz)
    if args.format == "json":
        return render.spectrum_json(comb, env, report, args.precision, args.j_hz)
    return render.spectrum_csv(comb, env, report, args.precision, args.j_hz)


def cmd_bounds(args) -> str:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    if not args.k_gamma > 0:
        raise UsageError("--k-gamma must be positive")
    report = bounds.max_enhancement(args.n, args.k_gamma)
    return render.bounds_json(report) if args.format == "json" else render.bounds_csv(report)


def cmd_verify(args) -> tuple[str, int]:
    if not 1 <= args.max_n <= MAX_DIAGONAL_N:
        raise UsageError(f"--max-n must lie in 1..{MAX_DIAGONAL_N}")
    suite = run_suite(args.max_n, deep=args.deep, golden=args.golden)
    payload = {"passed": suite.passed, "checks": suite.checks, "failures": suite.failures}
    return json.dumps(payload, indent=1, default=str) + "\n", 0 if suite.passed else 1


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            text, code = cmd_verify(args)
        else:
            handler = {"pyramid": cmd_pyramid, "triangle": cmd_triangle,
                       "spectrum": cmd_spectrum, "bounds": cmd_bounds}[args.command]
            text, code = handler(args), 0
    except UsageError as exc:
        print(f"quantum-pascal {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"quantum-pascal {args.command}: error: {exc}", file=sys.stderr)
        return 2
    render.write_output(text, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
