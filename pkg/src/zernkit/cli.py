"""Command-line interface: ``zernkit <command> [options]``.

Exit codes: 0 success, 2 usage error, 3 validation/domain error,
4 numerical convergence failure.
"""

import argparse
import csv
import json
import os
import sys

import numpy as np

from . import __version__
from .errors import ComputationError, ConvergenceError, DomainError, ValidationError
from .expansion import (evaluate, expansion_from_csv, expansion_from_json,
                        expansion_to_csv, expansion_to_json, fit, make_grid, sample)
from .indexing import StdIndex, ansi_to_std, convert_all, fringe_to_std, triple_to_std
from .output import RunManifest, rows_to_csv, rows_to_json, write_text
from .prufer import find_roots
from .quad import angular_nodes, disk_rule, integrate_disk, radial_rule
from .tables import TABLES
from .testfuncs import exact_integral, get_function
from .zernike import ZernikeTriple, radial_eval, radial_norm, zernike_eval

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VALIDATION = 3
EXIT_CONVERGENCE = 4


class UsageError(Exception):
    pass


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _emit(args, name, header, rows, params):
    """Write rows to --out-dir (CSV or JSON plus a manifest) or print them."""
    fmt = getattr(args, "format", "csv")
    text = rows_to_json(header, rows) if fmt == "json" else rows_to_csv(header, rows)
    out_dir = getattr(args, "out_dir", None)
    if out_dir is None:
        sys.stdout.write(text)
        return []
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, f"{name}.{fmt}")
    write_text(path, text)
    return [path]


def _manifest(args, command, params, outputs):
    out_dir = getattr(args, "out_dir", None)
    if out_dir is None or not outputs:
        return
    manifest = RunManifest(command=command, parameters=params, outputs=sorted(outputs))
    manifest.write(os.path.join(out_dir, f"{command}.manifest.json"))


# -- commands -----------------------------------------------------------------

def cmd_nodes(args):
    rule = radial_rule(args.m, args.k)
    params = {"m": args.m, "k": args.k}
    outputs = _emit(args, "radial", ("index", "r", "omega"),
                    [(i + 1, r, w) for i, (r, w) in enumerate(zip(rule.nodes, rule.weights))], params)
    outputs += _emit(args, "angular", ("index", "theta"),
                     [(j + 1, t) for j, t in enumerate(angular_nodes(2 * args.m))], params)
    _manifest(args, "nodes", params, outputs)


def _load_samples(path, grid):
    """Read (i, l, value) rows, 1-based radial and angular node numbers."""
    samples = np.full(grid.shape, np.nan)
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if [h.strip() for h in header[:3]] != ["i", "l", "value"]:
            raise ValidationError("sample file header must be i,l,value")
        for row in reader:
            if not row:
                continue
            i, l = int(row[0]) - 1, int(row[1]) - 1
            if not (0 <= i < grid.M and 0 <= l < grid.angular_count):
                raise ValidationError(f"sample index ({i + 1},{l + 1}) outside the grid")
            samples[i, l] = float(row[2])
    return samples


def cmd_integrate(args):
    rule = disk_rule(args.m, reduced=args.reduced)
    f = get_function(args.f)
    value = integrate_disk(f, rule)
    exact = exact_integral(args.f)
    row = [args.f, args.m, 2 * args.m, value]
    header = ["function", "m", "angular", "value"]
    if exact is not None:
        header += ["exact", "abs_error"]
        row += [exact, value - exact]
    params = {"f": args.f, "m": args.m, "reduced": args.reduced}
    outputs = _emit(args, "integral", tuple(header), [tuple(row)], params)
    _manifest(args, "integrate", params, outputs)


def cmd_fit(args):
    grid = make_grid(args.M)
    if args.samples:
        samples = _load_samples(args.samples, grid)
        source = args.samples
    elif args.f:
        samples = sample(get_function(args.f), grid)
        source = args.f
    else:
        raise UsageError("fit needs --f or --samples")
    e = fit(samples, grid)
    params = {"M": args.M, "source": source}
    text = expansion_to_json(e) if args.format == "json" else expansion_to_csv(e)
    outputs = []
    if args.out_dir is None:
        sys.stdout.write(text)
    else:
        os.makedirs(args.out_dir, exist_ok=True)
        path = os.path.join(args.out_dir, f"coefficients.{args.format}")
        write_text(path, text)
        outputs.append(path)
    _manifest(args, "fit", params, outputs)


def cmd_grid(args):
    grid = make_grid(args.M)
    rows = []
    for i, r in enumerate(grid.radial_nodes):
        for l, t in enumerate(grid.angular_nodes):
            rows.append((i + 1, l + 1, r, t))
    params = {"M": args.M}
    outputs = _emit(args, "grid", ("i", "l", "r", "theta"), rows, params)
    _manifest(args, "grid", params, outputs)


def cmd_eval(args):
    t = ZernikeTriple(args.N, args.n, args.parity)
    if args.coeffs:
        with open(args.coeffs) as fh:
            text = fh.read()
        e = expansion_from_json(text) if args.coeffs.endswith(".json") else expansion_from_csv(text)
        rows = [(args.r, args.theta, evaluate(e, args.r, args.theta))]
        header = ("r", "theta", "value")
    else:
        radial = radial_eval(t.N, t.n, 0, args.r)
        rows = [(t.N, t.n, t.parity, args.r, args.theta, radial, radial * radial_norm(t.N, t.n),
                 zernike_eval(t, args.r, args.theta))]
        header = ("N", "n", "parity", "r", "theta", "radial", "radial_normalized", "value")
    params = {"N": args.N, "n": args.n, "parity": args.parity, "r": args.r, "theta": args.theta}
    outputs = _emit(args, "eval", header, rows, params)
    _manifest(args, "eval", params, outputs)


def cmd_convert(args):
    if args.scheme == "std":
        if args.m is None:
            raise UsageError("--scheme std needs --n and --m")
        s = StdIndex(args.n, args.m)
    elif args.scheme == "ansi":
        s = StdIndex(args.n, args.m) if args.index is None else ansi_to_std(args.index)
    elif args.scheme == "fringe":
        s = StdIndex(args.n, args.m) if args.index is None else fringe_to_std(args.index)
    else:
        if args.N is None:
            raise UsageError("--scheme triple needs --N and --n")
        s = triple_to_std(ZernikeTriple(args.N, args.n, args.parity))
    sys.stdout.write(json.dumps(convert_all(s), indent=2, sort_keys=True) + "\n")


def cmd_roots(args):
    result = find_roots(args.n, args.k)
    rows = [(i + 1, x, res) for i, (x, res) in enumerate(zip(result.roots, result.residuals))]
    params = {"n": args.n, "k": args.k}
    outputs = _emit(args, "roots", ("index", "root", "residual"), rows, params)
    _manifest(args, "roots", params, outputs)


def cmd_table(args):
    if args.table_id not in TABLES:
        raise UsageError(f"unknown table id {args.table_id!r}; choose from {', '.join(sorted(TABLES))}")
    header, rows = TABLES[args.table_id]()
    params = {"table": args.table_id}
    outputs = _emit(args, args.table_id, header, rows, params)
    _manifest(args, "table", params, outputs)


def cmd_selftest(args):
    from .selftest import run_selftest
    failures = run_selftest(sys.stdout)
    if failures:
        raise ComputationError(f"{failures} self-test check(s) failed")


# -- parser -------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(prog="zernkit", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def output_opts(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out-dir", help="write files and a manifest here instead of stdout")

    p = sub.add_parser("nodes", help="radial and angular quadrature nodes")
    p.add_argument("--m", type=_positive_int, required=True)
    p.add_argument("--k", type=float, default=1.0)
    output_opts(p)
    p.set_defaults(func=cmd_nodes)

    p = sub.add_parser("integrate", help="integrate a function over the unit disk")
    p.add_argument("--f", required=True, help="f1, f2, f3, f4, bessel, unit or zernike:N,n,parity")
    p.add_argument("--m", type=_positive_int, required=True)
    p.add_argument("--reduced", action="store_true", help="thin the angular nodes near the origin")
    output_opts(p)
    p.set_defaults(func=cmd_integrate)

    p = sub.add_parser("fit", help="Zernike coefficients from samples on the interpolation grid")
    p.add_argument("--M", type=_positive_int, required=True)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--f")
    src.add_argument("--samples", help="CSV with header i,l,value (1-based node numbers)")
    output_opts(p)
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("grid", help="interpolation grid points")
    p.add_argument("--M", type=_positive_int, required=True)
    output_opts(p)
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("eval", help="evaluate a Zernike polynomial or a coefficient file")
    p.add_argument("--N", type=int, default=0)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--parity", choices=("cos", "sin"), default="cos")
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--coeffs", help="coefficient file (CSV or .json) to evaluate instead")
    output_opts(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("convert", help="convert between index schemes")
    p.add_argument("--scheme", choices=("std", "ansi", "fringe", "triple"), required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--N", type=int)
    p.add_argument("--parity", choices=("cos", "sin"), default="cos")
    p.add_argument("--index", type=int, help="linear index for ansi/fringe")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("roots", help="roots of the shifted Jacobi polynomial")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--k", type=float, default=1.0)
    output_opts(p)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("table", help="regenerate a benchmark table")
    p.add_argument("table_id", help=", ".join(sorted(TABLES)))
    output_opts(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("selftest", help="quick checks against the independent oracles")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command in ("convert",) and args.scheme in ("std", "ansi", "fringe") \
            and getattr(args, "index", None) is None and (args.n is None or args.m is None):
        parser.print_usage(sys.stderr)
        print("zernkit: error: give --index or both --n and --m", file=sys.stderr)
        return EXIT_USAGE
    try:
        args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"zernkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as exc:
        print(f"zernkit: convergence failure: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except (ValidationError, DomainError, ValueError) as exc:
        print(f"zernkit: invalid input: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ComputationError as exc:
        print(f"zernkit: computation failed: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except OSError as exc:
        print(f"zernkit: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
