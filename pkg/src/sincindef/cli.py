"""Command-line front end.

Subcommands: ``integrate`` (evaluate one formula at points), ``sweep``
(convergence CSV), ``compare`` (smallest n reaching a target error) and
``bounds`` (theoretical rate and bound expressions). Only the four built-in
problems are exposed; custom integrands go through the library API.
"""
import argparse
import csv
import math
import os
import sys

import numpy as np

from . import bounds, kernels
from .bench import (
    ALL_FORMULAS,
    Formula,
    builtin_problem,
    evaluation_points,
    grid_for,
    measure,
    smallest_n,
    approximate,
)
from .errors import SincIndefError
from .matrix_form import LeftBoundary

CSV_COLUMNS = ["formula", "problem", "n", "h", "M", "N", "max_error", "elapsed_seconds"]
FORMULA_CHOICES = [f.value.lower() for f in ALL_FORMULAS]


def fmt(value):
    """17 significant digits: round-trips through float()."""
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".17g")


def parse_n_list(text):
    """``a:b:step`` inclusive of b, or a comma-separated list."""
    try:
        if ":" in text:
            parts = [int(p) for p in text.split(":")]
            if len(parts) == 2:
                parts.append(1)
            a, b, step = parts
            if step < 1:
                raise ValueError
            values = list(range(a, b + 1, step))
        else:
            values = [int(p) for p in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid n list {text!r}; expected a:b:step") from None
    if not values or values[0] < 1 or any(q <= p for p, q in zip(values, values[1:])):
        raise argparse.ArgumentTypeError(f"n list {text!r} must be positive and strictly increasing")
    return values


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _add_common(p, multi):
    if multi:
        p.add_argument("--formula", action="append", type=str.lower, choices=FORMULA_CHOICES,
                       help="formula id (repeatable; default: all six)")
        p.add_argument("--problem", action="append", type=int, choices=[1, 2, 3, 4],
                       help="built-in problem id (repeatable; default: all four)")
    p.add_argument("--points", type=_positive_int, default=1000, help="number of evaluation points (default 1000)")
    p.add_argument("--left-boundary", choices=["corrected", "plain-sinc"], default="corrected",
                   help="left boundary basis for SE3/DE3")


def build_parser():
    parser = argparse.ArgumentParser(prog="sincindef", description=__doc__.splitlines()[0])
    parser.add_argument("--backend", choices=kernels.available_backends(), help="kernel backend override")
    parser.add_argument("--seedless", action="store_true",
                        help="accepted for scripts; the pipeline is always deterministic")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("integrate", help="evaluate one formula at given points")
    p.add_argument("--formula", required=True, type=str.lower, choices=FORMULA_CHOICES)
    p.add_argument("--problem", required=True, type=int, choices=[1, 2, 3, 4])
    p.add_argument("--n", required=True, type=_positive_int)
    p.add_argument("--x", action="append", type=float, help="evaluation point (repeatable); default: --points grid")
    p.add_argument("--order", type=_positive_int, default=1, help="integration order (SE3/DE3 only)")
    _add_common(p, multi=False)

    p = sub.add_parser("sweep", help="write a convergence CSV")
    _add_common(p, multi=True)
    p.add_argument("--n-list", type=parse_n_list, default=parse_n_list("5:50:5"))
    p.add_argument("--repeats", type=_positive_int, default=3, help="timing repetitions (median is reported)")
    p.add_argument("--output", help="CSV path (default: stdout)")
    p.add_argument("--bounds-overlay", action="store_true", help="add a rate_curve column")
    p.add_argument("--plot-script", help="also write a gnuplot script reading the CSV")

    p = sub.add_parser("compare", help="smallest n reaching a target error, per problem and formula")
    _add_common(p, multi=True)
    p.add_argument("--n-list", type=parse_n_list, default=parse_n_list("2:150:2"))
    p.add_argument("--target", type=float, default=1e-8)
    p.add_argument("--repeats", type=_positive_int, default=3)

    p = sub.add_parser("bounds", help="print mesh parameters, rate curves and error-bound values")
    p.add_argument("--formula", action="append", type=str.lower, choices=FORMULA_CHOICES)
    p.add_argument("--problem", required=True, type=int, choices=[1, 2, 3, 4])
    p.add_argument("--n-list", type=parse_n_list, default=parse_n_list("10:50:10"))
    p.add_argument("--lambda", dest="lam", type=float, help="strip integral value for discretization_bound")
    return parser


def _formulas(args):
    return [Formula.parse(f) for f in args.formula] if args.formula else list(ALL_FORMULAS)


def _problems(args):
    return [builtin_problem(p) for p in (args.problem or [1, 2, 3, 4])]


def cmd_integrate(args, out):
    problem = builtin_problem(args.problem)
    x = np.array(args.x, dtype=np.float64) if args.x else evaluation_points(args.points)
    approx = np.atleast_1d(
        approximate(args.formula, problem, args.n, x, order=args.order, left_boundary=args.left_boundary)
    )
    try:
        exact = problem.antiderivative(x, args.order)
    except SincIndefError:
        exact = np.full_like(x, math.nan)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["x", "approx", "exact", "abs_error"])
    for xi, ai, ei in zip(x, approx, exact):
        writer.writerow([fmt(xi), fmt(ai), fmt(ei), fmt(abs(ai - ei))])
    return 0


def sweep_rows(formulas, problems, n_list, *, points=1000, repeats=3, left_boundary="corrected", overlay=False):
    for problem in problems:
        for formula in formulas:
            for n in n_list:
                rec = measure(formula, problem, n, points=points, repeats=repeats, left_boundary=left_boundary)
                row = [formula.value, problem.id, rec.n, rec.h, rec.M, rec.N, rec.max_error, rec.elapsed_seconds]
                if overlay:
                    row.append(bounds.rate_curve(formula.family, problem.params(formula.family), n))
                yield row


def plot_script(csv_path, formulas, problems):
    """gnuplot commands drawing error-vs-n and error-vs-time per problem."""
    stem = os.path.splitext(os.path.basename(csv_path))[0]
    names = " ".join(f.value for f in formulas)
    lines = [
        "# generated by sincindef sweep",
        "set datafile separator ','",
        "set terminal pngcairo size 800,600",
        "set logscale y",
        "set format y '10^{%L}'",
        "set ylabel 'maximum error'",
        "set key top right",
        f"names = \"{names}\"",
    ]
    for problem in problems:
        pid = problem.id
        sel = f"(strcol(1) eq word(names, i) && $2 == {pid})"
        lines += [
            "",
            f"set output '{stem}_p{pid}_error.png'",
            "unset logscale x",
            "set xlabel 'n'",
            f"plot for [i=1:words(names)] '{csv_path}' every ::1 using ({sel} ? $3 : 1/0):7 "
            "with linespoints title word(names, i)",
            f"set output '{stem}_p{pid}_time.png'",
            "set logscale x",
            "set xlabel 'computation time [s]'",
            f"plot for [i=1:words(names)] '{csv_path}' every ::1 using ({sel} ? $8 : 1/0):7 "
            "with linespoints title word(names, i)",
        ]
    return "\n".join(lines) + "\n"


def cmd_sweep(args, out):
    formulas, problems = _formulas(args), _problems(args)
    header = CSV_COLUMNS + (["rate_curve"] if args.bounds_overlay else [])
    rows = sweep_rows(formulas, problems, args.n_list, points=args.points, repeats=args.repeats,
                      left_boundary=args.left_boundary, overlay=args.bounds_overlay)
    if args.output:
        try:
            fh = open(args.output, "w", encoding="utf-8", newline="")
        except OSError as exc:
            print(f"error: cannot write {args.output}: {exc.strerror}", file=sys.stderr)
            return 1
    else:
        fh = out
    try:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([fmt(v) if not isinstance(v, str) else v for v in row])
    finally:
        if fh is not out:
            fh.close()
    if args.plot_script:
        script = plot_script(args.output or "sweep.csv", formulas, problems)
        try:
            with open(args.plot_script, "w", encoding="utf-8", newline="") as fh:
                fh.write(script)
        except OSError as exc:
            print(f"error: cannot write {args.plot_script}: {exc.strerror}", file=sys.stderr)
            return 1
    return 0


def cmd_compare(args, out):
    formulas, problems = _formulas(args), _problems(args)
    print(f"# smallest n with max_error < {args.target:g} (n in {args.n_list[0]}..{args.n_list[-1]})", file=out)
    print(f"{'problem':>7} {'formula':>7} {'n':>5} {'max_error':>12} {'elapsed_s':>12}", file=out)
    for problem in problems:
        for formula in formulas:
            rec = smallest_n(formula, problem, args.target, args.n_list, points=args.points,
                             repeats=args.repeats, left_boundary=args.left_boundary)
            if rec is None:
                print(f"{problem.id:>7} {formula.value:>7} {'-':>5} {'-':>12} {'-':>12}", file=out)
            else:
                print(f"{problem.id:>7} {formula.value:>7} {rec.n:>5} {rec.max_error:>12.3e} "
                      f"{rec.elapsed_seconds:>12.4e}", file=out)
    return 0


def cmd_bounds(args, out):
    problem = builtin_problem(args.problem)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["formula", "n", "h", "M", "N", "rate_curve", "lambda", "discretization_bound"])
    for formula in _formulas(args):
        ap = problem.params(formula.family)
        lam = args.lam
        if lam is None and formula.family.value == "DE" and ap.K is not None:
            lam = bounds.lambda_bound_de(ap)
        for n in args.n_list:
            grid = grid_for(formula, problem, n)
            rate = bounds.rate_curve(formula.family, ap, n)
            disc = bounds.discretization_bound(grid.h, ap.d, lam) if lam is not None else math.nan
            writer.writerow([formula.value, n, fmt(grid.h), grid.M, grid.N, fmt(rate),
                             fmt(lam if lam is not None else math.nan), fmt(disc)])
    return 0


COMMANDS = {"integrate": cmd_integrate, "sweep": cmd_sweep, "compare": cmd_compare, "bounds": cmd_bounds}


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    previous = kernels.set_backend(args.backend) if args.backend else None
    try:
        return COMMANDS[args.command](args, out)
    except SincIndefError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    finally:
        if previous is not None:
            kernels.set_backend(previous)


if __name__ == "__main__":
    sys.exit(main())
