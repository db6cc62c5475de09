"""``f2conics`` command line.

Exit status: 0 on success, 1 on invalid input, 2 when two independent
computations of the same quantity disagree.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .asymptotic import (
    QUADRATURE_TOL,
    QuadratureError,
    c_omega_table,
    hankel_check,
    leading_constant,
    predict,
    tauberian_selftest,
)
from .census import DEFAULT_CAP, CapExceededError, census
from .dirichlet import z_series
from .funcfield import count_by_height, parse_place, parse_ratfunc
from .symbol import local_symbol, predicted_principal_parts, residue, soluble_principal_parts
from .tables import Table

EXIT_OK, EXIT_INVALID, EXIT_MISMATCH = 0, 1, 2
WORKERS_ENV = "F2CONICS_WORKERS"
CONSTANT_DEGREE = 30
MAX_SERIES_ORDER = 200


class UsageError(Exception):
    """Bad command-line input; reported with exit status 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def default_workers():
    env = os.environ.get(WORKERS_ENV)
    if env:
        try:
            n = int(env)
        except ValueError:
            raise UsageError(f"{WORKERS_ENV} must be an integer, got {env!r}") from None
        if n < 1:
            raise UsageError(f"{WORKERS_ENV} must be positive")
        return n
    return os.cpu_count() or 1


def _positive(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def _nonneg(text):
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be a nonnegative integer")
    return n


def build_parser():
    p = _Parser(prog="f2conics", description="Counting soluble conics over F_2(t).")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def table_cmd(name, help_, default="csv"):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--format", choices=["csv", "json", "text"], default=default)
        sp.add_argument("--out", help="write to this file instead of stdout")
        return sp

    sp = table_cmd("census", "exhaustive count of soluble y by height")
    sp.add_argument("--max-log-height", type=_nonneg, required=True, metavar="M")
    sp.add_argument("--workers", type=_positive, default=None)
    sp.add_argument("--allow-large", action="store_true",
                    help=f"lift the cap M <= {DEFAULT_CAP}")
    sp.add_argument("--cross-check", action=argparse.BooleanOptionalAction, default=True,
                    help="compare with the Euler-product coefficients (default on)")
    sp.add_argument("--kernel", choices=["cython", "python"], default=None)

    sp = table_cmd("series", "coefficients of the height zeta series")
    sp.add_argument("--order", type=_positive, required=True, metavar="M")

    sp = table_cmd("compare", "census vs Euler product vs asymptotic", default="text")
    sp.add_argument("--max", type=_nonneg, required=True, dest="max_m", metavar="M")
    sp.add_argument("--workers", type=_positive, default=None)

    sp = table_cmd("constant", "leading constant of the asymptotic", default="json")
    sp.add_argument("--max-degree", type=int, default=CONSTANT_DEGREE)

    sp = table_cmd("symbol", "local symbol [y, t) at a place", default="text")
    sp.add_argument("--y", required=True)
    sp.add_argument("--place", required=True)

    sp = table_cmd("measure", "soluble principal parts of order k at a place", default="text")
    sp.add_argument("--place", required=True)
    sp.add_argument("--k", type=_positive, required=True)

    sp = table_cmd("tauberian", "central-binomial self-test", default="json")
    sp.add_argument("--selftest", action="store_true", required=True)
    sp.add_argument("--max", type=int, default=4096, dest="max_m")

    sp = table_cmd("hankel", "Hankel contour integral against -1/Gamma(b)", default="json")
    sp.add_argument("--b", type=float, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--delta", type=float, default=0.5)
    return p


def _config(args):
    cfg = {k: v for k, v in vars(args).items() if k not in ("out",)}
    cfg["version"] = __version__
    return cfg


# -- subcommands ---------------------------------------------------------------

def _census_rows(M_max, workers, backend=None):
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for M in range(M_max + 1):
                # more slices than workers evens out the uneven slice costs
                yield census(M, cap=None, parts=4 * workers, mapper=pool.map, backend=backend)
    else:
        for M in range(M_max + 1):
            yield census(M, cap=None, backend=backend)


def _check_cap(M, allow_large):
    if M > DEFAULT_CAP and not allow_large:
        raise UsageError(f"--max-log-height {M} exceeds the cap {DEFAULT_CAP}; "
                         "pass --allow-large to run it anyway")


def cmd_census(args):
    _check_cap(args.max_log_height, args.allow_large)
    workers = args.workers or default_workers()
    args.workers = workers
    c = leading_constant(CONSTANT_DEGREE).c
    cols = ["M", "total", "soluble"]
    if args.cross_check:
        cols.append("euler_coefficient")
    cols.append("ratio_to_asymptotic")
    table = Table(cols, config=_config(args))
    euler = z_series(args.max_log_height + 1).integers() if args.cross_check else None
    mismatches = []
    for row in _census_rows(args.max_log_height, workers, args.kernel):
        rec = {"M": row.M, "total": row.total, "soluble": row.soluble,
               "ratio_to_asymptotic": row.soluble / predict(row.M, c) if row.M else None}
        if row.total != count_by_height(row.M):
            mismatches.append(f"M={row.M}: total {row.total} != {count_by_height(row.M)}")
        if euler is not None:
            rec["euler_coefficient"] = euler[row.M]
            if euler[row.M] != row.soluble:
                mismatches.append(f"M={row.M}: census {row.soluble} != euler {euler[row.M]}")
        table.add(**rec)
    table.checks = {"constant_c": c, "mismatches": mismatches,
                    "euler_agrees": args.cross_check and not mismatches}
    return table, mismatches


def cmd_series(args):
    if args.order > MAX_SERIES_ORDER:
        raise UsageError(f"--order is limited to {MAX_SERIES_ORDER}")
    z = z_series(args.order)
    if not z.is_integral():
        return Table(["M", "coefficient"], config=_config(args)), ["non-integral coefficient"]
    table = Table(["M", "coefficient"], config=_config(args))
    for M, coef in enumerate(z.integers()):
        table.add(M=M, coefficient=coef)
    bad = [M for M, coef in enumerate(z.integers()) if coef < 0]
    return table, [f"negative coefficient at u^{M}" for M in bad]


def cmd_compare(args):
    _check_cap(args.max_m, False)
    workers = args.workers or default_workers()
    args.workers = workers
    c = leading_constant(CONSTANT_DEGREE).c
    euler = z_series(args.max_m + 1).integers()
    table = Table(["M", "census", "euler", "asymptotic", "ratio"], config=_config(args))
    mismatches = []
    for row in _census_rows(args.max_m, workers):
        pred = predict(row.M, c) if row.M else None
        table.add(M=row.M, census=row.soluble, euler=euler[row.M], asymptotic=pred,
                  ratio=row.soluble / pred if pred else None)
        if row.soluble != euler[row.M]:
            mismatches.append(f"M={row.M}: census {row.soluble} != euler {euler[row.M]}")
    table.checks = {"constant_c": c, "mismatches": mismatches}
    return table, mismatches


def cmd_constant(args):
    if args.max_degree < 2:
        raise UsageError("--max-degree must be at least 2")
    rep = leading_constant(args.max_degree)
    table = Table(["value", "error_bound", "relative_error_bound", "partial_product",
                   "degrees_used"], config=_config(args))
    table.add(value=rep.c, error_bound=rep.c * rep.relative_error_bound,
              relative_error_bound=rep.relative_error_bound,
              partial_product=rep.partial_product, degrees_used=rep.degrees_used)
    bad = [f"degree {d}: {a} != {b}" for d, a, b in c_omega_table(min(args.max_degree, 8))
           if a != b]
    table.checks = {"tail_bound": rep.tail_bound, "c_omega_two_ways_agree": not bad}
    return table, bad


def cmd_symbol(args):
    y = parse_ratfunc(args.y)
    place = parse_place(args.place)
    bit = local_symbol(y, place)
    table = Table(["y", "place", "symbol", "residue"], config=_config(args))
    table.add(y=str(y), place=str(place), symbol=bit, residue=str(residue(y, place)))
    return table, []


def cmd_measure(args):
    place = parse_place(args.place)
    try:
        got = soluble_principal_parts(place, args.k)
        want = predicted_principal_parts(place, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    table = Table(["place", "k", "count_soluble", "count_total", "predicted_soluble",
                   "predicted_total"], config=_config(args))
    table.add(place=str(place), k=args.k, count_soluble=got[0], count_total=got[1],
              predicted_soluble=want[0], predicted_total=want[1])
    return table, [] if got == want else [f"counted {got}, predicted {want}"]


def cmd_tauberian(args):
    if args.max_m < 8:
        raise UsageError("--max must be at least 8")
    rep = tauberian_selftest(args.max_m)
    table = Table(["M", "ratio", "scaled_error"], config=_config(args))
    for M, ratio in rep.rows:
        if M >= 8 and (M & (M - 1) == 0 or M == args.max_m):
            table.add(M=M, ratio=ratio, scaled_error=4 * M * abs(ratio - 1))
    table.checks = rep.as_dict()
    return table, [] if rep.passed else ["|ratio - 1| > 1/(4M) or non-integral coefficient"]


def cmd_hankel(args):
    try:
        value = hankel_check(args.b, args.m, args.delta)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    except QuadratureError as exc:
        return Table(["value"], config=_config(args)), [str(exc)]
    target = -1 / math.gamma(args.b)
    table = Table(["value", "target", "error", "quadrature_tolerance"], config=_config(args))
    table.add(value=value, target=target, error=abs(value - target),
              quadrature_tolerance=QUADRATURE_TOL)
    return table, []


COMMANDS = {
    "census": cmd_census,
    "series": cmd_series,
    "compare": cmd_compare,
    "constant": cmd_constant,
    "symbol": cmd_symbol,
    "measure": cmd_measure,
    "tauberian": cmd_tauberian,
    "hankel": cmd_hankel,
}


def dispatch(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        table, problems = COMMANDS[args.command](args)
    except (UsageError, CapExceededError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INVALID
    except ValueError as exc:  # includes malformed polynomial text
        print(f"error: {exc}", file=stderr)
        return EXIT_INVALID
    text = table.render(args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    if problems:
        for msg in problems:
            print(f"mismatch: {msg}", file=stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def main():
    sys.exit(dispatch())
