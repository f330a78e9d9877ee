"""Command line interface.

Exit codes: 0 success, 1 verification failure, 2 invalid parameters or
malformed literals, 3 semantically impossible requests (non-root literals,
empty generator lists, degenerate sums), 4 I/O errors.

JSON output is deterministic: keys sorted, two-space indent, and every
mathematically unbounded integer (coordinates, heights, norms, sequence
values, matrix entries) rendered as a decimal string so consumers are not
forced through floating point.  Rationals appear as [numerator,
denominator] string pairs.  System parameters, family indices, and
multiplicities stay plain JSON numbers.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys as _sys
from fractions import Fraction

from .errors import (
    DegenerateSum,
    EmptyGenerators,
    InvalidIndex,
    InvalidParams,
    LiteralSyntaxError,
    NotRealRoot,
    PreconditionFailed,
)
from .lattice import System, height, integral_norm
from .roots import (
    RealRoot,
    classify,
    coords,
    enumerate_imaginary,
    enumerate_real,
    index_window,
    length_class,
    parse_root_literal,
    root_literal,
)
from .sequences import delta, epsilon, eta, gamma
from .subsystems import (
    delta_re_subsystem,
    phi_classify,
    phi_closure,
    subsystem_class,
)
from .sums import (
    norm_of_sum_check,
    positive_combinations,
    real_sum_pairs,
    sum_classify,
    sum_length_rule,
)
from .verify import SUITES, grid_systems, run as run_suites


def _emit_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True, indent=2))


def _frac(f: Fraction) -> list[str]:
    return [str(f.numerator), str(f.denominator)]


def _root_obj(sys: System, r: RealRoot) -> dict:
    x, y = coords(sys, r)
    return {"family": r.family, "index": r.index, "x": str(x), "y": str(y)}


def _add_system_args(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--a", type=int, required=required, help="first parameter (a >= b)")
    p.add_argument("--b", type=int, required=required, help="second parameter (b >= 1)")


def _writer(stream):
    return csv.writer(stream, lineterminator="\n")


# -- roots -------------------------------------------------------------------


def _cmd_roots(args) -> int:
    sys = System(args.a, args.b)
    rows = []
    if args.imaginary:
        if args.height is None:
            raise InvalidParams("--imaginary requires --height")
        for v in enumerate_imaginary(sys, args.height):
            rows.append(
                {
                    "kind": "imaginary",
                    "x": str(v[0]),
                    "y": str(v[1]),
                    "height": str(height(v)),
                    "norm": str(integral_norm(sys, v)),
                }
            )
    else:
        if args.max_index is None:
            raise InvalidParams("listing real roots requires --max-index")
        for r in enumerate_real(sys, args.max_index):
            v = coords(sys, r)
            rows.append(
                {
                    "kind": "real",
                    "family": r.family,
                    "index": r.index,
                    "x": str(v[0]),
                    "y": str(v[1]),
                    "height": str(height(v)),
                    "norm": str(integral_norm(sys, v)),
                    "length": length_class(sys, r),
                }
            )
    if args.format == "json":
        _emit_json({"a": sys.a, "b": sys.b, "roots": rows})
    else:
        w = _writer(_sys.stdout)
        w.writerow(["kind", "family", "index", "x", "y", "height", "norm", "length"])
        for row in rows:
            w.writerow(
                [
                    row["kind"],
                    row.get("family", ""),
                    row.get("index", ""),
                    row["x"],
                    row["y"],
                    row["height"],
                    row["norm"],
                    row.get("length", ""),
                ]
            )
    return 0


# -- tables --------------------------------------------------------------------


def _cmd_tables(args) -> int:
    sys = System(args.a, args.b)
    if args.rows < 1:
        raise InvalidIndex(f"--rows must be >= 1, got {args.rows}")
    w = _writer(_sys.stdout)
    if args.table == "gamma-eta":
        w.writerow(["j", "gamma", "eta"])
        for j in range(args.rows):
            w.writerow([j, gamma(sys, j), eta(sys, j)])
    else:
        w.writerow(["d", "delta", "epsilon"])
        for d in range(args.rows):
            w.writerow([d, delta(sys, d) if d >= 1 else "", epsilon(sys, d)])
    return 0


# -- sum -----------------------------------------------------------------------


def _sum_obj(sys: System, v) -> dict:
    cls = classify(sys, v)
    obj = {"kind": cls.kind, "x": str(v[0]), "y": str(v[1])}
    if cls.kind == "real":
        obj["family"] = cls.root.family
        obj["index"] = cls.root.index
        obj["length"] = length_class(sys, cls.root)
    return obj


def _cmd_sum(args) -> int:
    sys = System(args.a, args.b)
    alpha = parse_root_literal(sys, args.alpha)
    beta = parse_root_literal(sys, args.beta)
    u = coords(sys, alpha)
    v = coords(sys, beta)
    s = (u[0] + v[0], u[1] + v[1])
    rule = sum_length_rule(sys, alpha, beta)  # raises DegenerateSum on zero
    out = {
        "a": sys.a,
        "b": sys.b,
        "alpha": _root_obj(sys, alpha),
        "beta": _root_obj(sys, beta),
        "sum": _sum_obj(sys, s),
        "length_rule": rule,
        "norm_check": None,
    }
    if out["sum"]["kind"] == "real":
        out["norm_check"] = norm_of_sum_check(sys, alpha, beta)
    _emit_json(out)
    return 0


# -- subsystem -------------------------------------------------------------------


def _parse_gens(sys: System, text: str) -> list[RealRoot]:
    parts = [p for p in (s.strip() for s in text.split(";")) if p]
    return [parse_root_literal(sys, p) for p in parts]


def _progression_obj(p) -> dict | None:
    return None if p is None else {"r": p.r, "d": p.d}


def _cmd_subsystem(args) -> int:
    sys = System(args.a, args.b)
    gens = _parse_gens(sys, args.gens)
    if args.mode == "phi":
        ix = phi_closure(gens)
        pt = phi_classify(sys, ix)
        cls = subsystem_class(pt)
        out = {
            "a": sys.a,
            "b": sys.b,
            "mode": "phi",
            "generators": [_root_obj(sys, g) for g in gens],
            "index_sets": {
                "long": _progression_obj(ix.long),
                "short": _progression_obj(ix.short),
            },
            "type": {
                "kind": pt.kind,
                "r": pt.r,
                "d": pt.d,
                "base": [_root_obj(sys, r) for r in pt.base],
                "cartan": [[str(c) for c in row] for row in pt.cartan],
                "inner_product": [[_frac(f) for f in row] for row in pt.inner],
            },
            "class": {"kind": cls.kind, "p": cls.p, "q": cls.q},
        }
    else:
        if not gens:
            raise EmptyGenerators("at least one generating root is required")
        ix, same = delta_re_subsystem(sys, gens)
        out = {
            "a": sys.a,
            "b": sys.b,
            "mode": "delta",
            "generators": [_root_obj(sys, g) for g in gens],
            "index_sets": {
                "long": _progression_obj(ix.long),
                "short": _progression_obj(ix.short),
            },
            "same_as_phi": same,
        }
    _emit_json(out)
    return 0


# -- combos ----------------------------------------------------------------------


def _cmd_combos(args) -> int:
    sys = System(args.a, args.b)
    alpha = parse_root_literal(sys, args.alpha)
    beta = parse_root_literal(sys, args.beta)
    combos = positive_combinations(sys, alpha, beta, args.bound)
    out = {
        "a": sys.a,
        "b": sys.b,
        "alpha": _root_obj(sys, alpha),
        "beta": _root_obj(sys, beta),
        "bound": args.bound,
        "combinations": [
            {"m": m, "n": n, **_root_obj(sys, r)} for (m, n, r) in combos
        ],
    }
    _emit_json(out)
    return 0


# -- sum-pairs ---------------------------------------------------------------------


def _cmd_sum_pairs(args) -> int:
    sys = System(args.a, args.b)
    if args.max_index < 0:
        raise InvalidIndex(f"--max-index must be >= 0, got {args.max_index}")
    pairs = real_sum_pairs(sys, args.max_index)
    if args.format == "json":
        out = {
            "a": sys.a,
            "b": sys.b,
            "max_index": args.max_index,
            "pairs": [
                {
                    "alpha": _root_obj(sys, x),
                    "beta": _root_obj(sys, y),
                    "sum": _root_obj(sys, s),
                }
                for (x, y, s) in pairs
            ],
        }
        _emit_json(out)
    else:
        w = _writer(_sys.stdout)
        w.writerow(["alpha", "beta", "sum"])
        for x, y, s in pairs:
            w.writerow([root_literal(x), root_literal(y), root_literal(s)])
    return 0


# -- plot-data ---------------------------------------------------------------------


def _conic_rows(sys: System, lo: int, hi: int) -> list[tuple[float, float, str]]:
    rows = []
    span = hi - lo
    t = sys.product
    for orbit, c in (("long", sys.a), ("short", sys.b)):
        for i in range(401):
            x = lo + span * i / 400
            disc = t * (t - 4) * x * x + 4 * sys.b * c
            if disc < 0:
                continue
            root = math.sqrt(disc)
            for sgn in (1, -1):
                y = (t * x + sgn * root) / (2 * sys.b)
                rows.append((x, y, orbit))
    return rows


def _cmd_plot_data(args) -> int:
    sys = System(args.a, args.b)
    if args.max_index < 0:
        raise InvalidIndex(f"--max-index must be >= 0, got {args.max_index}")
    roots = [(r, coords(sys, r)) for r in index_window(args.max_index)]
    xs = [v[0] for (_, v) in roots]
    lo, hi = min(xs), max(xs)
    stream = open(args.out, "w", newline="") if args.out else _sys.stdout
    try:
        w = _writer(stream)
        w.writerow(["x", "y", "orbit", "positive"])
        for x, y, orbit in _conic_rows(sys, lo, hi):
            w.writerow([f"{x:.12g}", f"{y:.12g}", orbit, ""])
        for r, v in roots:
            w.writerow(
                [
                    str(v[0]),
                    str(v[1]),
                    length_class(sys, r),
                    "true" if r.index >= 0 else "false",
                ]
            )
    finally:
        if args.out:
            stream.close()
    return 0


# -- verify ------------------------------------------------------------------------


def _env_threads() -> int:
    raw = os.environ.get("RANK2_ROOTS_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return n if n >= 1 else 1


def _cmd_verify(args) -> int:
    if args.grid is not None:
        if args.a is not None or args.b is not None:
            raise InvalidParams("--grid excludes --a/--b")
        systems = grid_systems(args.grid)
        if not systems:
            raise InvalidParams(f"no valid systems with a*b <= {args.grid}")
    else:
        if args.a is None or args.b is None:
            raise InvalidParams("need either --grid or both --a and --b")
        systems = [System(args.a, args.b)]
    suites = list(SUITES) if "all" in args.suite else list(dict.fromkeys(args.suite))
    reports = run_suites(
        suites, systems, args.bound, args.seed, sets=args.sets, threads=_env_threads()
    )
    out = {
        "seed": args.seed,
        "bound": args.bound,
        "suites": [
            {
                "suite": r.suite,
                "a": r.a,
                "b": r.b,
                "checks": r.checks,
                "ok": r.ok,
                "counterexample": r.counterexample,
            }
            for r in reports
        ],
        "ok": all(r.ok for r in reports),
    }
    _emit_json(out)
    return 0 if out["ok"] else 1


# -- parser -------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="rank2roots",
        description="Exact real-root combinatorics of the rank-2 systems H(a, b).",
    )
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("roots", help="list real or imaginary roots")
    _add_system_args(q)
    q.add_argument("--max-index", type=int, help="largest family index to list")
    q.add_argument("--imaginary", action="store_true", help="list imaginary roots instead")
    q.add_argument("--height", type=int, help="height bound for --imaginary")
    q.add_argument("--format", choices=("json", "csv"), default="json")
    q.set_defaults(func=_cmd_roots)

    q = sub.add_parser("tables", help="print sequence tables as CSV")
    _add_system_args(q)
    q.add_argument("--table", choices=("gamma-eta", "delta-epsilon"), default="gamma-eta")
    q.add_argument("--rows", type=int, required=True, help="number of rows (from 0)")
    q.set_defaults(func=_cmd_tables)

    q = sub.add_parser("sum", help="classify the sum of two real roots")
    _add_system_args(q)
    q.add_argument("alpha", help="root literal FAMILY:INT or X,Y")
    q.add_argument("beta", help="root literal FAMILY:INT or X,Y")
    q.set_defaults(func=_cmd_sum)

    q = sub.add_parser("subsystem", help="classify the subsystem generated by roots")
    _add_system_args(q)
    q.add_argument("--gens", required=True, help="semicolon-separated root literals")
    q.add_argument("--mode", choices=("phi", "delta"), default="phi")
    q.set_defaults(func=_cmd_subsystem)

    q = sub.add_parser("combos", help="positive combinations m*alpha + n*beta that are real")
    _add_system_args(q)
    q.add_argument("alpha", help="root literal")
    q.add_argument("beta", help="root literal")
    q.add_argument("--bound", type=int, required=True, help="largest coefficient")
    q.set_defaults(func=_cmd_combos)

    q = sub.add_parser("sum-pairs", help="all real-sum pairs inside an index window")
    _add_system_args(q)
    q.add_argument("--max-index", type=int, required=True)
    q.add_argument("--format", choices=("json", "csv"), default="json")
    q.set_defaults(func=_cmd_sum_pairs)

    q = sub.add_parser("plot-data", help="CSV points for the norm conics and roots")
    _add_system_args(q)
    q.add_argument("--max-index", type=int, required=True)
    q.add_argument("--out", help="output file (stdout when omitted)")
    q.set_defaults(func=_cmd_plot_data)

    q = sub.add_parser("verify", help="run cross-verification suites")
    _add_system_args(q, required=False)
    q.add_argument("--grid", type=int, help="run every system with a*b up to this bound")
    q.add_argument(
        "--suite",
        action="append",
        choices=SUITES + ("all",),
        default=None,
        help="suite to run (repeatable, default all)",
    )
    q.add_argument("--bound", type=int, default=40, help="index window half-width")
    q.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    q.add_argument("--sets", type=int, default=100, help="random generating sets per system")
    q.set_defaults(func=_cmd_verify)
    return p


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2
    if getattr(args, "suite", None) is None and getattr(args, "command", "") == "verify":
        args.suite = ["all"]
    try:
        return args.func(args)
    except (InvalidParams, InvalidIndex, LiteralSyntaxError, OverflowError) as e:
        print(f"error: {e}", file=_sys.stderr)
        return 2
    except (NotRealRoot, EmptyGenerators, DegenerateSum, PreconditionFailed) as e:
        print(f"error: {e}", file=_sys.stderr)
        return 3
    except OSError as e:
        print(f"error: {e}", file=_sys.stderr)
        return 4


if __name__ == "__main__":
    raise SystemExit(main())
