"""Command-line front end.

Exit codes: 0 the property holds / feasible, 1 it fails / infeasible,
2 usage or input error, 3 a size guard was hit, 4 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import bounds as bounds_mod
from .diagonal import find_positive_diagonal
from .errors import (DimensionError, IntegrityError, NotStochasticError, ResourceGuardError,
                     TensorSyntaxError)
from .latin import DEFAULT_CAP, enumerate_latin_squares
from .polytope import (VERTEX_CAP, enumerate_vertices, is_extreme, membership_delta, random_delta,
                       random_omega)
from .stochastic import check_vec_characterization, is_stochastic
from .tensor_core import format_rational, parse_tensor, serialize_tensor, vec_lines

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD, EXIT_INTERNAL = 0, 1, 2, 3, 4


def _read_tensor(source: str):
    if source == "-":
        text = sys.stdin.read()
    elif source.lstrip().startswith("{") or "\n" in source:
        text = source
    else:
        text = Path(source).read_text()
    return parse_tensor(text)


def _bool(b):
    return "true" if b else "false"


def cmd_check(args, out):
    T = _read_tensor(args.input)
    direct = is_stochastic(T)
    via_vec = check_vec_characterization(T)
    if direct != via_vec:
        raise IntegrityError("direct and line-vector stochasticity checks disagree")
    if args.format == "json":
        out.write(json.dumps({"stochastic": direct, "vec_characterization": via_vec}) + "\n")
    else:
        out.write(f"stochastic: {_bool(direct)}\nvec characterization: {_bool(via_vec)}\n")
    return EXIT_OK if direct else EXIT_FAIL


def cmd_vec(args, out):
    T = _read_tensor(args.input)
    v = vec_lines(T)
    vals = [format_rational(x) for x in v.values]
    if args.format == "json":
        out.write(json.dumps({"n": T.n, "values": vals}) + "\n")
    else:
        # one line per fiber
        for t in range(0, len(vals), T.n):
            out.write(" ".join(vals[t:t + T.n]) + "\n")
    return EXIT_OK


def cmd_diagonal(args, out):
    T = _read_tensor(args.input)
    W = find_positive_diagonal(T)
    if args.format == "json":
        if W is None:
            out.write(json.dumps({"diagonal": None}) + "\n")
        else:
            entries = [{"position": list(p), "value": format_rational(T.entry(*p))}
                       for p in W.positions()]
            out.write(json.dumps({"diagonal": {"square": W.square.rows(), "entries": entries}}) + "\n")
    elif W is None:
        out.write("no positive diagonal\n")
    else:
        out.write("positive diagonal:\n")
        out.write(str(W.square) + "\n")
        out.write("entries (i,j,k) value:\n")
        for p in W.positions():
            out.write(f"({p[0]},{p[1]},{p[2]}) {format_rational(T.entry(*p))}\n")
    return EXIT_FAIL if W is None else EXIT_OK


def cmd_decompose(args, out):
    T = _read_tensor(args.input)
    cert = membership_delta(T, cap=args.cap)
    if args.format == "json":
        out.write(cert.to_json() + "\n")
    elif not cert.feasible:
        out.write("infeasible\n")
    else:
        out.write(f"feasible: {len(cert.terms)} terms\n")
        for sq, w in cert.terms:
            rows = " / ".join(" ".join(str(v) for v in r) for r in sq.cells)
            out.write(f"{format_rational(w)}: {rows}\n")
    return EXIT_OK if cert.feasible else EXIT_FAIL


def cmd_extreme(args, out):
    T = _read_tensor(args.input)
    verdict = is_extreme(T)
    if args.format == "json":
        out.write(json.dumps({"extreme": verdict}) + "\n")
    else:
        out.write(f"extreme: {_bool(verdict)}\n")
    return EXIT_OK if verdict else EXIT_FAIL


def cmd_vertices(args, out):
    vs = enumerate_vertices(args.n, cap=args.cap, method=args.method)
    if args.format == "json":
        out.write(vs.to_json_lines())
    else:
        for V in vs.vertices:
            out.write(serialize_tensor(V, "text") + "\n")
        out.write(f"count: {vs.count}\npermutation tensors: {vs.permutation_count()}\n")
    return EXIT_OK


def cmd_bounds(args, out):
    reports = []
    for n in args.n:
        count = None
        if args.count:
            count = enumerate_vertices(n, cap=args.cap).count
        reports.append(bounds_mod.bounds_report(n, count))
    out.write(bounds_mod.format_table(reports, args.format))
    return EXIT_OK


def cmd_latin(args, out):
    squares = enumerate_latin_squares(args.n, cap=args.cap, jobs=args.jobs)
    if args.format == "json":
        out.write(json.dumps([sq.rows() for sq in squares]) + "\n")
    else:
        out.write("\n\n".join(str(sq) for sq in squares) + "\n")
    return EXIT_OK


def cmd_gen(args, out):
    rng = random.Random(args.seed)
    if args.kind == "omega":
        T = random_omega(args.n, rng, terms=args.terms)
    else:
        T = random_delta(args.n, rng, terms=args.terms)
    out.write(serialize_tensor(T, args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stochtensor", description="Exact computations with n x n x n stochastic tensors.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, fmt="text"):
        p = sub.add_parser(name, help=help)
        p.add_argument("--format", choices=("text", "json"), default=fmt)
        p.set_defaults(func=func)
        return p

    for name, func, help in [
        ("check", cmd_check, "verify stochasticity (direct and via the line vector)"),
        ("vec", cmd_vec, "print the line vector"),
        ("diagonal", cmd_diagonal, "find the least positive diagonal"),
        ("extreme", cmd_extreme, "test whether a stochastic tensor is a vertex"),
    ]:
        add(name, func, help).add_argument("input", help="tensor file, '-' for stdin, or inline JSON")

    p = add("decompose", cmd_decompose, "write as a convex combination of permutation tensors")
    p.add_argument("input")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest n for Latin enumeration")

    p = add("vertices", cmd_vertices, "enumerate the vertices of the polytope", fmt="json")
    p.add_argument("n", type=int)
    p.add_argument("--cap", type=int, default=VERTEX_CAP)
    p.add_argument("--method", choices=("dd", "scan"), default="dd")

    p = add("bounds", cmd_bounds, "lower/upper bounds on the vertex count")
    p.add_argument("n", type=int, nargs="+")
    p.add_argument("--count", action="store_true", help="also enumerate vertices (small n)")
    p.add_argument("--cap", type=int, default=VERTEX_CAP)

    p = add("latin", cmd_latin, "enumerate Latin squares")
    p.add_argument("n", type=int)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--jobs", type=int, default=1)

    p = add("gen", cmd_gen, "seeded random member of Omega_n or Delta_n", fmt="json")
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--kind", choices=("omega", "delta"), default="omega")
    p.add_argument("--terms", type=int, default=None, help="number of vertices mixed")
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (TensorSyntaxError, DimensionError, NotStochasticError, OSError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except ResourceGuardError as exc:
        err.write(f"guard: {exc}\n")
        return EXIT_GUARD
    except IntegrityError as exc:
        err.write(f"internal error: {exc}\n")
        return EXIT_INTERNAL


def main():
    sys.exit(run())
