"""Command line: solve, verify, decompose, oracle, bench.

Exit codes: 0 success, 1 a verification claim failed, 2 unreadable input
(graph, certificate), 3 invalid decomposition, 4 self-verification of a
fresh solution failed (a bug), 5 an exact-oracle budget was exceeded.
"""
from __future__ import annotations

import argparse
import csv
import gc
import hashlib
import io
import json
import random
import sys
import time
from pathlib import Path

from .approx import (ApproxResult, Claim, FortPacking, VerificationReport, solve_components,
                     verify_result)
from .arcs import ArcSet
from .decomposition import (BudgetExceeded, DecompositionError, PathDecomposition, exact_pathwidth,
                            make_nice, parse_decomposition)
from .graph import Graph, ParseError, parse_graph, serialize_graph
from . import generators as gen
from .oracles import OracleBudget, exact_ft, exact_z, z_proper_interval

EXIT_OK = 0
EXIT_CLAIM_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_BAD_DECOMPOSITION = 3
EXIT_INTERNAL = 4
EXIT_BUDGET = 5

CERT_FORMAT = "zfapprox-certificate/1"


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def graph_digest(g: Graph) -> str:
    return hashlib.sha256(serialize_graph(g)).hexdigest()


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _read_bytes(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise CliError(EXIT_BAD_INPUT, f"cannot read {path}: {exc.strerror}") from exc


def _load_graph(path: str) -> Graph:
    try:
        return parse_graph(_read_bytes(path))
    except ParseError as exc:
        raise CliError(EXIT_BAD_INPUT, f"{path}: {exc}") from exc


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="ascii", newline="\n")
    else:
        sys.stdout.write(text)


def _exact_decomposition(g: Graph, max_n: int) -> PathDecomposition:
    try:
        _, pd = exact_pathwidth(g, max_n=max_n)
    except BudgetExceeded as exc:
        raise CliError(EXIT_BUDGET, f"{exc}; supply a decomposition with --decomposition") from exc
    return pd


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------

def certificate(g: Graph, result: ApproxResult, runs) -> dict:
    return {
        "components": [
            {
                "iterations": [list(p) for p in run.result.iterations],
                "vertices": list(run.vertices),
                "width": run.result.width_used,
            }
            for run in runs
        ],
        "fas": [list(a) for a in sorted(result.fas.arcs)],
        "format": CERT_FORMAT,
        "forts": [sorted(f) for f in result.packing.forts],
        "graph_sha256": graph_digest(g),
        "m": g.m,
        "n": g.n,
        "s": sorted(result.s),
        "width": result.width_used,
    }


def _int_list(x) -> list[int]:
    if not isinstance(x, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in x):
        raise ValueError("expected a list of integers")
    return x


def load_certificate(g: Graph, raw: bytes) -> tuple[ApproxResult, str | None]:
    """Rebuild a result from certificate JSON.

    Returns the result and, if the arc list is not an arc set of ``g``, the
    reason (the result then carries an empty arc set).
    """
    try:
        data = json.loads(raw.decode("utf-8"))
        if data.get("format") != CERT_FORMAT:
            raise ValueError(f"unknown certificate format {data.get('format')!r}")
        s = _int_list(data["s"])
        forts = [frozenset(_int_list(f)) for f in data["forts"]]
        arcs = [tuple(_int_list(a)) for a in data["fas"]]
        if any(len(a) != 2 for a in arcs):
            raise ValueError("arcs must be pairs")
        width = data["width"]
        if not isinstance(width, int) or width < 0:
            raise ValueError("width must be a non-negative integer")
        digest = data["graph_sha256"]
    except (ValueError, KeyError, TypeError, AttributeError, UnicodeDecodeError) as exc:
        raise CliError(EXIT_BAD_INPUT, f"malformed certificate: {exc}") from exc
    if digest != graph_digest(g):
        raise CliError(EXIT_BAD_INPUT, "certificate was issued for a different graph")
    problem = None
    try:
        fas = ArcSet(g, arcs)
    except ValueError as exc:
        fas, problem = ArcSet(g), str(exc)
    return ApproxResult(g.n, frozenset(s), FortPacking(tuple(forts)), fas, width), problem


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    if args.decomposition:
        try:
            pd = parse_decomposition(_read_bytes(args.decomposition), g)
        except DecompositionError as exc:
            raise CliError(EXIT_BAD_DECOMPOSITION, f"{args.decomposition}: {exc}") from exc
    else:
        # without a decomposition fall back to the exact oracle when it fits the budget
        pd = _exact_decomposition(g, args.pw_budget)
    result, runs = solve_components(g, pd)
    report = verify_result(g, result)
    if not report.ok:
        for line in report.lines():
            print(line, file=sys.stderr)
        raise CliError(EXIT_INTERNAL, "self-verification of the computed certificate failed")
    _emit(dump_json(certificate(g, result, runs)), args.out)
    if args.out:
        print(f"n={g.n} m={g.m} width={result.width_used} |S|={len(result.s)} "
              f"|F|={len(result.packing)} verified")
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    result, problem = load_certificate(g, _read_bytes(args.certificate))
    report = verify_result(g, result)
    if problem:
        claims = [c for c in report.claims if c.name != "forcing-arc-set"]
        report = VerificationReport(tuple(claims) + (Claim("forcing-arc-set", False, problem),))
    for line in report.lines():
        print(line)
    return EXIT_OK if report.ok else EXIT_CLAIM_FAILED


def cmd_decompose(args) -> int:
    g = _load_graph(args.graph)
    nice = make_nice(_exact_decomposition(g, args.pw_budget))
    _emit(nice.serialize().decode("ascii"), args.out)
    print(f"width {nice.width()}", file=sys.stdout if args.out else sys.stderr)
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _load_graph(args.graph)
    budget = OracleBudget(args.budget, args.budget, args.budget) if args.budget else OracleBudget()
    try:
        z, zs = exact_z(g, budget)
        ft, packing = exact_ft(g, budget)
        pw, pd = exact_pathwidth(g, max_n=budget.max_n_pw)
    except BudgetExceeded as exc:
        raise CliError(EXIT_BUDGET, str(exc)) from exc
    out = {
        "ft": ft,
        "ft_packing": [sorted(f) for f in packing],
        "n": g.n,
        "pw": pw,
        "pw_decomposition": [list(b) for b in pd.bags],
        "z": z,
        "z_witness": sorted(zs),
    }
    sys.stdout.write(dump_json(out))
    return EXIT_OK


FAMILIES = ("path", "cycle", "ladder", "proper-interval")
BENCH_COLUMNS = ["family", "n", "m", "width", "s", "forts", "ratio", "z_ref", "seconds"]


def bench_sizes(max_n: int) -> list[int]:
    sizes = []
    base = 10
    while base <= max_n:
        sizes.append(base)
        if 3 * base <= max_n:
            sizes.append(3 * base)
        base *= 10
    return sizes


def bench_instance(family: str, n: int, rng: random.Random):
    """Graph, path decomposition, and exact Z when cheaply known."""
    if family == "path":
        g = gen.path(n)
        return g, gen.path_bags(n), z_proper_interval(g, list(range(n)))
    if family == "cycle":
        return gen.cycle(n), gen.cycle_bags(n), None
    if family == "ladder":
        rungs = max(1, n // 2)
        return gen.ladder(rungs), gen.ladder_bags(rungs), None
    if family == "proper-interval":
        g, order = gen.random_proper_interval(n, rng)
        return g, gen.interval_bags(g, order), z_proper_interval(g, order)
    raise ValueError(f"unknown family {family!r}")


def cmd_bench(args) -> int:
    families = [f.strip() for f in args.families.split(",") if f.strip()]
    for f in families:
        if f not in FAMILIES:
            raise CliError(EXIT_BAD_INPUT, f"unknown family {f!r}; choose from {', '.join(FAMILIES)}")
    rng = random.Random(args.seed)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(BENCH_COLUMNS)
    for family in families:
        for n in bench_sizes(args.max_n):
            g, bags, z_ref = bench_instance(family, n, rng)
            pd = PathDecomposition(g, bags)
            start = time.perf_counter()
            result, _ = solve_components(g, pd)
            elapsed = time.perf_counter() - start
            forts = len(result.packing)
            ratio = f"{len(result.s) / forts:.4f}" if forts else ""
            writer.writerow([family, g.n, g.m, result.width_used, len(result.s), forts, ratio,
                             "" if z_ref is None else z_ref, f"{elapsed:.6f}"])
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zfapprox", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="zero forcing set and fort packing with a certificate")
    p.add_argument("--graph", required=True)
    how = p.add_mutually_exclusive_group()
    how.add_argument("--decomposition")
    how.add_argument("--exact-pw", action="store_true",
                     help="compute an optimal path decomposition (small graphs only)")
    p.add_argument("--out")
    p.add_argument("--pw-budget", type=int, default=12, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="re-check a certificate against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--certificate", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decompose", help="optimal nice path decomposition (small graphs)")
    p.add_argument("--graph", required=True)
    p.add_argument("--exact-pw", action="store_true", required=True)
    p.add_argument("--out")
    p.add_argument("--pw-budget", type=int, default=12, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("oracle", help="exact Z, fort number and pathwidth by brute force")
    p.add_argument("--graph", required=True)
    p.add_argument("--budget", type=int, help="largest n the exact oracles accept")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bench", help="time the solver on generated families, CSV output")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--families", default=",".join(FAMILIES))
    p.add_argument("--max-n", type=int, default=10000)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    # the solver allocates millions of small acyclic objects on large inputs;
    # generational collection passes over them make run time superlinear
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    finally:
        if was_enabled:
            gc.enable()


if __name__ == "__main__":
    sys.exit(main())
