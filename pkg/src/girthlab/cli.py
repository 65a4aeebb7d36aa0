"""
Command line front end.

Each subcommand writes its result to stdout (or ``--out``) and one JSON
run report to stderr.  Stdout never contains timings, so repeated runs
with the same worker count are byte-identical.

Exit codes: 0 success, 1 a verification check failed, 2 bad usage or a
parameter outside the supported range, 3 a resource limit was hit.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import json
import os
import sys
import time
from typing import Optional, Sequence

from .errors import ResourceLimit
from .field import make_field
from .formats import MAX_EXPORT_VERTICES, write_alist, write_edgelist
from .graph import make_graph
from .search import SearchParams, enumerate_cycles_through_anchor, girth
from .verify import THEOREMS, run_checks

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

ENV_WORKERS = "GIRTHLAB_WORKERS"


def default_workers() -> int:
    env = os.environ.get(ENV_WORKERS)
    if env:
        try:
            n = int(env)
        except ValueError:
            raise ValueError(f"{ENV_WORKERS} must be an integer, got {env!r}") from None
        if n < 1:
            raise ValueError(f"{ENV_WORKERS} must be positive, got {n}")
        return n
    return os.cpu_count() or 1


def graph_header(k: Optional[int], q: int) -> dict:
    """Field and graph parameters, including the modulus used for GF(q)."""
    f = make_field(q)
    return {
        "k": k,
        "q": f.q,
        "p": f.p,
        "m": f.m,
        "modulus": list(f.modulus),
        "modulus_str": f.modulus_str(),
    }


@contextlib.contextmanager
def _sink(path: Optional[str]):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _params(args) -> SearchParams:
    return SearchParams(worker_count=args.workers)


# -- subcommands ---------------------------------------------------------------


def cmd_girth(args):
    g = make_graph(args.k, args.q)
    max_length = args.max_length
    result = girth(g, max_length)
    payload = {
        "girth": result.value,
        "exact": result.exact,
        "display": str(result),
        "max_length": max_length if max_length is not None else 2 * g.k + 10,
    }
    with _sink(args.out) as out:
        out.write(f"{result}\n")
    return EXIT_OK, graph_header(args.k, args.q), payload


def cmd_cycles(args):
    if args.length % 2 or args.length < 4:
        raise ValueError(f"--length must be even and at least 4, got {args.length}")
    g = make_graph(args.k, args.q)
    records = enumerate_cycles_through_anchor(g, args.length, _params(args))
    with _sink(args.out) as out:
        if args.format == "csv":
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(["type", "vertices"])
        for rec in records:
            t = [int(e) for e in rec.cycle_type]
            verts = [g.encode(v) for v in rec.vertices]
            if args.format == "json":
                out.write(json.dumps({"type": t, "vertices": verts}) + "\n")
            else:
                writer.writerow([" ".join(map(str, t)), " ".join(map(str, verts))])
    payload = {"length": args.length, "count": len(records), "format": args.format}
    return EXIT_OK, graph_header(args.k, args.q), payload


def cmd_verify(args):
    q = args.q
    if args.theorem == "4" and q is None:
        q = 3
    checks = run_checks(args.theorem, args.k, q, seed=args.seed, params=_params(args))
    with _sink(args.out) as out:
        for c in checks:
            out.write(c.line() + "\n")
    passed = all(c.passed for c in checks)
    payload = {
        "theorem": args.theorem,
        "passed": passed,
        "checks": [
            {"name": c.name, "passed": c.passed, "counterexample": c.counterexample} for c in checks
        ],
    }
    return (EXIT_OK if passed else EXIT_FAIL), graph_header(args.k, q), payload


def cmd_export(args):
    g = make_graph(args.k, args.q)
    if g.side_size > MAX_EXPORT_VERTICES:
        raise ResourceLimit(
            f"{g} has {g.side_size} vertices per side, export limit is {MAX_EXPORT_VERTICES}"
        )
    writer = write_alist if args.format == "alist" else write_edgelist
    with _sink(args.out) as out:
        writer(g, out)
    payload = {
        "format": args.format,
        "path": args.out,
        "vertices_per_side": g.side_size,
        "edges": g.counts()[2],
    }
    return EXIT_OK, graph_header(args.k, args.q), payload


# -- parser --------------------------------------------------------------------


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--workers",
        type=_positive,
        default=None,
        help=f"worker processes (default: ${ENV_WORKERS}, else the CPU count)",
    )
    common.add_argument("--out", metavar="PATH", default=None, help="write results here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="girthlab", description="Girth and short cycles of the graphs Lambda(k, q)."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("girth", parents=[common], help="girth of Lambda(k, q)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--max-length", type=int, default=None, help="give up beyond this length")
    p.set_defaults(func=cmd_girth)

    p = sub.add_parser("cycles", parents=[common], help="cycles through the all-zero edge")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_cycles)

    p = sub.add_parser("verify", parents=[common], help="closed forms against brute force")
    p.add_argument("--theorem", choices=THEOREMS, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", parents=[common], help="write the Tanner graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--format", choices=("alist", "edgelist"), default="alist")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        if args.workers is None:
            args.workers = default_workers()
        code, header, payload = args.func(args)
    except ResourceLimit as exc:
        print(f"girthlab: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print(f"girthlab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, IndexError, ArithmeticError) as exc:
        print(f"girthlab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.flush()
    report = {
        "command": args.command,
        "graph": header,
        "result": payload,
        "wall_time": round(time.perf_counter() - start, 6),
        "workers": args.workers,
    }
    print(json.dumps(report, sort_keys=True), file=sys.stderr)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
