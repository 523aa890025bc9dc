"""Command line front end.

    contact-curves count --n 1 --degree 3 --conditions 7,0
    contact-curves table --n 2 --degree 2 --format csv
    contact-curves graphs --N 3 --degree 2 --output census.jsonl
    contact-curves verify --scope p5-d2

Exit codes: 0 success, 2 usage error, 3 dimension mismatch,
4 internal verification failure.
"""
from __future__ import annotations

import argparse
import collections
import csv
import io
import json
import logging
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .bott import (
    DimensionMismatchError,
    IncidenceSpec,
    RunConfig,
    SpecError,
    VerificationError,
    count_many,
    draw_weights,
    full_table,
    graph_contributions,
    validate_spec,
)
from .cache import cache_dir, cached_graphs, census_path, save_census
from .checks import SCOPES, run_scope

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DIMENSION = 3
EXIT_VERIFICATION = 4

FORMATS = ("plain", "csv", "json", "markdown")


class UsageError(Exception):
    pass


def parse_vector(text: str, length: int, what: str) -> tuple[int, ...]:
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"{what} must be comma-separated integers, got {text!r}") from None
    if len(values) != length:
        raise UsageError(f"{what} needs exactly {length} entries (codimensions 2..{length + 1}), got {len(values)}")
    return values


# -- table rendering -------------------------------------------------------

def render_table(rows: Sequence[tuple[Sequence[int], int]], fmt: str, n: int | None = None, d: int | None = None) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["conditions", "count"])
        for cond, value in rows:
            writer.writerow([",".join(map(str, cond)), value])
        return buf.getvalue()
    if fmt == "json":
        items = [json.dumps({"conditions": list(cond), "count": str(value)}) for cond, value in rows]
        return "[\n" + ",\n".join(items) + "\n]\n" if items else "[]\n"
    if fmt == "markdown":
        width = len(rows[0][0]) if rows else 0
        names = ",".join(f"a_{c}" for c in range(2, width + 2))
        head = f"N_{d}(a)" if d is not None else "N(a)"
        lines = [f"| ({names}) | {head} |", "|---|---:|"]
        lines += [f"| ({','.join(map(str, cond))}) | {value} |" for cond, value in rows]
        return "\n".join(lines) + "\n"
    return "".join(f"({','.join(map(str, cond))})  {value}\n" for cond, value in rows)


def parse_table(text: str, fmt: str) -> list[tuple[tuple[int, ...], int]]:
    """Inverse of :func:`render_table` for the machine formats."""
    if fmt == "csv":
        reader = csv.reader(io.StringIO(text))
        header = next(reader)
        if header != ["conditions", "count"]:
            raise ValueError(f"unexpected CSV header {header}")
        return [(tuple(int(x) for x in c.split(",")), int(v)) for c, v in reader]
    if fmt == "json":
        return [(tuple(r["conditions"]), int(r["count"])) for r in json.loads(text)]
    raise ValueError(f"{fmt} is not a machine format")


# -- commands --------------------------------------------------------------

def _config(args) -> RunConfig:
    workers = args.workers if args.workers == "auto" else int(args.workers)
    return RunConfig(seed=args.seed, passes=args.passes, workers=workers, oracle_check=args.oracle_check)


def cmd_count(args, out) -> int:
    N = 2 * args.n + 1
    conditions = parse_vector(args.conditions, N - 1, "--conditions")
    degrees = parse_vector(args.degrees, N - 1, "--degrees") if args.degrees else None
    spec = IncidenceSpec(args.n, conditions, degrees)
    validate_spec(args.n, args.degree, spec)
    config = _config(args)
    (result,) = count_many(args.n, args.degree, [spec], config)
    if args.debug:
        seed, attempt = result.weight_seeds[0]
        for g, value in graph_contributions(args.n, args.degree, spec, draw_weights(N, seed, attempt)):
            print(f"# {g.code}  a_gamma={g.a_gamma}  {value}", file=sys.stderr)
    if args.format == "json":
        payload = {
            "n": args.n,
            "degree": args.degree,
            "conditions": list(conditions),
            "count": str(result.count),
            "graph_census_size": result.graph_census_size,
            "weight_seeds": [list(s) for s in result.weight_seeds],
        }
        if degrees:
            payload["degrees"] = list(degrees)
        out.write(json.dumps(payload) + "\n")
    elif args.format in ("csv", "markdown"):
        out.write(render_table([(conditions, result.count)], args.format, args.n, args.degree))
    else:
        out.write(f"{result.count}\n")
        out.write(
            f"# P^{N} degree {args.degree} conditions {spec}; {result.graph_census_size} graphs; "
            f"weight seeds {list(result.weight_seeds)}; {result.elapsed:.3f}s\n"
        )
    return EXIT_OK


def cmd_table(args, out) -> int:
    rows = [(s.conditions, c) for s, c in full_table(args.n, args.degree, _config(args))]
    out.write(render_table(rows, args.format, args.n, args.degree))
    return EXIT_OK


def cmd_graphs(args, out) -> int:
    if args.N is None and args.n is None:
        raise UsageError("graphs needs --N or --n")
    N = args.N if args.N is not None else 2 * args.n + 1
    if N < 1 or args.degree < 1:
        raise UsageError("N and degree must be positive")
    classes = cached_graphs(N, args.degree)
    if args.output:
        path = Path(args.output)
    else:
        path = census_path(cache_dir() or Path.cwd(), N, args.degree)
    save_census(path, N, args.degree, classes)
    out.write(f"classes: {len(classes)}\n")
    out.write(f"census: {path}\n")
    hist = collections.Counter(g.a_gamma for g in classes)
    for a in sorted(hist):
        out.write(f"a_gamma={a}: {hist[a]}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    results = run_scope(args.scope, _config(args))
    for r in results:
        out.write(r.line() + "\n")
    failed = sum(not r.passed for r in results)
    out.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    return EXIT_OK if not failed else EXIT_VERIFICATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="contact-curves",
        description="Count rational contact curves in P^(2n+1) by torus localization.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def engine_options(p):
        p.add_argument("--seed", type=int, default=RunConfig.seed)
        p.add_argument("--passes", type=int, default=2, help="independent weight draws (>= 2)")
        p.add_argument("--workers", default="1", help="worker processes, or 'auto'")
        p.add_argument("--oracle-check", action="store_true", help="use the Chern-character route for incidence classes")

    p = sub.add_parser("count", help="count curves for one set of conditions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degree", "-d", type=int, required=True)
    p.add_argument("--conditions", required=True, help="a_2,...,a_{2n+1}")
    p.add_argument("--degrees", help="optional degree of each condition's subvariety")
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.add_argument("--debug", action="store_true", help="print per-graph terms to stderr")
    engine_options(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="counts for every admissible set of conditions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degree", "-d", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="plain")
    engine_options(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("graphs", help="write the fixed-graph census")
    p.add_argument("--N", type=int, help="fixed points are 0..N")
    p.add_argument("--n", type=int, help="shorthand for N = 2n+1")
    p.add_argument("--degree", "-d", type=int, required=True)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_graphs)

    p = sub.add_parser("verify", help="reproduce reference tables and run the property suite")
    p.add_argument("--scope", choices=sorted(SCOPES), default="p3")
    engine_options(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DimensionMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIMENSION
    except SpecError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
