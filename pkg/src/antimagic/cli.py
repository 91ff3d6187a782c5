"""Command-line front end: ``orient``, ``verify``, ``gen`` and ``x0``.

Exit codes: 0 success, 1 bad input or parameters, 2 no verified labeling
could be constructed, 3 the checked labeling is not antimagic.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from . import formats
from .errors import AntimagicError, GraphError, InvalidParams, LayoutError
from .gen import ComponentSpec, assemble, shuffled
from .graph import build_graph
from .layout import DEFAULT_RETRY_BUDGET
from .orient import OrientedGraph
from .pipeline import construct
from .verify import check_antimagic, verify_construction
from .x0 import solve_x0

EXIT_OK, EXIT_INPUT, EXIT_INFEASIBLE, EXIT_NOT_ANTIMAGIC = 0, 1, 2, 3

log = logging.getLogger("antimagic")


def _fail(code: int, message: str) -> int:
    print(message, file=sys.stderr)
    return code


def _emit(text: str, output: str | None) -> None:
    if output in (None, "-"):
        sys.stdout.write(text)
    else:
        formats.write_atomic(output, text)


def _load_graph(path: str):
    n, edges = formats.parse_instance(Path(path).read_text())
    return build_graph(edges, n)


def cmd_orient(args: argparse.Namespace) -> int:
    try:
        g = _load_graph(args.input)
    except (OSError, formats.FormatError) as exc:
        return _fail(EXIT_INPUT, f"input error: {exc}")
    except GraphError as exc:
        return _fail(EXIT_INPUT, f"{type(exc).__name__}: {exc}")

    try:
        c = construct(g, seed=args.seed, retry_budget=args.retry_budget)
    except LayoutError as exc:
        return _fail(EXIT_INFEASIBLE, f"{type(exc).__name__}: {exc}")

    report = verify_construction(c)
    if not report.all_ok:
        failed = [name for name, ok in report.invariant_results.items() if not ok]
        detail = "; ".join(report.problems[:5] + [f"failed: {', '.join(failed)}"])
        return _fail(EXIT_INFEASIBLE, f"construction did not verify: {detail}")

    result = formats.result_from_construction(c, report)
    render = {"text": formats.format_result, "json": formats.format_result_json, "dot": formats.format_dot}
    _emit(render[args.format](result), args.output)
    log.info("d=%d q=%d k=%d m=%d: antimagic labeling verified", c.d, c.q, c.k, c.labeling.m)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        result = formats.parse_result(Path(args.result).read_text())
        n, edges = formats.parse_instance(Path(args.instance).read_text())
    except (OSError, formats.FormatError) as exc:
        return _fail(EXIT_INPUT, f"input error: {exc}")

    m = len(edges)
    index = {frozenset(e): i for i, e in enumerate(edges)}
    arcs: list[tuple[int, int] | None] = [None] * m
    labels = [0] * m
    for tail, head, lab in result.arcs:
        eid = index.get(frozenset((tail, head)))
        if eid is None or tail == head:
            return _fail(EXIT_INPUT, f"arc {tail}->{head} is not an edge of the instance")
        if arcs[eid] is not None:
            return _fail(EXIT_INPUT, f"edge {tail}-{head} appears twice")
        if not 1 <= lab <= m:
            return _fail(EXIT_INPUT, f"label {lab} outside [1, {m}]")
        arcs[eid] = (tail, head)
        labels[eid] = lab
    if any(a is None for a in arcs):
        return _fail(EXIT_INPUT, f"{arcs.count(None)} instance edges have no arc")

    report = check_antimagic(OrientedGraph(n, tuple(arcs)), labels)
    if result.vertex_sums and result.vertex_sums != report.sums:
        print("warning: stored vertex sums differ from the recomputed ones", file=sys.stderr)
    if not report.bijection_ok:
        return _fail(EXIT_NOT_ANTIMAGIC, "labels are not a bijection onto [1, m]")
    if report.collisions:
        shown = ", ".join(f"{u}~{v}" for u, v in report.collisions[:10])
        return _fail(EXIT_NOT_ANTIMAGIC, f"not antimagic: {len(report.collisions)} collisions ({shown})")
    print(f"antimagic: {n} vertices, {m} arcs, all vertex-sums distinct")
    return EXIT_OK


def _parse_orders(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"orders must be comma-separated integers: {text!r}")


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        g, report = assemble(ComponentSpec(args.d, args.orders))
        if args.shuffle is not None:
            g = shuffled(g, args.shuffle)
    except (InvalidParams, GraphError) as exc:
        return _fail(EXIT_INPUT, f"{type(exc).__name__}: {exc}")
    _emit(formats.format_instance(g), args.output)
    print(report.describe(), file=sys.stderr)
    return EXIT_OK


def cmd_x0(args: argparse.Namespace) -> int:
    try:
        res = solve_x0(args.k, args.d)
    except InvalidParams as exc:
        return _fail(EXIT_INPUT, f"InvalidParams: {exc}")
    if res is None:
        print("none (k <= 5d+4)")
    else:
        print(f"x0={res.x0} min_first_order={res.min_first_order}")
    return EXIT_OK


def _default_seed() -> int:
    raw = os.environ.get("ANTIMAGIC_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="antimagic", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orient", help="construct and verify an antimagic orientation")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--retry-budget", type=int, default=DEFAULT_RETRY_BUDGET)
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p.set_defaults(func=cmd_orient)

    p = sub.add_parser("verify", help="check a result file against its instance")
    p.add_argument("result")
    p.add_argument("instance")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a disjoint union of circulant graphs")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--orders", type=_parse_orders, required=True)
    p.add_argument("--shuffle", type=int, metavar="SEED", help="randomly relabel vertices")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("x0", help="solve for x0 and the minimum first odd order")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_x0)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except AntimagicError as exc:
        return _fail(EXIT_INPUT, f"{type(exc).__name__}: {exc}")


if __name__ == "__main__":
    sys.exit(main())
