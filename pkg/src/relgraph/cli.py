"""Command-line driver tying the store, queries, machine and probe together.

Exit codes: 0 success, 1 a checked expectation failed (--expect), 2 usage
error, 3 data error (unreadable files, bad corpus/snapshot content, unknown
query nodes, exhausted step budgets).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .corpus import ingest, load_snapshot, parse_corpus, save_snapshot
from .errors import RelationError
from .machine import render_trace, run
from .model import Verdict, validate_string
from .probe import MeasuredOp, ShapeKind, StoreShape, fit_exponent, measure, samples_to_csv
from .recognition import deduction, recognize, reduction
from .store import RelationGraph

_SHAPES = {
    "chain": ShapeKind.CHAIN,
    "tree": ShapeKind.K_ARY_TREE,
    "dag": ShapeKind.RANDOM_DAG,
}


def _load_store(path: str | None) -> RelationGraph:
    if path is None:
        return RelationGraph()
    return load_snapshot(Path(path).read_bytes())


def _cmd_ingest(args) -> int:
    corpus_text = Path(args.corpus).read_text(encoding="utf-8")
    graph = _load_store(args.store)
    lines = parse_corpus(corpus_text)
    report = ingest(graph, lines)
    sys.stdout.write(report.render())
    if args.out:
        Path(args.out).write_bytes(save_snapshot(graph))
    return 0


def _cmd_query(args) -> int:
    graph = _load_store(args.store)
    origin = validate_string(args.string)
    query = deduction if args.direction == "dq" else reduction
    result = query(graph, origin)
    for s in result.reached:
        print(s.text)
    return 0


def _cmd_recognize(args) -> int:
    graph = _load_store(args.store)
    p = validate_string(args.p)
    c = validate_string(args.c)
    verdict = recognize(graph, p, c)
    print(verdict.value)
    if args.expect is None:
        return 0
    expected = Verdict.ACCEPT if args.expect == "accept" else Verdict.REJECT
    return 0 if verdict is expected else 1


def _cmd_run(args) -> int:
    graph = _load_store(args.store)
    p = validate_string(args.p)
    c = validate_string(args.c)
    trace = run(graph, p, c, max_steps=args.max_steps)
    rendered = render_trace(trace)
    sys.stdout.write(rendered)
    if args.trace:
        Path(args.trace).write_text(rendered, encoding="utf-8")
    return 0


def _csv_ints(raw: str) -> list[int]:
    try:
        return [int(field) for field in raw.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected a comma-separated integer list, got {raw!r}"
        ) from None


def _cmd_bench(args) -> int:
    sizes = args.sizes
    shape = StoreShape(
        kind=_SHAPES[args.shape],
        node_count=sizes[0],
        branching=args.branching,
        seed=args.seed,
    )
    samples = []
    fits = {}
    for op_name in MeasuredOp:
        op_samples = measure(shape, op_name, sizes, repeats=args.repeats)
        samples.extend(op_samples)
        fits[op_name] = fit_exponent(op_samples)
    table = samples_to_csv(samples, fits)
    if args.csv:
        Path(args.csv).write_text(table, encoding="utf-8")
    else:
        sys.stdout.write(table)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relgraph",
        description="Store strings, assert member->class relations, and query them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_ingest = sub.add_parser("ingest", help="apply a corpus file to a store")
    p_ingest.add_argument("corpus", help="corpus file to apply")
    p_ingest.add_argument("--store", help="snapshot to start from (default: empty store)")
    p_ingest.add_argument("--out", help="write the resulting snapshot here")
    p_ingest.set_defaults(fn=_cmd_ingest)

    p_query = sub.add_parser("query", help="list transitive classes (dq) or members (rq)")
    p_query.add_argument("direction", choices=["dq", "rq"])
    p_query.add_argument("string")
    p_query.add_argument("--store", required=True)
    p_query.set_defaults(fn=_cmd_query)

    p_rec = sub.add_parser("recognize", help="print the ACCEPT/REJECT verdict for (p, c)")
    p_rec.add_argument("p")
    p_rec.add_argument("c")
    p_rec.add_argument("--store", required=True)
    p_rec.add_argument(
        "--expect",
        choices=["accept", "reject"],
        help="exit 1 unless the verdict matches",
    )
    p_rec.set_defaults(fn=_cmd_recognize)

    p_run = sub.add_parser("run", help="run the step machine and print its trace")
    p_run.add_argument("p")
    p_run.add_argument("c")
    p_run.add_argument("--store", required=True)
    p_run.add_argument(
        "--max-steps",
        type=int,
        default=None,
        help="step budget (default: node count + 1, which always suffices)",
    )
    p_run.add_argument("--trace", help="also write the trace to this file")
    p_run.set_defaults(fn=_cmd_run)

    p_bench = sub.add_parser("bench", help="time store operations across sizes and fit exponents")
    p_bench.add_argument("--shape", choices=sorted(_SHAPES), required=True)
    p_bench.add_argument(
        "--sizes",
        type=_csv_ints,
        required=True,
        help="comma-separated node counts, ascending, at least 4 of them",
    )
    p_bench.add_argument("--repeats", type=int, default=5)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--branching", type=int, default=2, help="fan-out for tree/dag shapes")
    p_bench.add_argument("--csv", help="write the table to this file instead of stdout")
    p_bench.set_defaults(fn=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as exc:
        # Library precondition violations (bad sizes, repeats, max-steps).
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (RelationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
