"""Empirical scaling probe: does storage and recognition cost grow polynomially?

The probe builds synthetic stores of increasing size from three canonical
shapes, times one operation per size (median of repeats, monotonic clock),
and fits a straight line through the (log size, log seconds) points. The
slope of that line is the measured scaling exponent: ~1 for linear work,
~2 for quadratic, and so on.

Methodology choices, fixed here so results are comparable run to run:
sizes should grow geometrically (doubling) so the log-log fit is evenly
weighted; query timings use a fixed-size batch of seeded-random origins so
single-query jitter averages out; measurements are single-threaded.
"""

from __future__ import annotations

import gc
import math
import random
import time
from dataclasses import dataclass, replace
from enum import Enum
from statistics import median
from typing import Mapping, Sequence

import numpy as np

from .errors import DegenerateFitError
from .model import SymString
from .recognition import deduction, recognize, reduction
from .store import RelationGraph

QUERY_BATCH = 32
_TIMER_FLOOR = 1e-9  # perf_counter resolution guard; samples must be positive


class ShapeKind(Enum):
    CHAIN = "chain"
    K_ARY_TREE = "tree"
    RANDOM_DAG = "dag"


class MeasuredOp(Enum):
    INGEST = "INGEST"
    DEDUCTION = "DEDUCTION"
    REDUCTION = "REDUCTION"
    RECOGNIZE = "RECOGNIZE"


@dataclass(frozen=True)
class StoreShape:
    """Recipe for one synthetic store; equal shapes build equal graphs."""

    kind: ShapeKind
    node_count: int
    branching: int = 2
    seed: int = 0

    def __post_init__(self):
        if self.node_count < 1:
            raise ValueError("node_count must be positive")
        if self.branching < 1:
            raise ValueError("branching must be positive")


@dataclass(frozen=True)
class Sample:
    """One timing point: how long ``op_name`` took at store size ``size``."""

    size: int
    op_name: MeasuredOp
    elapsed: float
    repeats: int

    def __post_init__(self):
        if self.elapsed <= 0:
            raise ValueError("elapsed must be positive")
        if self.repeats < 3:
            raise ValueError("at least 3 repeats are required")


@dataclass(frozen=True)
class ScalingFit:
    """Least-squares slope of log(elapsed) against log(size)."""

    exponent: float
    r_squared: float

    def __post_init__(self):
        if not math.isfinite(self.exponent):
            raise ValueError("exponent must be finite")


def _label(index: int) -> SymString:
    # Fixed width keeps text order equal to numeric order.
    return SymString(f"n{index:07d}")


def _build_instructions(
    shape: StoreShape,
) -> tuple[list[SymString], list[tuple[SymString, SymString]]]:
    """Deterministic node and edge lists for a shape.

    Edges are emitted member-first in ascending index order, which keeps the
    incremental cycle check cheap during ingestion (the class end of each new
    edge never has outgoing edges yet on chains, and only its ancestor chain
    on trees).
    """
    n = shape.node_count
    nodes = [_label(i) for i in range(n)]
    edges: list[tuple[SymString, SymString]] = []
    if shape.kind is ShapeKind.CHAIN:
        edges = [(nodes[i], nodes[i + 1]) for i in range(n - 1)]
    elif shape.kind is ShapeKind.K_ARY_TREE:
        # Child points at its parent, so every node reaches the root.
        edges = [(nodes[i], nodes[(i - 1) // shape.branching]) for i in range(1, n)]
    elif shape.kind is ShapeKind.RANDOM_DAG:
        rng = random.Random(shape.seed)
        for i in range(n - 1):
            span = n - 1 - i
            fan = rng.randint(0, min(shape.branching, span))
            for j in sorted(rng.sample(range(i + 1, n), fan)):
                edges.append((nodes[i], nodes[j]))
    else:  # pragma: no cover - enum is closed
        raise ValueError(f"unknown shape kind {shape.kind}")
    return nodes, edges


def generate_store(shape: StoreShape) -> RelationGraph:
    """Build the synthetic store described by ``shape``.

    Identical shapes (same kind, node_count, branching, seed) produce graphs
    with identical canonical snapshots. Edge counts are exact for CHAIN and
    K_ARY_TREE: node_count - 1.
    """
    nodes, edges = _build_instructions(shape)
    graph = RelationGraph()
    for s in nodes:
        graph.sensation(s)
    for member, class_ in edges:
        graph.induction(member, class_)
    return graph


def _time_once(fn) -> float:
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


def measure(
    shape: StoreShape,
    op_name: MeasuredOp,
    sizes: Sequence[int],
    repeats: int = 5,
    query_batch: int = QUERY_BATCH,
) -> list[Sample]:
    """Time ``op_name`` across a family of stores, one Sample per size.

    ``shape`` acts as the family template: its kind, branching and seed are
    kept while node_count is replaced by each entry of ``sizes``. Sizes must
    be strictly increasing with at least 4 entries; repeats at least 3.

    One batch is a full store build (INGEST) or ``query_batch`` queries whose
    origins sit at seeded-random fractional positions, identical across
    sizes. Elapsed is the median over ``repeats`` timed batches, collected in
    rounds interleaved across sizes.
    """
    if len(sizes) < 4:
        raise ValueError("at least 4 sizes are required for a meaningful fit")
    if any(a >= b for a, b in zip(sizes, sizes[1:])):
        raise ValueError("sizes must be strictly increasing")
    if repeats < 3:
        raise ValueError("at least 3 repeats are required")

    # Query positions are drawn once as fractions of the store size, so every
    # size measures the same relative workload and the fit sees pure scaling.
    rng = random.Random(f"{shape.seed}:{op_name.value}")
    fractions = [(rng.random(), rng.random()) for _ in range(query_batch)]

    batches = [
        _prepare_batch(replace(shape, node_count=size), op_name, fractions)
        for size in sizes
    ]

    # Interleave repeats across sizes so a burst of background load spreads
    # over every size instead of skewing one point. Collector pauses would do
    # the same, so time with it off (nothing here creates reference cycles;
    # refcounting reclaims everything). The first round is an untimed warmup.
    timings: list[list[float]] = [[] for _ in sizes]
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        for batch in batches:
            batch()
        for _ in range(repeats):
            for slot, batch in enumerate(batches):
                timings[slot].append(_time_once(batch))
    finally:
        if gc_was_enabled:
            gc.enable()

    return [
        Sample(
            size=size,
            op_name=op_name,
            elapsed=max(median(times), _TIMER_FLOOR),
            repeats=repeats,
        )
        for size, times in zip(sizes, timings)
    ]


def _prepare_batch(shape, op_name, fractions):
    """Zero-argument callable running one timed batch at this store size."""
    nodes, edges = _build_instructions(shape)
    if op_name is MeasuredOp.INGEST:

        def one_batch():
            graph = RelationGraph()
            for s in nodes:
                graph.sensation(s)
            for member, class_ in edges:
                graph.induction(member, class_)

        return one_batch

    graph = generate_store(shape)
    n = shape.node_count
    if op_name is MeasuredOp.RECOGNIZE:
        pairs = [(nodes[int(f * n)], nodes[int(g * n)]) for f, g in fractions]

        def one_batch():
            for p, c in pairs:
                recognize(graph, p, c)

        return one_batch

    query = deduction if op_name is MeasuredOp.DEDUCTION else reduction
    origins = [nodes[int(f * n)] for f, _ in fractions]

    def one_batch():
        for origin in origins:
            query(graph, origin)

    return one_batch


def fit_exponent(samples: Sequence[Sample]) -> ScalingFit:
    """Slope and goodness of fit of log(elapsed) vs log(size).

    Recovers exact power laws to within float precision: elapsed = k * size^a
    yields exponent a. Raises DegenerateFitError below 4 samples or with any
    repeated size (no size variance to fit against).
    """
    if len(samples) < 4:
        raise DegenerateFitError("need at least 4 samples to fit an exponent")
    sizes = [s.size for s in samples]
    if len(set(sizes)) != len(sizes):
        raise DegenerateFitError("sample sizes must be distinct")
    x = np.log(np.array(sizes, dtype=float))
    y = np.log(np.array([s.elapsed for s in samples], dtype=float))
    slope, intercept = np.polyfit(x, y, 1)
    predicted = slope * x + intercept
    ss_res = float(np.sum((y - predicted) ** 2))
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    r_squared = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return ScalingFit(exponent=float(slope), r_squared=r_squared)


def samples_to_csv(
    samples: Sequence[Sample],
    fits: Mapping[MeasuredOp, ScalingFit] | None = None,
) -> str:
    """Render samples as the headered table consumed by the bench command.

    Columns: size,op,elapsed_seconds,repeats. Fits, when given, are appended
    as '# fit' summary lines.
    """
    lines = ["size,op,elapsed_seconds,repeats"]
    for s in samples:
        lines.append(f"{s.size},{s.op_name.value},{s.elapsed:.9f},{s.repeats}")
    if fits:
        for op_name in sorted(fits, key=lambda op: op.value):
            fit = fits[op_name]
            lines.append(
                f"# fit {op_name.value} exponent={fit.exponent:.4f} "
                f"r_squared={fit.r_squared:.4f}"
            )
    return "\n".join(lines) + "\n"
