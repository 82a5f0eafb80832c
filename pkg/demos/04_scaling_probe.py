"""Measure how store operations scale and fit the exponent.

Synthetic stores of doubling sizes are built from a shape recipe, each
operation is timed (median of repeats), and a least-squares line through the
log-log points gives the scaling exponent: ~1 means linear cost, ~2 would
mean quadratic. Sizes here are kept small so the demo runs in seconds; the
shipped defaults go up to 8000-node chains.
"""

from relgraph import (
    MeasuredOp,
    Sample,
    ShapeKind,
    StoreShape,
    fit_exponent,
    generate_store,
    measure,
    samples_to_csv,
)

# Shapes are recipes: equal recipe, equal store, byte for byte.
shape = StoreShape(kind=ShapeKind.CHAIN, node_count=250, seed=7)
g = generate_store(shape)
print(f"chain store: {g.node_count} nodes, {g.edge_count} edges")

tree = generate_store(StoreShape(ShapeKind.K_ARY_TREE, node_count=15, branching=2))
print(f"tree store:  {tree.node_count} nodes, {tree.edge_count} edges")

dag = generate_store(StoreShape(ShapeKind.RANDOM_DAG, node_count=30, branching=3, seed=7))
print(f"dag store:   {dag.node_count} nodes, {dag.edge_count} edges")

# Sanity-check the fitter on exact power laws before trusting it on timings.
linear = [
    Sample(size=n, op_name=MeasuredOp.INGEST, elapsed=2.0 * n, repeats=3)
    for n in (100, 200, 400, 800)
]
quadratic = [
    Sample(size=n, op_name=MeasuredOp.INGEST, elapsed=float(n) ** 2, repeats=3)
    for n in (100, 200, 400, 800)
]
print("\nexact 2n data fits exponent", f"{fit_exponent(linear).exponent:.6f}")
print("exact n^2 data fits exponent", f"{fit_exponent(quadratic).exponent:.6f}")

# Now measure the real thing on a doubling ladder of chain stores.
sizes = [500, 1000, 2000, 4000]
samples = []
fits = {}
for op in MeasuredOp:
    op_samples = measure(shape, op, sizes=sizes, repeats=5)
    samples.extend(op_samples)
    fits[op] = fit_exponent(op_samples)

print("\n" + samples_to_csv(samples, fits))
print("An exponent near 1 with high r_squared means the operation scales")
print("linearly over this range; well below 1 means size barely matters.")
