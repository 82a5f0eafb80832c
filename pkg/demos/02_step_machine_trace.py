"""Watch the step machine answer a recognition query one hop at a time.

A query (p, c) becomes a text configuration `target#visited|frontier`; the
transition function pops one frontier node per application until it either
finds the target (ACCEPT) or runs out of nodes to explore (REJECT). The
verdict always equals recognize(p, c) -- the machine is the same closure
walk, made inspectable.
"""

from relgraph import (
    RelationGraph,
    encode,
    parse_configuration,
    recognize,
    render_configuration,
    render_trace,
    run,
    step,
    validate_string,
)

g = RelationGraph()
for name in ["dog", "mammal", "vertebrate", "animal"]:
    g.sensation(validate_string(name))
dog, mammal, vertebrate, animal = (
    validate_string(n) for n in ["dog", "mammal", "vertebrate", "animal"]
)
g.induction(dog, mammal)
g.induction(mammal, vertebrate)
g.induction(vertebrate, animal)

# The initial configuration just encodes the query: seek `animal` from `dog`.
config = encode(dog, animal)
print("initial:", render_configuration(config))

# Drive the machine by hand, one application at a time.
while True:
    result = step(g, config)
    if not hasattr(result, "frontier"):  # a Verdict, not a Configuration
        print("verdict:", result.value)
        break
    config = result
    print("        ", render_configuration(config))

# `run` does the same loop with a step budget and returns the full trace.
trace = run(g, dog, animal)
print("\nfull trace via run():")
print(render_trace(trace), end="")
print("step count:", trace.step_count)
print("matches recognize():", trace.verdict is recognize(g, dog, animal))

# Queries against the edge direction exhaust the frontier immediately.
print("\nreverse query trace:")
print(render_trace(run(g, animal, dog)), end="")

# Rendered configurations are plain text and round-trip exactly.
line = "animal#dog|mammal"
print("\nparsed-and-rendered:", render_configuration(parse_configuration(line)) == line)
