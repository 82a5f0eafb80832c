"""Build a tiny taxonomy by hand and query it.

The store keeps every string once, readable from two mirrored sides, and a
set of member->class edges between stored strings. Strings go in first
(sensation), relations second (induction); queries then walk the edges
transitively in either direction.
"""

from relgraph import (
    CycleError,
    RelationGraph,
    Side,
    UnknownNodeError,
    deduction,
    recognize,
    reduction,
    validate_string,
)

g = RelationGraph()

# Store the vocabulary. Each call places the string on both sides at once.
for name in ["dog", "cat", "mammal", "animal"]:
    g.sensation(validate_string(name))

print("stored:", [s.text for s in g.nodes()])
print("perceptual side:", [s.text for s in g.side_view(Side.PERCEPTUAL)])
print("conceptual side:", [s.text for s in g.side_view(Side.CONCEPTUAL)])
# The two views are the same set: that's the mirror.

# Relate them. Both endpoints must already be stored.
dog = validate_string("dog")
cat = validate_string("cat")
mammal = validate_string("mammal")
animal = validate_string("animal")

g.induction(dog, mammal)
g.induction(cat, mammal)
g.induction(mammal, animal)
print("\nedges:", [(e.member.text, e.class_.text) for e in g.edges()])

# Relating unknown strings is an ordering mistake, not an auto-create:
try:
    g.induction(dog, validate_string("pet"))
except UnknownNodeError as err:
    print("rejected:", err)

# Edges that would close a loop are refused, with the offending path shown:
try:
    g.induction(animal, dog)
except CycleError as err:
    print("rejected:", err)

# Upward closure: everything dog is transitively a member of.
print("\ndog's classes:", [s.text for s in deduction(g, dog).reached])
# Downward closure: everything that is transitively a member of animal.
print("animal's members:", [s.text for s in reduction(g, animal).reached])

# Recognition is total: unknown strings simply reject.
for p, c in [("dog", "animal"), ("animal", "dog"), ("dog", "dog"), ("dog", "zebra")]:
    verdict = recognize(g, validate_string(p), validate_string(c))
    print(f"recognize({p}, {c}) = {verdict.value}")

# Re-running inputs changes nothing: duplicates are silent no-ops.
before = g.revision
g.sensation(dog)
g.induction(dog, mammal)
print("\nrevision unchanged by duplicates:", g.revision == before)
