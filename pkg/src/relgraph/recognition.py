"""Closure queries over the store: upward, downward, and the accept predicate.

``deduction`` walks member->class edges transitively (everything the origin
is a member of, directly or through intermediate classes); ``reduction``
walks the same edges backwards (everything that is a member of the origin).
``recognize`` is the total accept/reject predicate built on the upward walk.

All three are read-only; they never change the store's revision.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

from .errors import UnknownNodeError
from .model import SymString, Verdict
from .store import RelationGraph


class Direction(Enum):
    UPWARD = "upward"  # member -> class, following edges
    DOWNWARD = "downward"  # class -> member, against edges


@dataclass(frozen=True)
class ClosureResult:
    """Everything reachable from ``origin`` in one direction.

    ``reached`` is sorted by text, has no duplicates, and never contains the
    origin itself (the store is acyclic, so it cannot).
    """

    origin: SymString
    direction: Direction
    reached: tuple[SymString, ...]

    def __post_init__(self):
        if self.origin in self.reached:
            raise ValueError("closure result may not contain its origin")

    def __contains__(self, s: SymString) -> bool:
        return s in self.reached


def _closure(
    graph: RelationGraph, origin: SymString, direction: Direction
) -> ClosureResult:
    if not graph.contains(origin):
        raise UnknownNodeError(origin.text)
    neighbours = (
        graph.children_of if direction is Direction.UPWARD else graph.parents_of
    )
    seen: set[SymString] = set()
    queue = deque([origin])
    while queue:
        node = queue.popleft()
        for nxt in neighbours(node):
            if nxt not in seen and nxt != origin:
                seen.add(nxt)
                queue.append(nxt)
    return ClosureResult(origin=origin, direction=direction, reached=tuple(sorted(seen)))


def deduction(graph: RelationGraph, origin: SymString) -> ClosureResult:
    """All classes of ``origin``, transitively: classes, classes of classes, ...

    Raises UnknownNodeError when the origin was never stored: enumerating
    from a nonexistent node is a caller mistake, unlike ``recognize`` which
    stays total.
    """
    return _closure(graph, origin, Direction.UPWARD)


def reduction(graph: RelationGraph, origin: SymString) -> ClosureResult:
    """All members of ``origin``, transitively: members, members of members, ..."""
    return _closure(graph, origin, Direction.DOWNWARD)


def recognize(graph: RelationGraph, p: SymString, c: SymString) -> Verdict:
    """ACCEPT iff ``c`` is ``p`` itself (and stored) or a transitive class of ``p``.

    Total over all valid strings: anything absent from the store yields
    REJECT, never an error.
    """
    if not graph.contains(p):
        return Verdict.REJECT
    if p == c:
        return Verdict.ACCEPT
    # Upward search with early exit; equivalent to c in deduction(...).reached.
    seen: set[SymString] = set()
    queue = deque([p])
    while queue:
        node = queue.popleft()
        for nxt in graph.children_of(node):
            if nxt == c:
                return Verdict.ACCEPT
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return Verdict.REJECT
