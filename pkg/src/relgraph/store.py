"""The mirrored dual store: correspondence pairs plus a member-class DAG.

A RelationGraph holds every stored string once, viewable from either side
(perceptual or conceptual — the mirror), and a set of directed member->class
edges that must stay acyclic. Two mutations exist:

* ``sensation`` stores a string on both sides (a MirrorPair),
* ``induction`` asserts one member->class edge between stored strings.

Nothing is ever removed. Both mutations are idempotent no-ops on duplicates.

Concurrency contract: single writer, multiple readers. Mutations validate
before they touch any internal structure, so readers never observe a
partially-applied change; queries never mutate.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .errors import CycleError, SelfMembershipError, UnknownNodeError
from .model import Side, SymString


@dataclass(frozen=True)
class MirrorPair:
    """One stored string in both of its roles.

    The correspondence is textual identity, so both fields always carry the
    same text; they differ only in which side they are read from.
    """

    perceptual: SymString
    conceptual: SymString

    def __post_init__(self):
        if self.perceptual.text != self.conceptual.text:
            raise ValueError(
                f"correspondence is identity: {self.perceptual.text!r} "
                f"!= {self.conceptual.text!r}"
            )

    @classmethod
    def of(cls, s: SymString) -> "MirrorPair":
        return cls(perceptual=s, conceptual=s)

    def side(self, side: Side) -> SymString:
        return self.perceptual if side is Side.PERCEPTUAL else self.conceptual


@dataclass(frozen=True, order=True)
class MemberClassEdge:
    """One member->class assertion between two stored strings."""

    member: SymString
    class_: SymString

    def __post_init__(self):
        if self.member == self.class_:
            raise SelfMembershipError(self.member.text)


class RelationGraph:
    """Mutable dual store. See the module docstring for the contract."""

    __slots__ = ("_nodes", "_children", "_parents", "_edge_count", "_revision")

    def __init__(self):
        self._nodes: set[SymString] = set()
        # member -> set of direct classes, and the reverse view.
        self._children: dict[SymString, set[SymString]] = {}
        self._parents: dict[SymString, set[SymString]] = {}
        self._edge_count = 0
        self._revision = 0

    # -- queries ---------------------------------------------------------

    @property
    def revision(self) -> int:
        """Monotone counter, bumped once per effective mutation."""
        return self._revision

    @property
    def node_count(self) -> int:
        return len(self._nodes)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def contains(self, s: SymString) -> bool:
        """True iff a mirror pair for ``s`` exists."""
        return s in self._nodes

    def __contains__(self, s: SymString) -> bool:
        return self.contains(s)

    def children_of(self, s: SymString) -> frozenset[SymString]:
        """Direct classes of ``s``; empty for unknown or edge-less nodes."""
        return frozenset(self._children.get(s, ()))

    def parents_of(self, s: SymString) -> frozenset[SymString]:
        """Direct members of ``s``; empty for unknown or edge-less nodes."""
        return frozenset(self._parents.get(s, ()))

    def nodes(self) -> list[SymString]:
        """All stored strings in sorted text order."""
        return sorted(self._nodes)

    def pairs(self) -> list[MirrorPair]:
        """All correspondence pairs in sorted text order."""
        return [MirrorPair.of(s) for s in self.nodes()]

    def side_view(self, side: Side) -> list[SymString]:
        """The store as seen from one side. Both views are identical sets."""
        return [pair.side(side) for pair in self.pairs()]

    def edges(self) -> list[MemberClassEdge]:
        """All edges sorted by (member, class) text order."""
        out = [
            MemberClassEdge(member, class_)
            for member, classes in self._children.items()
            for class_ in classes
        ]
        out.sort()
        return out

    def iter_edges(self) -> Iterator[tuple[SymString, SymString]]:
        """Unordered (member, class) pairs; cheap iteration for callers that
        sort or aggregate themselves."""
        for member, classes in self._children.items():
            for class_ in classes:
                yield member, class_

    # -- mutations -------------------------------------------------------

    def sensation(self, s: SymString) -> bool:
        """Store ``s`` on both sides. Returns True if it was new.

        Re-inserting an existing string is a no-op and does not bump the
        revision. Never touches edges.
        """
        if s in self._nodes:
            return False
        self._nodes.add(s)
        self._children[s] = set()
        self._parents[s] = set()
        self._revision += 1
        return True

    def induction(self, member: SymString, class_: SymString) -> bool:
        """Assert the edge member -> class. Returns True if it was new.

        Both endpoints must already be stored (sensation comes first); the
        edge may not be a self-loop and may not close a cycle. Duplicate
        edges are no-ops without a revision bump.
        """
        if member not in self._nodes:
            raise UnknownNodeError(member.text)
        if class_ not in self._nodes:
            raise UnknownNodeError(class_.text)
        if member == class_:
            raise SelfMembershipError(member.text)
        if class_ in self._children[member]:
            return False
        witness = self._find_path(class_, member)
        if witness is not None:
            raise CycleError(
                member.text, class_.text, tuple(s.text for s in witness)
            )
        self._children[member].add(class_)
        self._parents[class_].add(member)
        self._edge_count += 1
        self._revision += 1
        return True

    @classmethod
    def restore(
        cls,
        nodes: list[SymString],
        edges: list[tuple[SymString, SymString]],
        revision: int,
    ) -> "RelationGraph":
        """Rebuild a graph from persisted content, revalidating everything.

        Raises the same errors as sensation/induction on bad content; the
        revision is set to the persisted value, not recomputed.
        """
        if revision < 0:
            raise ValueError("revision must be non-negative")
        graph = cls()
        for s in nodes:
            graph.sensation(s)
        for member, class_ in edges:
            graph.induction(member, class_)
        graph._revision = revision
        return graph

    # -- internals -------------------------------------------------------

    def _find_path(self, src: SymString, dst: SymString) -> list[SymString] | None:
        """Shortest member->class path from src to dst, or None.

        Used as the cycle witness: if the proposed class already reaches the
        proposed member, the new edge would close a loop.
        """
        if src == dst:
            return [src]
        came_from: dict[SymString, SymString] = {}
        queue = deque([src])
        while queue:
            node = queue.popleft()
            for nxt in self._children[node]:
                if nxt in came_from or nxt == src:
                    continue
                came_from[nxt] = node
                if nxt == dst:
                    path = [nxt]
                    while path[-1] != src:
                        path.append(came_from[path[-1]])
                    path.reverse()
                    return path
                queue.append(nxt)
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RelationGraph):
            return NotImplemented
        return (
            self._nodes == other._nodes
            and self._children == other._children
            and self._revision == other._revision
        )

    def __repr__(self) -> str:
        return (
            f"RelationGraph(nodes={self.node_count}, edges={self.edge_count}, "
            f"revision={self.revision})"
        )
