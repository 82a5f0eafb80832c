"""Corpus file parsing, tolerant ingestion, and canonical snapshots.

Corpus format: one directive per line, fields separated by whitespace. Blank
lines and lines whose first non-blank character is ';' are skipped.

    S <string>            store the string on both sides
    I <member> <class>    assert one member->class edge
    DQ <string>           query: transitive classes of the string
    RQ <string>           query: transitive members of the string
    R <p> <c>             query: recognition verdict for (p, c)

Snapshot format: UTF-8 text, LF-terminated lines, fully sorted so that equal
store content always serializes to identical bytes.

    relgraph-snapshot v1
    revision <n>
    nodes <count>
    <one node per line, text-sorted>
    edges <count>
    <member>,<class> per line, sorted by (member, class)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import (
    CorpusSyntaxError,
    CycleError,
    RelationError,
    SelfMembershipError,
    SnapshotFormatError,
    UnknownNodeError,
)
from .model import DEFAULT_ALPHABET, Alphabet, SymString, validate_string
from .recognition import deduction, recognize, reduction
from .store import RelationGraph

SNAPSHOT_HEADER = "relgraph-snapshot v1"
COMMENT_CHAR = ";"


class Directive(Enum):
    SENSE = "S"
    INDUCT = "I"
    QUERY_DEDUCTION = "DQ"
    QUERY_REDUCTION = "RQ"
    QUERY_RECOGNIZE = "R"


_ARITY = {
    Directive.SENSE: 1,
    Directive.INDUCT: 2,
    Directive.QUERY_DEDUCTION: 1,
    Directive.QUERY_REDUCTION: 1,
    Directive.QUERY_RECOGNIZE: 2,
}


@dataclass(frozen=True)
class CorpusLine:
    directive: Directive
    args: tuple[SymString, ...]
    line_number: int


def parse_corpus(text: str, alphabet: Alphabet = DEFAULT_ALPHABET) -> list[CorpusLine]:
    """Parse corpus text into directive lines, preserving order.

    Raises CorpusSyntaxError (with the 1-based line number) on an unknown
    directive, wrong argument count, or an illegal character in an argument.
    """
    lines = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith(COMMENT_CHAR):
            continue
        fields = stripped.split()
        try:
            directive = Directive(fields[0])
        except ValueError:
            raise CorpusSyntaxError(
                line_number, f"unknown directive {fields[0]!r}"
            ) from None
        expected = _ARITY[directive]
        got = len(fields) - 1
        if got != expected:
            raise CorpusSyntaxError(
                line_number,
                f"directive {directive.value} takes {expected} "
                f"argument{'s' if expected != 1 else ''}, got {got}",
            )
        try:
            args = tuple(validate_string(f, alphabet) for f in fields[1:])
        except RelationError as exc:
            raise CorpusSyntaxError(line_number, str(exc)) from exc
        lines.append(CorpusLine(directive=directive, args=args, line_number=line_number))
    return lines


@dataclass
class IngestReport:
    """What happened to each corpus line, in a reproducible rendering.

    ``failures`` and ``queries`` pair 1-based line numbers with messages;
    ingestion never stops at a failed line.
    """

    applied: int = 0
    skipped: int = 0
    failures: list[tuple[int, str]] = field(default_factory=list)
    queries: list[tuple[int, str]] = field(default_factory=list)

    def render(self) -> str:
        lines = [
            f"applied {self.applied}",
            f"skipped {self.skipped}",
            f"failed {len(self.failures)}",
        ]
        lines.extend(f"  line {num}: {msg}" for num, msg in self.failures)
        lines.append(f"queries {len(self.queries)}")
        lines.extend(f"  line {num}: {msg}" for num, msg in self.queries)
        return "\n".join(lines) + "\n"


def _render_closure(reached: tuple[SymString, ...]) -> str:
    return ",".join(s.text for s in reached) if reached else "(none)"


def ingest(graph: RelationGraph, lines: list[CorpusLine]) -> IngestReport:
    """Apply corpus lines to the store in order, collecting a report.

    Store directives (S, I) count as applied or skipped-duplicate; semantic
    failures (unknown node, self-membership, cycle) are recorded with their
    line numbers and ingestion continues. Query directives are executed
    against the store as it stands at that line.
    """
    report = IngestReport()
    for line in lines:
        try:
            if line.directive is Directive.SENSE:
                changed = graph.sensation(line.args[0])
                report.applied += changed
                report.skipped += not changed
            elif line.directive is Directive.INDUCT:
                changed = graph.induction(line.args[0], line.args[1])
                report.applied += changed
                report.skipped += not changed
            elif line.directive is Directive.QUERY_DEDUCTION:
                result = deduction(graph, line.args[0])
                report.queries.append(
                    (
                        line.line_number,
                        f"DQ {line.args[0]} -> {_render_closure(result.reached)}",
                    )
                )
            elif line.directive is Directive.QUERY_REDUCTION:
                result = reduction(graph, line.args[0])
                report.queries.append(
                    (
                        line.line_number,
                        f"RQ {line.args[0]} -> {_render_closure(result.reached)}",
                    )
                )
            else:
                verdict = recognize(graph, line.args[0], line.args[1])
                report.queries.append(
                    (
                        line.line_number,
                        f"R {line.args[0]} {line.args[1]} -> {verdict.value}",
                    )
                )
        except (UnknownNodeError, SelfMembershipError, CycleError) as exc:
            report.failures.append((line.line_number, str(exc)))
    return report


def save_snapshot(graph: RelationGraph) -> bytes:
    """Serialize the store canonically: equal content, identical bytes."""
    lines = [
        SNAPSHOT_HEADER,
        f"revision {graph.revision}",
        f"nodes {graph.node_count}",
    ]
    lines.extend(s.text for s in graph.nodes())
    lines.append(f"edges {graph.edge_count}")
    lines.extend(f"{e.member.text},{e.class_.text}" for e in graph.edges())
    return ("\n".join(lines) + "\n").encode("utf-8")


def _parse_count(line: str, keyword: str) -> int:
    parts = line.split()
    if len(parts) != 2 or parts[0] != keyword or not parts[1].isdigit():
        raise SnapshotFormatError(f"expected '{keyword} <count>', got {line!r}")
    return int(parts[1])


def load_snapshot(
    data: bytes, alphabet: Alphabet = DEFAULT_ALPHABET
) -> RelationGraph:
    """Rebuild a store from snapshot bytes, revalidating every invariant.

    Raises SnapshotFormatError on a bad header, short or overlong sections,
    unsorted or duplicated entries, an edge naming an absent node, or an
    edge set that contains a cycle. load(save(g)) == g for every graph.
    """
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise SnapshotFormatError("snapshot is not valid UTF-8") from exc
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    else:
        raise SnapshotFormatError("snapshot must end with a newline")
    if len(lines) < 4:
        raise SnapshotFormatError("snapshot is truncated")
    if lines[0] != SNAPSHOT_HEADER:
        raise SnapshotFormatError(f"bad header {lines[0]!r}")
    revision = _parse_count(lines[1], "revision")
    node_count = _parse_count(lines[2], "nodes")
    cursor = 3
    if len(lines) < cursor + node_count + 1:
        raise SnapshotFormatError("node section is truncated")

    nodes = []
    for raw in lines[cursor : cursor + node_count]:
        try:
            nodes.append(validate_string(raw, alphabet))
        except RelationError as exc:
            raise SnapshotFormatError(f"bad node line {raw!r}: {exc}") from exc
    cursor += node_count
    if any(a >= b for a, b in zip(nodes, nodes[1:])):
        raise SnapshotFormatError("node section must be strictly sorted")
    node_set = set(nodes)

    edge_count = _parse_count(lines[cursor], "edges")
    cursor += 1
    if len(lines) != cursor + edge_count:
        raise SnapshotFormatError("edge section has the wrong length")
    edges = []
    for raw in lines[cursor:]:
        parts = raw.split(",")
        if len(parts) != 2:
            raise SnapshotFormatError(f"bad edge line {raw!r}")
        try:
            member = validate_string(parts[0], alphabet)
            class_ = validate_string(parts[1], alphabet)
        except RelationError as exc:
            raise SnapshotFormatError(f"bad edge line {raw!r}: {exc}") from exc
        for endpoint in (member, class_):
            if endpoint not in node_set:
                raise SnapshotFormatError(
                    f"edge {raw!r} references missing node {endpoint.text!r}"
                )
        edges.append((member, class_))
    keys = [(m.text, c.text) for m, c in edges]
    if any(a >= b for a, b in zip(keys, keys[1:])):
        raise SnapshotFormatError("edge section must be strictly sorted")

    try:
        return RelationGraph.restore(nodes, edges, revision)
    except RelationError as exc:
        raise SnapshotFormatError(f"snapshot violates store invariants: {exc}") from exc
