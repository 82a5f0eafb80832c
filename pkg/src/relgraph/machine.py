"""Deterministic step machine that reproduces ``recognize`` one hop at a time.

A query (p, c) is encoded as a configuration and a transition function is
iterated until it yields a verdict. Each application pops one frontier node:
a breadth-first expansion, which makes the machine compute exactly the upward
closure that ``recognize`` checks, with a full inspectable trace.

Configuration text syntax (one per line in a rendered trace):

    target '#' visited-list '|' frontier-list

where both lists are ','-separated, the visited list is text-sorted and the
frontier list preserves discovery order. The separators are reserved
characters that can never occur inside stored strings, so rendering is
unambiguous and a configuration string can never collide with a verdict
name. Examples:

    animal#|dog            initial configuration of the query (dog, animal)
    animal#dog|mammal      after expanding dog
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import MalformedConfigurationError, StepBudgetError
from .model import DEFAULT_ALPHABET, Alphabet, SymString, Verdict, validate_string
from .store import RelationGraph

TARGET_SEPARATOR = "#"
FRONTIER_SEPARATOR = "|"
LIST_SEPARATOR = ","


@dataclass(frozen=True)
class MachineAlphabet:
    """Configuration alphabet: the base symbols plus the three separators.

    Separators are excluded from the base alphabet by construction, which is
    what keeps configuration strings and stored strings disjoint.
    """

    base: Alphabet = field(default=DEFAULT_ALPHABET)
    separators: tuple[str, str, str] = (
        TARGET_SEPARATOR,
        FRONTIER_SEPARATOR,
        LIST_SEPARATOR,
    )

    def __post_init__(self):
        if set(self.separators) & self.base.symbols:
            raise ValueError("separators must stay outside the base alphabet")
        if self.separators != (TARGET_SEPARATOR, FRONTIER_SEPARATOR, LIST_SEPARATOR):
            raise ValueError("separator roles are fixed: '#', '|', ','")


DEFAULT_MACHINE_ALPHABET = MachineAlphabet()


@dataclass(frozen=True)
class Configuration:
    """One machine state: the sought target, visited set, and BFS frontier."""

    target: SymString
    visited: frozenset[SymString]
    frontier: tuple[SymString, ...]

    def __post_init__(self):
        if len(set(self.frontier)) != len(self.frontier):
            raise ValueError("frontier may not contain duplicates")
        if self.visited & set(self.frontier):
            raise ValueError("visited and frontier must be disjoint")


@dataclass(frozen=True)
class MachineTrace:
    """Every configuration a run passed through, plus the final verdict.

    ``step_count`` equals the number of transition applications; all but the
    last produced the configurations after the first (which comes from
    encoding), and the last produced the verdict. Hence it always equals
    ``len(steps)``.
    """

    steps: tuple[Configuration, ...]
    verdict: Verdict
    step_count: int

    def __post_init__(self):
        if self.step_count != len(self.steps):
            raise ValueError("step_count must equal the number of configurations")
        if not self.steps:
            raise ValueError("a trace records at least the initial configuration")


def encode(p: SymString, c: SymString) -> Configuration:
    """Initial configuration for the query (p, c): seek c starting from p.

    Neither string has to be stored; absence simply resolves to REJECT
    during the run.
    """
    return Configuration(target=c, visited=frozenset(), frontier=(p,))


def step(graph: RelationGraph, config: Configuration) -> Configuration | Verdict:
    """Apply the transition function once.

    An exhausted frontier rejects. Otherwise the first frontier node is
    popped; if it is the (stored) target the machine accepts, else the node
    moves to visited and its direct classes not yet seen are appended in
    sorted order. If that leaves nothing to explore the machine rejects
    immediately rather than producing a dead configuration.

    Deterministic: equal (graph, config) inputs give equal results.
    """
    if not config.frontier:
        return Verdict.REJECT
    node = config.frontier[0]
    rest = config.frontier[1:]
    if node == config.target and graph.contains(node):
        return Verdict.ACCEPT
    visited = config.visited | {node}
    skip = visited.union(rest)
    fresh = sorted(child for child in graph.children_of(node) if child not in skip)
    frontier = rest + tuple(fresh)
    if not frontier:
        return Verdict.REJECT
    return Configuration(target=config.target, visited=visited, frontier=frontier)


def run(
    graph: RelationGraph,
    p: SymString,
    c: SymString,
    max_steps: int | None = None,
) -> MachineTrace:
    """Iterate ``step`` from ``encode(p, c)`` until a verdict.

    ``max_steps`` defaults to node count + 1, which always suffices: the
    frontier only ever holds nodes reachable from p, each is popped at most
    once, and the store is acyclic. Raises StepBudgetError if the caller
    supplies a smaller budget and it runs out.

    The verdict always equals ``recognize(graph, p, c)``.
    """
    if max_steps is None:
        max_steps = graph.node_count + 1
    if max_steps < 1:
        raise ValueError("max_steps must be at least 1")
    steps = [encode(p, c)]
    for _ in range(max_steps):
        result = step(graph, steps[-1])
        if isinstance(result, Verdict):
            return MachineTrace(
                steps=tuple(steps), verdict=result, step_count=len(steps)
            )
        steps.append(result)
    raise StepBudgetError(max_steps)


def render_configuration(config: Configuration) -> str:
    """Render to the canonical ``target#visited|frontier`` line."""
    visited = LIST_SEPARATOR.join(s.text for s in sorted(config.visited))
    frontier = LIST_SEPARATOR.join(s.text for s in config.frontier)
    return f"{config.target.text}{TARGET_SEPARATOR}{visited}{FRONTIER_SEPARATOR}{frontier}"


def parse_configuration(
    text: str, alphabet: MachineAlphabet = DEFAULT_MACHINE_ALPHABET
) -> Configuration:
    """Parse a rendered configuration line back into a Configuration.

    Strict: exactly one of each divider, every item a legal string over the
    base alphabet, the visited list strictly sorted without duplicates.
    Raises MalformedConfigurationError otherwise.
    """
    if text.count(TARGET_SEPARATOR) != 1 or text.count(FRONTIER_SEPARATOR) != 1:
        raise MalformedConfigurationError(
            f"expected exactly one {TARGET_SEPARATOR!r} and one "
            f"{FRONTIER_SEPARATOR!r} in {text!r}"
        )
    target_part, rest = text.split(TARGET_SEPARATOR)
    if FRONTIER_SEPARATOR in target_part:
        raise MalformedConfigurationError(f"dividers out of order in {text!r}")
    visited_part, frontier_part = rest.split(FRONTIER_SEPARATOR)

    def parse_item(raw: str) -> SymString:
        try:
            return validate_string(raw, alphabet.base)
        except Exception as exc:
            raise MalformedConfigurationError(f"bad item {raw!r} in {text!r}") from exc

    target = parse_item(target_part)
    visited_items = (
        [parse_item(item) for item in visited_part.split(LIST_SEPARATOR)]
        if visited_part
        else []
    )
    if any(a >= b for a, b in zip(visited_items, visited_items[1:])):
        raise MalformedConfigurationError(f"visited list not sorted in {text!r}")
    frontier_items = (
        [parse_item(item) for item in frontier_part.split(LIST_SEPARATOR)]
        if frontier_part
        else []
    )
    try:
        return Configuration(
            target=target,
            visited=frozenset(visited_items),
            frontier=tuple(frontier_items),
        )
    except ValueError as exc:
        raise MalformedConfigurationError(str(exc)) from exc


def render_trace(trace: MachineTrace) -> str:
    """One configuration per line, the verdict name on the final line."""
    lines = [render_configuration(config) for config in trace.steps]
    lines.append(trace.verdict.value)
    return "\n".join(lines) + "\n"
