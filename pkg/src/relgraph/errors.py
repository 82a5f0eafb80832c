"""Exception types shared across the package.

Everything raised on purpose derives from RelationError, so callers (and the
CLI) can distinguish data problems from genuine bugs with one except clause.
"""

from __future__ import annotations


class RelationError(Exception):
    """Base class for all errors raised by this package."""


class EmptyStringError(RelationError):
    """A stored string must have at least one character."""


class IllegalCharacterError(RelationError):
    """A string contains a character outside the alphabet.

    Carries the first offending character and its index.
    """

    def __init__(self, text: str, char: str, index: int):
        super().__init__(f"illegal character {char!r} at index {index} in {text!r}")
        self.text = text
        self.char = char
        self.index = index


class UnknownNodeError(RelationError):
    """An operation referenced a string that was never stored."""

    def __init__(self, node_text: str):
        super().__init__(f"unknown node {node_text!r}: it must be stored before use")
        self.node_text = node_text


class SelfMembershipError(RelationError):
    """A member-class edge may not relate a string to itself."""

    def __init__(self, node_text: str):
        super().__init__(f"self-membership rejected for {node_text!r}")
        self.node_text = node_text


class CycleError(RelationError):
    """Inserting an edge would close a directed cycle.

    ``witness`` is an existing path from the proposed class down to the
    proposed member, proving the cycle that the edge would complete.
    """

    def __init__(self, member_text: str, class_text: str, witness: tuple[str, ...]):
        path = " -> ".join(witness)
        super().__init__(
            f"edge {member_text!r} -> {class_text!r} rejected: "
            f"{class_text!r} already reaches {member_text!r} via {path}"
        )
        self.member_text = member_text
        self.class_text = class_text
        self.witness = witness


class MalformedConfigurationError(RelationError):
    """A machine configuration string does not parse."""


class StepBudgetError(RelationError):
    """The step machine hit its step budget before reaching a verdict."""

    def __init__(self, max_steps: int):
        super().__init__(f"no verdict within {max_steps} steps; raise max_steps")
        self.max_steps = max_steps


class CorpusSyntaxError(RelationError):
    """A corpus line failed to parse; carries the 1-based line number."""

    def __init__(self, line_number: int, reason: str):
        super().__init__(f"line {line_number}: {reason}")
        self.line_number = line_number
        self.reason = reason


class SnapshotFormatError(RelationError):
    """A snapshot byte sequence is not a valid canonical snapshot."""


class DegenerateFitError(RelationError):
    """Scaling-fit input has too few samples or no size variance."""
