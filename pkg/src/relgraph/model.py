"""Core value types: alphabet, validated strings, store sides, verdicts.

Every other module builds on these. All types here are immutable and safe to
share between threads.

The three separator characters ``#``, ``|`` and ``,`` are reserved for the
step machine's configuration syntax and are never legal inside a stored
string, no matter which alphabet is in use. That single rule keeps rendered
configurations unambiguous and keeps them disjoint from verdict names.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field
from enum import Enum

from .errors import EmptyStringError, IllegalCharacterError

# Reserved by the machine configuration syntax; see machine.py for their roles.
RESERVED_SEPARATORS: frozenset[str] = frozenset({"#", "|", ","})


class Side(Enum):
    """The two roles a stored string plays: sensed member vs. class."""

    PERCEPTUAL = "perceptual"
    CONCEPTUAL = "conceptual"


class Verdict(Enum):
    """Total recognition outcome. Deliberately not a string subtype, so a
    verdict can never be confused with a rendered machine configuration."""

    ACCEPT = "ACCEPT"
    REJECT = "REJECT"


@dataclass(frozen=True)
class Alphabet:
    """The shared symbol set both store sides draw from.

    ``reserved`` always equals the three machine separators; construction
    rejects any overlap with ``symbols``.
    """

    symbols: frozenset[str]
    reserved: frozenset[str] = field(default=RESERVED_SEPARATORS)

    def __post_init__(self):
        if not self.symbols:
            raise ValueError("alphabet must contain at least one symbol")
        for sym in self.symbols:
            if len(sym) != 1:
                raise ValueError(f"alphabet symbols are single characters, got {sym!r}")
        if self.reserved != RESERVED_SEPARATORS:
            raise ValueError(
                f"reserved set must be exactly {sorted(RESERVED_SEPARATORS)}"
            )
        if self.symbols & self.reserved:
            clash = sorted(self.symbols & self.reserved)
            raise ValueError(f"alphabet may not contain reserved separators {clash}")

    def __contains__(self, char: str) -> bool:
        return char in self.symbols


def _default_symbols() -> frozenset[str]:
    # Printable ASCII minus whitespace minus the reserved separators.
    printable = set(string.digits + string.ascii_letters + string.punctuation)
    return frozenset(printable - RESERVED_SEPARATORS)


DEFAULT_ALPHABET = Alphabet(_default_symbols())


@dataclass(frozen=True, order=True)
class SymString:
    """A non-empty string over the shared alphabet.

    Equality and ordering are plain text comparison, byte-wise (the default
    alphabet is ASCII-only; no normalization or case folding happens).
    Direct construction enforces the structural minimum: non-empty and free
    of reserved separators. Use :func:`validate_string` to also check
    membership in a specific alphabet.
    """

    text: str

    def __post_init__(self):
        if not self.text:
            raise EmptyStringError("empty string cannot be stored")
        for index, char in enumerate(self.text):
            if char in RESERVED_SEPARATORS:
                raise IllegalCharacterError(self.text, char, index)

    def __str__(self) -> str:
        return self.text


def validate_string(raw: str, alphabet: Alphabet = DEFAULT_ALPHABET) -> SymString:
    """Validate ``raw`` against ``alphabet`` and wrap it as a SymString.

    Raises EmptyStringError for zero-length input and IllegalCharacterError
    for the first character outside the alphabet. Two validations of equal
    text yield equal SymStrings.
    """
    if not raw:
        raise EmptyStringError("empty string cannot be stored")
    for index, char in enumerate(raw):
        if char not in alphabet.symbols:
            raise IllegalCharacterError(raw, char, index)
    return SymString(raw)
