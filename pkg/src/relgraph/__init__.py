"""relgraph: a dual-sided string store with member-class relations.

Strings are stored once and readable from two mirrored sides; directed
member->class edges between stored strings form a DAG whose transitive
closure answers upward (class) and downward (member) queries and a total
accept/reject recognition predicate. A deterministic step machine reproduces
recognition one expansion at a time with a full trace, and a probe measures
how storage and query cost scale with store size.
"""

from .corpus import (
    CorpusLine,
    Directive,
    IngestReport,
    ingest,
    load_snapshot,
    parse_corpus,
    save_snapshot,
)
from .errors import (
    CorpusSyntaxError,
    CycleError,
    DegenerateFitError,
    EmptyStringError,
    IllegalCharacterError,
    MalformedConfigurationError,
    RelationError,
    SelfMembershipError,
    SnapshotFormatError,
    StepBudgetError,
    UnknownNodeError,
)
from .machine import (
    Configuration,
    MachineAlphabet,
    MachineTrace,
    encode,
    parse_configuration,
    render_configuration,
    render_trace,
    run,
    step,
)
from .model import (
    DEFAULT_ALPHABET,
    RESERVED_SEPARATORS,
    Alphabet,
    Side,
    SymString,
    Verdict,
    validate_string,
)
from .probe import (
    MeasuredOp,
    Sample,
    ScalingFit,
    ShapeKind,
    StoreShape,
    fit_exponent,
    generate_store,
    measure,
    samples_to_csv,
)
from .recognition import (
    ClosureResult,
    Direction,
    deduction,
    recognize,
    reduction,
)
from .store import MemberClassEdge, MirrorPair, RelationGraph

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "ClosureResult",
    "Configuration",
    "CorpusLine",
    "CorpusSyntaxError",
    "CycleError",
    "DEFAULT_ALPHABET",
    "DegenerateFitError",
    "Direction",
    "Directive",
    "EmptyStringError",
    "IllegalCharacterError",
    "IngestReport",
    "MachineAlphabet",
    "MachineTrace",
    "MalformedConfigurationError",
    "MeasuredOp",
    "MemberClassEdge",
    "MirrorPair",
    "RESERVED_SEPARATORS",
    "RelationError",
    "RelationGraph",
    "Sample",
    "ScalingFit",
    "SelfMembershipError",
    "ShapeKind",
    "Side",
    "SnapshotFormatError",
    "StepBudgetError",
    "StoreShape",
    "SymString",
    "UnknownNodeError",
    "Verdict",
    "deduction",
    "encode",
    "fit_exponent",
    "generate_store",
    "ingest",
    "load_snapshot",
    "measure",
    "parse_configuration",
    "parse_corpus",
    "recognize",
    "reduction",
    "render_configuration",
    "render_trace",
    "run",
    "samples_to_csv",
    "save_snapshot",
    "step",
    "validate_string",
]
