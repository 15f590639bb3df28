"""Certificate-producing solvers and exhaustive search for Ramsey-type
problems on vertex-ordered complete graphs."""

from ordram.core import (
    Relation,
    Edge,
    OrderedColoring,
    Constraint,
    Certificate,
    ValidationReport,
    classify_pair,
    validate_certificate,
    relation_profile,
    reverse,
    reverse_edges,
    reverse_certificate,
    OrdramError,
    IdenticalEdge,
    SharedVertex,
    ColoringFormatError,
    OracleLimitExceeded,
    LimitExceeded,
    AlgorithmStuck,
    NotARedClique,
    EdgeNotRed,
    InsufficientVertices,
    NoneFound,
    BudgetExceeded,
)

__version__ = "1.0.0"
