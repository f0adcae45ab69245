"""Quantum sl(m) tangle invariants computed by K-theory operators.

The engine acts on sparse vectors over Z[q, q^-1] indexed by states of a
strand sequence.  See :mod:`slmtangle.cli` for the command-line entry point.
"""

from .diagram import (
    Cap,
    Cross,
    Cup,
    DiagramError,
    Dumbbell,
    StrandSeq,
    TangleWord,
    ValidationError,
    braid_closure,
    mirror,
    validate,
)
from .dsl import DSLSyntaxError, DSLValidationError, parse_dsl, render_dsl
from .ktheory import (
    MatrixCapError,
    NegativeCoefficientError,
    OperatorMatrix,
    StateVector,
    apply_word,
    evaluate_closed,
    operator_matrix,
    poincare_table,
    render_matrix,
)
from .laurent import ONE, Q, ZERO, LaurentParseError, LaurentPoly, eval_q1, parse_laurent, quantum_int
from .relations import FAMILIES, run_battery

__version__ = "0.1.0"

__all__ = [
    "Cap",
    "Cross",
    "Cup",
    "DiagramError",
    "Dumbbell",
    "StrandSeq",
    "TangleWord",
    "ValidationError",
    "braid_closure",
    "mirror",
    "validate",
    "DSLSyntaxError",
    "DSLValidationError",
    "parse_dsl",
    "render_dsl",
    "MatrixCapError",
    "NegativeCoefficientError",
    "OperatorMatrix",
    "StateVector",
    "apply_word",
    "evaluate_closed",
    "operator_matrix",
    "poincare_table",
    "render_matrix",
    "ONE",
    "Q",
    "ZERO",
    "LaurentParseError",
    "LaurentPoly",
    "eval_q1",
    "parse_laurent",
    "quantum_int",
    "FAMILIES",
    "run_battery",
]
