"""Construction, search and sampling of r-orthogonal Latin squares."""

from importlib.resources import files

from .construct import (
    ConstructionResult,
    SearchConfig,
    algorithm_a1,
    algorithm_a2,
    algorithm_a3,
    algorithm_a4,
    complete_rectangle,
    extend_optimal,
)
from .core import (
    LatinGrid,
    PairSet,
    candidate_sets,
    empty_rectangle,
    missing_pairs,
    orthogonality,
    self_orthogonality,
    transpose,
    validate,
)
from .errors import InfeasibleTarget, LatinError, NotLatin, ParseError, VerificationFailed
from .randgen import estimate_expected, random_square
from .spectrum import Feasibility, feasible, feasible_set
from .sweep import SweepReport, sweep, verify_certificate
from .switching import column_cycle, column_path, row_cycle, symbol_cycle, symbol_path

PAIR_R42 = files(__name__) / "data" / "order7_r42.pair"

__all__ = [
    "ConstructionResult",
    "SearchConfig",
    "algorithm_a1",
    "algorithm_a2",
    "algorithm_a3",
    "algorithm_a4",
    "complete_rectangle",
    "extend_optimal",
    "LatinGrid",
    "PairSet",
    "candidate_sets",
    "empty_rectangle",
    "missing_pairs",
    "orthogonality",
    "self_orthogonality",
    "transpose",
    "validate",
    "InfeasibleTarget",
    "LatinError",
    "NotLatin",
    "ParseError",
    "VerificationFailed",
    "estimate_expected",
    "random_square",
    "Feasibility",
    "feasible",
    "feasible_set",
    "SweepReport",
    "sweep",
    "verify_certificate",
    "column_cycle",
    "column_path",
    "row_cycle",
    "symbol_cycle",
    "symbol_path",
    "PAIR_R42",
]
