"""Python access to the higgs-threeterm core."""

from ._core import (
    BranchError,
    HypothesisViolation,
    check,
    is_admissible,
    is_stable,
    pair,
    rank1,
    sweep,
    three_term_holds,
    translate,
    verify_metric,
)

__all__ = [
    "BranchError",
    "HypothesisViolation",
    "check",
    "is_admissible",
    "is_stable",
    "pair",
    "rank1",
    "sweep",
    "three_term_holds",
    "translate",
    "verify_metric",
]
