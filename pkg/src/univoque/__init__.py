"""Unique (q0, q1)-expansions, subshifts with a hole, entropy and Hausdorff dimension."""

from .expansions import BasePair, DomainError, greedy_endpoint, lazy_endpoint, project, quasi_greedy, quasi_lazy
from .kneading import (
    BracketError,
    DimensionResult,
    Substitution,
    check_equaldim,
    dimension,
    entropy,
    entropy_base,
    univoque_dimension,
)
from .sequences import EventuallyPeriodicSequence, Seq, parse, render
from .subshift import Hole, check_decomposition, extremal_pair, is_admissible, language_count

__version__ = "0.1.0"

__all__ = [
    "BasePair",
    "BracketError",
    "DimensionResult",
    "DomainError",
    "EventuallyPeriodicSequence",
    "Hole",
    "Seq",
    "Substitution",
    "check_decomposition",
    "check_equaldim",
    "dimension",
    "entropy",
    "entropy_base",
    "extremal_pair",
    "greedy_endpoint",
    "is_admissible",
    "language_count",
    "lazy_endpoint",
    "parse",
    "project",
    "quasi_greedy",
    "quasi_lazy",
    "render",
    "univoque_dimension",
]
