"""Overlap lower bounds for quantum dynamics under deterministic control errors."""

from controlbound.bounds import BoundReport, cosine_approximation, distance_bound, theorem1_bound
from controlbound.dynamics import EvolutionResult, EvolutionSpec, overlap_at_T, propagate
from controlbound.operators import Envelope, OperatorSchedule, PauliString

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "Envelope",
    "EvolutionResult",
    "EvolutionSpec",
    "OperatorSchedule",
    "PauliString",
    "cosine_approximation",
    "distance_bound",
    "overlap_at_T",
    "propagate",
    "theorem1_bound",
]
