"""Energy/latency-aware split placement of DNN layers between a LEO satellite and the cloud."""

__version__ = "0.1.0"

from .cost import EnergyBreakdown, LatencyBreakdown, total_energy, total_latency
from .model import (
    CloudSegment,
    InferenceRequest,
    OffloadDecision,
    SatelliteProfile,
    Scenario,
    ValidationError,
    decision_from_split,
    is_feasible,
    validate_scenario,
)
from .objective import NormalizationBounds, ObjectiveValue, normalization_bounds, objective
from .solver import Method, Solution, baseline_arg, baseline_ars, solve_bruteforce, solve_ilpb

__all__ = [
    "CloudSegment",
    "EnergyBreakdown",
    "InferenceRequest",
    "LatencyBreakdown",
    "Method",
    "NormalizationBounds",
    "ObjectiveValue",
    "OffloadDecision",
    "SatelliteProfile",
    "Scenario",
    "Solution",
    "ValidationError",
    "baseline_arg",
    "baseline_ars",
    "decision_from_split",
    "is_feasible",
    "normalization_bounds",
    "objective",
    "solve_bruteforce",
    "solve_ilpb",
    "total_energy",
    "total_latency",
    "validate_scenario",
]
