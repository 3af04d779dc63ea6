"""Branch-and-bound split search, an enumeration oracle, and the two baselines."""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

from .cost import EnergyBreakdown, LatencyBreakdown, LayerCosts, total_energy, total_latency
from .model import OffloadDecision, Scenario, decision_from_split
from .objective import (
    NormalizationBounds,
    ObjectiveValue,
    normalization_bounds,
    objective,
    weighted,
)

# decisions whose z is within this of the optimum are ties
TIE_TOL = 1e-12


class Method(str, Enum):
    ILPB = "ILPB"
    BRUTE_FORCE = "BruteForce"
    ARG = "ARG"
    ARS = "ARS"


@dataclass(frozen=True)
class Solution:
    decision: OffloadDecision
    objective: ObjectiveValue
    latency: LatencyBreakdown
    energy: EnergyBreakdown
    nodes_explored: int
    method: Method

    @property
    def split_index(self) -> int:
        return self.decision.split_index

    @property
    def z(self) -> float:
        return self.objective.z


class SearchExhaustedError(RuntimeError):
    """The search finished without reaching a single feasible leaf."""


def evaluate(
    h: OffloadDecision,
    scen: Scenario,
    bounds: NormalizationBounds,
    method: Method,
    nodes_explored: int = 1,
) -> Solution:
    lat = total_latency(h, scen)
    en = total_energy(h, scen)
    obj = objective(h, scen, bounds, latency=lat, energy=en)
    return Solution(h, obj, lat, en, nodes_explored, method)


def pick_best(candidates: Sequence[Solution]) -> Solution:
    """Minimum z; ties (within TIE_TOL) go to the smallest split index."""
    z_best = min(c.z for c in candidates)
    tied = [c for c in candidates if c.z <= z_best + TIE_TOL]
    return min(tied, key=lambda c: c.split_index)


def solve_bruteforce(scen: Scenario, bounds: NormalizationBounds | None = None) -> Solution:
    bounds = bounds or normalization_bounds(scen)
    K = scen.n_layers
    sols = [evaluate(decision_from_split(s, K), scen, bounds, Method.BRUTE_FORCE) for s in range(K + 1)]
    best = pick_best(sols)
    return Solution(best.decision, best.objective, best.latency, best.energy, K + 1, Method.BRUTE_FORCE)


def _complete(partial: Sequence[int], n_layers: int) -> OffloadDecision | None:
    """Propagate monotonicity; None while the completion is still open."""
    if len(partial) == n_layers:
        return OffloadDecision(tuple(partial))
    if partial and partial[-1] == 0:
        return OffloadDecision(tuple(partial) + (0,) * (n_layers - len(partial)))
    return None


def lower_bound(
    partial: Sequence[int],
    scen: Scenario,
    bounds: NormalizationBounds,
    costs: LayerCosts | None = None,
) -> float:
    """Optimistic Z over every feasible completion of the decided prefix ``partial``.

    Decided onboard layers contribute their committed time and energy. Each
    undecided layer contributes the cheaper of its onboard and cloud
    processing time and zero energy; downlink and relay terms count as zero.
    A prefix that is already forced to a single completion gets its exact Z.
    """
    K = scen.n_layers
    forced = _complete(partial, K)
    if forced is not None:
        return objective(forced, scen, bounds).z
    costs = costs or LayerCosts.from_scenario(scen)
    j = len(partial)
    t_lb = 0.0
    e_lb = 0.0
    for k in range(j):
        t_lb += costs.sat_time[k]
        e_lb += costs.sat_energy[k]
    for k in range(j, K):
        t_lb += min(costs.sat_time[k], costs.cloud_time[k])
    norm_e, norm_t = bounds.normalize(float(e_lb), float(t_lb))
    return weighted(scen, norm_e, norm_t)


def _default_bound_test(lb: float, incumbent: float) -> bool:
    # tolerance keeps tied leaves reachable so the tie-break can see them
    return lb <= incumbent + TIE_TOL


def solve_ilpb(
    scen: Scenario,
    bounds: NormalizationBounds | None = None,
    *,
    prune: bool = True,
    bound_test: Callable[[float, float], bool] = _default_bound_test,
) -> Solution:
    """Depth-first branch and bound over h_1..h_K.

    Variables are branched in layer order, value 1 first. Fixing any h_k = 0
    forces every later layer to the cloud, so that child is a leaf and the
    tree has at most 2K + 1 nodes. A child is entered only if
    ``bound_test(lower_bound(child), incumbent)`` holds; ``prune=False``
    enters every child.
    """
    bounds = bounds or normalization_bounds(scen)
    costs = LayerCosts.from_scenario(scen)
    K = scen.n_layers
    incumbent = math.inf
    nodes = 0
    leaves: list[Solution] = []

    def search(partial: tuple[int, ...]) -> float:
        nonlocal incumbent, nodes
        nodes += 1
        leaf = _complete(partial, K)
        if leaf is not None:
            sol = evaluate(leaf, scen, bounds, Method.ILPB)
            if sol.z < incumbent:
                incumbent = sol.z
            if sol.z <= incumbent + TIE_TOL:
                leaves.append(sol)
            return incumbent
        for value in (1, 0):
            child = partial + (value,)
            if prune and not bound_test(lower_bound(child, scen, bounds, costs), incumbent):
                continue
            search(child)
        return incumbent

    search(())
    if not leaves:
        raise SearchExhaustedError(f"no feasible leaf reached for K={K}")
    best = pick_best(leaves)
    return Solution(best.decision, best.objective, best.latency, best.energy, nodes, Method.ILPB)


def baseline_arg(scen: Scenario, bounds: NormalizationBounds | None = None) -> Solution:
    """Downlink everything and process all layers in the cloud."""
    bounds = bounds or normalization_bounds(scen)
    return evaluate(decision_from_split(0, scen.n_layers), scen, bounds, Method.ARG)


def baseline_ars(scen: Scenario, bounds: NormalizationBounds | None = None) -> Solution:
    """Run every layer onboard."""
    bounds = bounds or normalization_bounds(scen)
    K = scen.n_layers
    return evaluate(decision_from_split(K, K), scen, bounds, Method.ARS)


SOLVERS = {
    Method.ILPB: solve_ilpb,
    Method.BRUTE_FORCE: solve_bruteforce,
    Method.ARG: baseline_arg,
    Method.ARS: baseline_ars,
}
