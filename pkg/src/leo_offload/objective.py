"""Min-max normalized weighted objective over energy and latency."""
from __future__ import annotations

from dataclasses import dataclass

from .cost import EnergyBreakdown, LatencyBreakdown, total_energy, total_latency
from .model import (
    OffloadDecision,
    Scenario,
    feasible_decisions,
    is_feasible,
)

DEGENERATE_RTOL = 1e-12


class BoundsMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class NormalizationBounds:
    e_min: float
    e_max: float
    t_min: float
    t_max: float
    scenario_digest: str

    @property
    def e_span(self) -> float:
        """Energy denominator, or 0.0 when all decisions tie in energy."""
        span = self.e_max - self.e_min
        return 0.0 if span <= DEGENERATE_RTOL * abs(self.e_max) else span

    @property
    def t_span(self) -> float:
        span = self.t_max - self.t_min
        return 0.0 if span <= DEGENERATE_RTOL * abs(self.t_max) else span

    def normalize(self, energy: float, latency: float) -> tuple[float, float]:
        e_span, t_span = self.e_span, self.t_span
        norm_e = (energy - self.e_min) / e_span if e_span else 0.0
        norm_t = (latency - self.t_min) / t_span if t_span else 0.0
        return norm_e, norm_t


@dataclass(frozen=True)
class ObjectiveValue:
    z: float
    norm_e: float
    norm_t: float
    raw_e: float
    raw_t: float


def normalization_bounds(scen: Scenario) -> NormalizationBounds:
    """Component-wise extremes of E and T over the K+1 feasible splits."""
    energies, latencies = [], []
    for h in feasible_decisions(scen.n_layers):
        energies.append(total_energy(h, scen).total)
        latencies.append(total_latency(h, scen).total)
    return NormalizationBounds(
        e_min=min(energies),
        e_max=max(energies),
        t_min=min(latencies),
        t_max=max(latencies),
        scenario_digest=scen.digest(),
    )


def weighted(scen: Scenario, norm_e: float, norm_t: float) -> float:
    return scen.mu * norm_e + scen.lam * norm_t


def objective(
    h: OffloadDecision,
    scen: Scenario,
    bounds: NormalizationBounds,
    latency: LatencyBreakdown | None = None,
    energy: EnergyBreakdown | None = None,
) -> ObjectiveValue:
    """Evaluate Z for ``h``.

    Precomputed breakdowns may be passed to skip re-evaluating the cost model.
    """
    if bounds.scenario_digest != scen.digest():
        raise BoundsMismatchError("normalization bounds were computed for a different scenario")
    latency = latency or total_latency(h, scen)
    energy = energy or total_energy(h, scen)
    raw_e, raw_t = energy.total, latency.total
    norm_e, norm_t = bounds.normalize(raw_e, raw_t)
    return ObjectiveValue(weighted(scen, norm_e, norm_t), norm_e, norm_t, raw_e, raw_t)


def check_constraints(h: OffloadDecision, scen: Scenario) -> list[str]:
    """List every violated placement/cloud constraint; empty means feasible."""
    out = []
    cloud = scen.cloud
    if cloud.gamma > cloud.gamma_max:
        out.append(f"gamma cap violation: gamma={cloud.gamma} exceeds gamma_max={cloud.gamma_max}")
    vec = h.h
    K = scen.n_layers
    if len(vec) != K:
        out.append(f"completeness violation: {len(vec)} placements for {K} layers")
    bad = [k for k, v in enumerate(vec, start=1) if v not in (0, 1)]
    if bad:
        out.append(f"binarity violation at k={bad}")
        return out
    for k in range(1, len(vec)):
        if vec[k - 1] < vec[k]:
            out.append(f"monotonicity violation at k={k}")
    full = (1,) + vec
    n_down = sum(1 for k in range(1, len(full)) if full[k - 1] - full[k] == 1)
    if n_down > 1:
        out.append(f"single-downlink violation: {n_down} offload points")
    if not out:
        assert is_feasible(h, K)
    return out
