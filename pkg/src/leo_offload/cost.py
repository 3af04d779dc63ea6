"""Latency and onboard-energy model for a layer-wise split decision."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import (
    CloudSegment,
    InferenceRequest,
    OffloadDecision,
    SatelliteProfile,
    Scenario,
    is_feasible,
)

# relative slack applied before the pass-count ceiling
CEIL_EPS = 1e-9


class InfeasibleDecisionError(ValueError):
    pass


@dataclass(frozen=True)
class LatencyBreakdown:
    t_satellite: float
    t_s_to_g: float
    t_g_to_c: float
    t_cloud: float

    @property
    def total(self) -> float:
        return self.t_satellite + self.t_s_to_g + self.t_g_to_c + self.t_cloud


@dataclass(frozen=True)
class EnergyBreakdown:
    e_processing: float
    e_transmission: float

    @property
    def total(self) -> float:
        return self.e_processing + self.e_transmission


def proc_latency_satellite(k: int, req: InferenceRequest, sat: SatelliteProfile) -> float:
    return req.layer_size(k) * sat.beta


def proc_latency_cloud(k: int, req: InferenceRequest, cloud: CloudSegment) -> float:
    return req.layer_size(k) * cloud.gamma


def passes_needed(size_kb: float, capacity_kb: float) -> int:
    """Contact windows needed to downlink ``size_kb``; exact fits use one window fewer."""
    x = size_kb / capacity_kb
    return max(1, math.ceil(x * (1.0 - CEIL_EPS)))


def downlink_latency(k: int, req: InferenceRequest, sat: SatelliteProfile) -> tuple[float, float]:
    """Return ``(t_tr, t_per)``: airtime and whole-orbit waiting for layer k's input."""
    size = req.layer_size(k)
    t_tr = size / sat.rate_down
    t_per = sat.t_cyc * (passes_needed(size, sat.pass_capacity) - 1)
    return t_tr, t_per


def gs_to_dc_latency(k: int, req: InferenceRequest, cloud: CloudSegment) -> float:
    size = req.layer_size(k)
    if cloud.colocated:
        return 0.0
    return size / cloud.rate_gs_dc


def proc_energy_satellite(k: int, req: InferenceRequest, sat: SatelliteProfile) -> float:
    # delta * (size/(zeta*delta) * P_max + P_idle + P_leak), expanded to avoid 0/0
    size = req.layer_size(k)
    delta = size * sat.beta
    return size / sat.zeta * sat.p_max + delta * (sat.p_idle + sat.p_leak)


def proc_energy_satellite_direct(k: int, req: InferenceRequest, sat: SatelliteProfile) -> float:
    """Unsimplified form of :func:`proc_energy_satellite`, kept for cross-checking."""
    size = req.layer_size(k)
    delta = proc_latency_satellite(k, req, sat)
    return delta * (size / (sat.zeta * delta) * sat.p_max + sat.p_idle + sat.p_leak)


def offload_energy(k: int, req: InferenceRequest, sat: SatelliteProfile) -> float:
    # only airtime draws antenna power; waiting between passes is free
    return req.layer_size(k) / sat.rate_down * sat.p_off


@dataclass(frozen=True)
class LayerCosts:
    """Per-layer cost terms for one scenario, indexed 0..K-1 for layers 1..K."""

    sat_time: np.ndarray
    cloud_time: np.ndarray
    downlink_time: np.ndarray  # t_tr + t_per
    relay_time: np.ndarray
    sat_energy: np.ndarray
    offload_energy: np.ndarray

    @classmethod
    def from_scenario(cls, scen: Scenario) -> "LayerCosts":
        req, sat, cloud = scen.request, scen.satellite, scen.cloud
        ks = range(1, req.n_layers + 1)
        down = [sum(downlink_latency(k, req, sat)) for k in ks]
        return cls(
            sat_time=np.array([proc_latency_satellite(k, req, sat) for k in ks]),
            cloud_time=np.array([proc_latency_cloud(k, req, cloud) for k in ks]),
            downlink_time=np.array(down),
            relay_time=np.array([gs_to_dc_latency(k, req, cloud) for k in ks]),
            sat_energy=np.array([proc_energy_satellite(k, req, sat) for k in ks]),
            offload_energy=np.array([offload_energy(k, req, sat) for k in ks]),
        )

    @property
    def n_layers(self) -> int:
        return len(self.sat_time)


def _check(h: OffloadDecision, scen: Scenario):
    if not is_feasible(h, scen.n_layers):
        raise InfeasibleDecisionError(f"decision {h.h} is not a feasible prefix split for K={scen.n_layers}")


def total_latency(h: OffloadDecision, scen: Scenario) -> LatencyBreakdown:
    """Four-term latency of ``h``, with the h_0 = 1 convention at layer 1."""
    _check(h, scen)
    req, sat, cloud = scen.request, scen.satellite, scen.cloud
    hh = h.with_h0()
    t_sat = t_sg = t_gc = t_cloud = 0.0
    for k in range(1, req.n_layers + 1):
        if hh[k]:
            t_sat += proc_latency_satellite(k, req, sat)
        else:
            t_cloud += proc_latency_cloud(k, req, cloud)
        if hh[k - 1] - hh[k] == 1:
            t_sg += sum(downlink_latency(k, req, sat))
            t_gc += gs_to_dc_latency(k, req, cloud)
    return LatencyBreakdown(t_sat, t_sg, t_gc, t_cloud)


def total_energy(h: OffloadDecision, scen: Scenario) -> EnergyBreakdown:
    _check(h, scen)
    req, sat = scen.request, scen.satellite
    hh = h.with_h0()
    e_proc = e_tx = 0.0
    for k in range(1, req.n_layers + 1):
        if hh[k]:
            e_proc += proc_energy_satellite(k, req, sat)
        if hh[k - 1] - hh[k] == 1:
            e_tx += offload_energy(k, req, sat)
    return EnergyBreakdown(e_proc, e_tx)
