"""Domain types for a single satellite / ground station / data center scenario.

All quantities are stored in canonical units: kilobytes (KB) for data,
seconds for time, watts for power, joules for energy.
"""
from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, fields
from typing import Sequence

WEIGHT_SUM_TOL = 1e-12


class ValidationError(ValueError):
    """A scenario field violates one of its invariants.

    ``field`` names the offending attribute (dotted path), ``bound``
    describes the violated bound.
    """

    def __init__(self, field: str, bound: str, message: str | None = None):
        self.field = field
        self.bound = bound
        super().__init__(message or f"{field}: {bound}")


@dataclass(frozen=True)
class SatelliteProfile:
    beta: float  # s/KB onboard per-unit processing latency
    zeta: float  # KB/s processed at max power
    p_max: float
    p_idle: float
    p_leak: float
    p_off: float  # antenna transmit power
    rate_down: float  # KB/s satellite -> ground station
    t_cyc: float
    t_con: float

    @property
    def pass_capacity(self) -> float:
        """Data (KB) that can be downlinked in one contact window."""
        return self.rate_down * self.t_con


@dataclass(frozen=True)
class CloudSegment:
    gamma: float  # s/KB cloud per-unit processing latency
    gamma_max: float
    rate_gs_dc: float  # KB/s ground station -> data center
    colocated: bool = False


@dataclass(frozen=True)
class InferenceRequest:
    data_size: float  # KB
    alphas: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(float(a) for a in self.alphas))

    @property
    def n_layers(self) -> int:
        return len(self.alphas)

    def layer_size(self, k: int) -> float:
        """Input size (KB) of layer ``k`` (1-based)."""
        if not 1 <= k <= len(self.alphas):
            raise IndexError(f"layer index {k} outside 1..{len(self.alphas)}")
        return self.alphas[k - 1] * self.data_size


@dataclass(frozen=True)
class Scenario:
    satellite: SatelliteProfile
    cloud: CloudSegment
    request: InferenceRequest
    mu: float = 0.5  # energy weight
    lam: float = 0.5  # latency weight
    # topology labels; one element of each set is bound per scenario
    satellite_id: str = "S1"
    ground_station_id: str = "GS1"
    data_center_id: str = "DC1"

    @property
    def n_layers(self) -> int:
        return self.request.n_layers

    def digest(self) -> str:
        """Stable content hash, used to tie derived objects to this scenario."""
        return hashlib.sha256(repr(self).encode()).hexdigest()[:16]


@dataclass(frozen=True)
class OffloadDecision:
    """Binary placement vector; ``h[k-1] == 1`` runs layer k on the satellite.

    The virtual entry h_0 is always 1: captured data starts on the satellite.
    """

    h: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "h", tuple(int(v) for v in self.h))

    def __len__(self):
        return len(self.h)

    @property
    def split_index(self) -> int:
        """Number of leading layers executed onboard."""
        return sum(self.h)

    def with_h0(self) -> tuple[int, ...]:
        return (1,) + self.h

    def offload_layer(self) -> int | None:
        """1-based layer whose input is downlinked, or None for all-onboard."""
        hh = self.with_h0()
        for k in range(1, len(hh)):
            if hh[k - 1] - hh[k] == 1:
                return k
        return None


def decision_from_split(split: int, n_layers: int) -> OffloadDecision:
    if n_layers < 1:
        raise ValueError(f"layer count must be >= 1, got {n_layers}")
    if not 0 <= split <= n_layers:
        raise ValueError(f"split index {split} outside 0..{n_layers}")
    return OffloadDecision(tuple(1 if k <= split else 0 for k in range(1, n_layers + 1)))


def is_feasible(h: OffloadDecision | Sequence[int], n_layers: int | None = None) -> bool:
    vec = h.h if isinstance(h, OffloadDecision) else tuple(h)
    if n_layers is not None and len(vec) != n_layers:
        return False
    if len(vec) == 0 or any(v not in (0, 1) for v in vec):
        return False
    full = (1,) + tuple(vec)
    if any(full[k] < full[k + 1] for k in range(len(full) - 1)):
        return False
    transitions = sum(1 for k in range(1, len(full)) if full[k - 1] - full[k] == 1)
    return transitions <= 1


def feasible_decisions(n_layers: int) -> list[OffloadDecision]:
    return [decision_from_split(s, n_layers) for s in range(n_layers + 1)]


def _positive(obj, prefix: str, names: Sequence[str]):
    for name in names:
        value = getattr(obj, name)
        if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
            raise ValidationError(f"{prefix}.{name}", "must be > 0", f"{prefix}.{name} must be > 0, got {value!r}")


def validate_scenario(s: Scenario) -> Scenario:
    """Return ``s`` unchanged if every invariant holds, else raise ValidationError."""
    sat, cloud, req = s.satellite, s.cloud, s.request
    _positive(sat, "satellite", [f.name for f in fields(sat)])
    if sat.t_con >= sat.t_cyc:
        raise ValidationError(
            "satellite.t_con", "t_con < t_cyc",
            f"satellite.t_con ({sat.t_con}) must be shorter than t_cyc ({sat.t_cyc})",
        )
    _positive(cloud, "cloud", ["gamma", "gamma_max", "rate_gs_dc"])
    if cloud.gamma > cloud.gamma_max:
        raise ValidationError(
            "cloud.gamma", "gamma <= gamma_max",
            f"gamma cap violated: cloud.gamma ({cloud.gamma}) exceeds gamma_max ({cloud.gamma_max})",
        )
    if len(req.alphas) < 1:
        raise ValidationError("request.alphas", "K >= 1", "request.alphas: K must be >= 1 (alphas empty)")
    _positive(req, "request", ["data_size"])
    for k, a in enumerate(req.alphas, start=1):
        if not (math.isfinite(a) and 0 < a <= 1):
            raise ValidationError(
                f"request.alphas[{k}]", "0 < alpha <= 1",
                f"request.alphas[{k}] must lie in (0, 1], got {a!r}",
            )
    for name, w in (("mu", s.mu), ("lambda", s.lam)):
        if not (math.isfinite(w) and w >= 0):
            raise ValidationError(name, ">= 0", f"{name} must be >= 0, got {w!r}")
    if abs(s.mu + s.lam - 1.0) > WEIGHT_SUM_TOL:
        raise ValidationError(
            "mu+lambda", "mu + lambda = 1",
            f"mu + lambda must equal 1 (got {s.mu + s.lam!r})",
        )
    return s
