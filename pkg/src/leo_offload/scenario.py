"""Seeded scenario sampling and paired parameter sweeps."""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum

import numpy as np

from .model import (
    CloudSegment,
    InferenceRequest,
    SatelliteProfile,
    Scenario,
    validate_scenario,
)

PRNG_ALGORITHM = "numpy.random.PCG64 (SeedSequence-derived per-stream seeds)"


@dataclass(frozen=True)
class ParameterRanges:
    """Sampling ranges and fixed constants, canonical units (KB, s, W)."""

    rate_down: tuple[float, float] = (10 * 125.0, 100 * 125.0)  # 10..100 Mbps
    beta: tuple[float, float] = (0.01, 0.03)
    gamma: tuple[float, float] = (0.0001, 0.001)
    alpha_base: tuple[float, float] = (0.05, 0.9)
    p_max: tuple[float, float] = (1.0, 10.0)
    data_size: tuple[float, float] = (1e6, 1e9)  # 1..1000 GB
    t_cyc: float = 8 * 3600.0
    t_con: float = 6 * 60.0
    # never ranged in the source experiments; configuration defaults
    zeta: float = 1000.0
    p_idle: float = 1.0
    p_leak: float = 0.5
    p_off: float = 2.0
    rate_gs_dc: float = 1e5
    gamma_max: float = 0.001
    colocated: bool = False

    RANGED = ("rate_down", "beta", "gamma", "alpha_base", "p_max", "data_size")

    def __post_init__(self):
        for name in self.RANGED:
            lo, hi = getattr(self, name)
            if not (0 < lo <= hi):
                raise ValueError(f"range {name}=({lo}, {hi}) must satisfy 0 < lower <= upper")
        if self.alpha_base[1] > 1:
            raise ValueError("alpha_base upper bound must be <= 1")
        for name in ("t_cyc", "t_con", "zeta", "p_idle", "p_leak", "p_off", "rate_gs_dc", "gamma_max"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be > 0")
        if self.gamma[1] > self.gamma_max:
            raise ValueError(f"gamma range upper bound {self.gamma[1]} exceeds gamma_max {self.gamma_max}")


DEFAULT_LAYERS = 10


def derive_seed(seed: int, *stream: int) -> int:
    """Independent 64-bit seed for sub-stream ``stream`` of ``seed``."""
    ss = np.random.SeedSequence([seed, *stream])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def sample_scenario(
    ranges: ParameterRanges,
    n_layers: int,
    weights: tuple[float, float],
    seed: int,
) -> Scenario:
    """Draw one scenario; ``weights`` is ``(mu, lambda)``.

    Layer ratios follow alpha_k = c**k with one base ``c`` per scenario.
    """
    if n_layers < 1:
        raise ValueError(f"layer count must be >= 1, got {n_layers}")
    rng = np.random.default_rng(seed)
    draw = {name: float(rng.uniform(*getattr(ranges, name))) for name in ranges.RANGED}
    c = draw["alpha_base"]
    alphas = tuple(c**k for k in range(1, n_layers + 1))
    mu, lam = weights
    scen = Scenario(
        satellite=SatelliteProfile(
            beta=draw["beta"],
            zeta=ranges.zeta,
            p_max=draw["p_max"],
            p_idle=ranges.p_idle,
            p_leak=ranges.p_leak,
            p_off=ranges.p_off,
            rate_down=draw["rate_down"],
            t_cyc=ranges.t_cyc,
            t_con=ranges.t_con,
        ),
        cloud=CloudSegment(
            gamma=draw["gamma"],
            gamma_max=ranges.gamma_max,
            rate_gs_dc=ranges.rate_gs_dc,
            colocated=ranges.colocated,
        ),
        request=InferenceRequest(data_size=draw["data_size"], alphas=alphas),
        mu=mu,
        lam=lam,
    )
    return validate_scenario(scen)


def sample_instance(seed: int, index: int, k_max: int, ranges: ParameterRanges | None = None) -> Scenario:
    """Random-K, random-weight scenario number ``index`` of a verification batch."""
    ranges = ranges or ParameterRanges()
    sub = derive_seed(seed, index)
    rng = np.random.default_rng(sub)
    n_layers = int(rng.integers(1, k_max + 1))
    mu = float(rng.uniform(0.0, 1.0))
    return sample_scenario(ranges, n_layers, (mu, 1.0 - mu), derive_seed(sub, 1))


class Axis(str, Enum):
    DATA_SIZE = "data_size"
    RATE_DOWN = "rate_down"
    WEIGHT_RATIO = "weight_ratio"


@dataclass(frozen=True)
class SweepSpec:
    """Swept axis and its points.

    ``points`` hold canonical values: KB for data_size, KB/s for rate_down,
    and ``(lambda, mu)`` ratio pairs for weight_ratio.
    """

    axis: Axis
    points: tuple = field(default_factory=tuple)
    replications: int = 1
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "axis", Axis(self.axis))
        object.__setattr__(self, "points", tuple(self.points))
        if not self.points:
            raise ValueError("sweep needs at least one point")
        if self.replications < 1:
            raise ValueError("replications must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a non-negative 64-bit integer")
        keys = [axis_key(self.axis, p) for p in self.points]
        diffs = np.diff(keys)
        if len(keys) > 1 and not (np.all(diffs > 0) or np.all(diffs < 0)):
            raise ValueError(f"sweep points must be strictly monotone along {self.axis.value}")


def weights_from_ratio(ratio: tuple[float, float]) -> tuple[float, float]:
    """``(lambda, mu)`` ratio such as ``(3, 1)`` -> normalized ``(mu, lambda)``."""
    lam, mu = ratio
    if lam < 0 or mu < 0 or lam + mu <= 0:
        raise ValueError(f"weight ratio {lam}:{mu} must be non-negative and not all zero")
    lam_share = lam / (lam + mu)
    return 1.0 - lam_share, lam_share


def axis_key(axis: Axis, point) -> float:
    """Scalar position of ``point`` along the axis (latency share for weights)."""
    if axis is Axis.WEIGHT_RATIO:
        return weights_from_ratio(point)[1]
    return float(point)


@dataclass(frozen=True)
class SweepPoint:
    axis_value: float
    replication: int
    seed: int
    scenario: Scenario


def pin(scen: Scenario, axis: Axis, point) -> Scenario:
    if axis is Axis.DATA_SIZE:
        if not point > 0:
            raise ValueError(f"data_size sweep value must be > 0, got {point}")
        scen = replace(scen, request=replace(scen.request, data_size=float(point)))
    elif axis is Axis.RATE_DOWN:
        if not point > 0:
            raise ValueError(f"rate_down sweep value must be > 0, got {point}")
        scen = replace(scen, satellite=replace(scen.satellite, rate_down=float(point)))
    else:
        mu, lam = weights_from_ratio(point)
        scen = replace(scen, mu=mu, lam=lam)
    return validate_scenario(scen)


def build_sweep(
    spec: SweepSpec,
    ranges: ParameterRanges,
    n_layers: int = DEFAULT_LAYERS,
    weights: tuple[float, float] = (0.5, 0.5),
) -> list[SweepPoint]:
    """Paired sweep: one base draw per replication, reused at every axis point.

    Output is ordered by axis point, then replication.
    """
    bases = []
    for r in range(spec.replications):
        rep_seed = derive_seed(spec.seed, r)
        bases.append((rep_seed, sample_scenario(ranges, n_layers, weights, rep_seed)))
    out = []
    for point in spec.points:
        for r, (rep_seed, base) in enumerate(bases):
            out.append(SweepPoint(axis_key(spec.axis, point), r, rep_seed, pin(base, spec.axis, point)))
    return out
