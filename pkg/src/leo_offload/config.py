"""INI-style config files with unit-suffixed values.

Scenario file::

    [satellite]
    beta = 0.02 s/KB
    rate_down = 50 Mbps
    t_cyc = 8 h
    ...
    [cloud]
    gamma = 0.001 s/KB
    [request]
    data_size = 200 GB
    alphas = 0.8, 0.4, 0.1
    [weights]
    mu = 0.5
    lambda = 0.5

Sweep file: a ``[sweep]`` section (axis, points, replications, seed, layers),
optional ``[weights]`` and ``[ranges]`` (``name = lo .. hi`` or a constant).
"""
from __future__ import annotations

import configparser
import re
from dataclasses import dataclass, fields

from .model import CloudSegment, InferenceRequest, SatelliteProfile, Scenario
from .scenario import DEFAULT_LAYERS, Axis, ParameterRanges, SweepSpec, sample_scenario
from .units import UnitError, format_quantity, parse_quantity

SATELLITE_FIELDS = {
    "beta": "latency_per_data",
    "zeta": "rate",
    "p_max": "power",
    "p_idle": "power",
    "p_leak": "power",
    "p_off": "power",
    "rate_down": "rate",
    "t_cyc": "time",
    "t_con": "time",
}
CLOUD_FIELDS = {"gamma": "latency_per_data", "gamma_max": "latency_per_data", "rate_gs_dc": "rate"}
RANGE_FIELDS = {
    "rate_down": "rate",
    "beta": "latency_per_data",
    "gamma": "latency_per_data",
    "alpha_base": "dimensionless",
    "p_max": "power",
    "data_size": "data",
}
CONSTANT_FIELDS = {
    "t_cyc": "time",
    "t_con": "time",
    "zeta": "rate",
    "p_idle": "power",
    "p_leak": "power",
    "p_off": "power",
    "rate_gs_dc": "rate",
    "gamma_max": "latency_per_data",
}
AXIS_DIMENSION = {Axis.DATA_SIZE: "data", Axis.RATE_DOWN: "rate"}


class ConfigError(ValueError):
    def __init__(self, message: str, line: int | None = None, field: str | None = None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(field)
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)


class _Source:
    """Parsed INI text that can point back at the line of a key."""

    def __init__(self, text: str, name: str = "<config>"):
        self.text = text
        self.cp = configparser.ConfigParser(interpolation=None, inline_comment_prefixes=("#", ";"))
        self.cp.optionxform = str
        try:
            self.cp.read_string(text, source=name)
        except configparser.ParsingError as exc:
            lineno, line = exc.errors[0]
            raise ConfigError(f"cannot parse {line.strip()!r}", line=lineno) from None
        except configparser.Error as exc:
            raise ConfigError(str(exc).splitlines()[0], line=getattr(exc, "lineno", None)) from None

    def line_of(self, section: str, key: str | None = None) -> int | None:
        current = None
        for n, raw in enumerate(self.text.splitlines(), start=1):
            s = raw.strip()
            m = re.match(r"^\[([^\]]+)\]$", s)
            if m:
                current = m.group(1).strip()
                if key is None and current == section:
                    return n
                continue
            if current == section and key is not None and re.match(rf"^{re.escape(key)}\s*[=:]", s):
                return n
        return None

    def fail(self, section: str, key: str | None, message: str):
        name = f"[{section}] {key}" if key else f"[{section}]"
        raise ConfigError(message, line=self.line_of(section, key), field=name)

    def section(self, name: str, allowed, required: bool = True) -> dict[str, str]:
        if not self.cp.has_section(name):
            if required:
                raise ConfigError(f"missing section [{name}]", field=f"[{name}]")
            return {}
        items = dict(self.cp.items(name))
        for key in items:
            if key not in allowed:
                self.fail(name, key, f"unknown key {key!r} (allowed: {', '.join(sorted(allowed))})")
        return items

    def quantity(self, section: str, key: str, raw: str, dimension: str) -> float:
        try:
            return parse_quantity(raw, dimension)
        except UnitError as exc:
            self.fail(section, key, str(exc))

    def integer(self, section: str, key: str, raw: str) -> int:
        try:
            return int(raw.strip())
        except ValueError:
            self.fail(section, key, f"expected an integer, got {raw!r}")

    def boolean(self, section: str, key: str, raw: str) -> bool:
        low = raw.strip().lower()
        if low in ("true", "yes", "1", "on"):
            return True
        if low in ("false", "no", "0", "off"):
            return False
        self.fail(section, key, f"expected a boolean, got {raw!r}")


def _weights(src: _Source) -> tuple[float, float] | None:
    items = src.section("weights", {"mu", "lambda"}, required=False)
    if not items:
        return None
    for key in ("mu", "lambda"):
        if key not in items:
            src.fail("weights", None, f"missing key {key!r}")
    mu = src.quantity("weights", "mu", items["mu"], "dimensionless")
    lam = src.quantity("weights", "lambda", items["lambda"], "dimensionless")
    return mu, lam


def _ranges(src: _Source) -> ParameterRanges:
    items = src.section("ranges", set(RANGE_FIELDS) | set(CONSTANT_FIELDS) | {"colocated"}, required=False)
    kw = {}
    for key, raw in items.items():
        if key == "colocated":
            kw[key] = src.boolean("ranges", key, raw)
        elif key in RANGE_FIELDS:
            parts = [p.strip() for p in raw.split("..")]
            if len(parts) == 1:
                parts = parts * 2
            if len(parts) != 2:
                src.fail("ranges", key, f"expected 'low .. high', got {raw!r}")
            kw[key] = tuple(src.quantity("ranges", key, p, RANGE_FIELDS[key]) for p in parts)
        else:
            kw[key] = src.quantity("ranges", key, raw, CONSTANT_FIELDS[key])
    try:
        return ParameterRanges(**kw)
    except ValueError as exc:
        raise ConfigError(str(exc), line=src.line_of("ranges"), field="[ranges]") from None


@dataclass(frozen=True)
class SolveConfig:
    scenario: Scenario
    seed: int | None = None


def parse_scenario_config(text: str, seed: int | None = None, name: str = "<config>") -> SolveConfig:
    """Parse a scenario file.

    A ``[sample]`` section (``layers``, optional ``seed``) draws the scenario
    from ``[ranges]`` instead of listing every parameter; ``seed`` overrides it.
    """
    src = _Source(text, name)
    weights = _weights(src) or (0.5, 0.5)
    if src.cp.has_section("sample"):
        items = src.section("sample", {"layers", "seed"})
        layers = src.integer("sample", "layers", items["layers"]) if "layers" in items else DEFAULT_LAYERS
        if seed is None:
            if "seed" not in items:
                src.fail("sample", None, "a seed is required (config 'seed' or --seed)")
            seed = src.integer("sample", "seed", items["seed"])
        if layers < 1:
            src.fail("sample", "layers", "K must be >= 1")
        scen = sample_scenario(_ranges(src), layers, weights, seed)
        return SolveConfig(scen, seed)

    sat_items = src.section("satellite", set(SATELLITE_FIELDS))
    sat_kw = {}
    for key, dim in SATELLITE_FIELDS.items():
        if key not in sat_items:
            src.fail("satellite", None, f"missing key {key!r}")
        sat_kw[key] = src.quantity("satellite", key, sat_items[key], dim)

    cloud_items = src.section("cloud", set(CLOUD_FIELDS) | {"colocated"})
    cloud_kw = {}
    for key, dim in CLOUD_FIELDS.items():
        if key not in cloud_items:
            src.fail("cloud", None, f"missing key {key!r}")
        cloud_kw[key] = src.quantity("cloud", key, cloud_items[key], dim)
    cloud_kw["colocated"] = src.boolean("cloud", "colocated", cloud_items.get("colocated", "false"))

    req_items = src.section("request", {"data_size", "alphas", "alpha_base", "layers"})
    if "data_size" not in req_items:
        src.fail("request", None, "missing key 'data_size'")
    data_size = src.quantity("request", "data_size", req_items["data_size"], "data")
    if "alphas" in req_items:
        raw = req_items["alphas"].strip()
        alphas = tuple(
            src.quantity("request", "alphas", a, "dimensionless") for a in raw.split(",") if a.strip()
        ) if raw else ()
    elif "alpha_base" in req_items:
        c = src.quantity("request", "alpha_base", req_items["alpha_base"], "dimensionless")
        layers = src.integer("request", "layers", req_items.get("layers", str(DEFAULT_LAYERS)))
        alphas = tuple(c**k for k in range(1, layers + 1))
    else:
        src.fail("request", None, "need 'alphas' or 'alpha_base' (+ 'layers')")

    scen = Scenario(
        satellite=SatelliteProfile(**sat_kw),
        cloud=CloudSegment(**cloud_kw),
        request=InferenceRequest(data_size=data_size, alphas=alphas),
        mu=weights[0],
        lam=weights[1],
    )
    return SolveConfig(scen, seed)


@dataclass(frozen=True)
class SweepConfig:
    spec: SweepSpec
    ranges: ParameterRanges
    n_layers: int
    weights: tuple[float, float]


def _parse_points(src: _Source, axis: Axis, raw: str):
    items = [p.strip() for p in raw.split(",") if p.strip()]
    if not items:
        src.fail("sweep", "points", "needs at least one point")
    if axis is Axis.WEIGHT_RATIO:
        out = []
        for item in items:
            m = re.match(r"^([0-9.eE+-]+)\s*:\s*([0-9.eE+-]+)$", item)
            if not m:
                src.fail("sweep", "points", f"weight point {item!r} must look like 'lambda:mu', e.g. 3:1")
            out.append((float(m.group(1)), float(m.group(2))))
        return tuple(out)
    dim = AXIS_DIMENSION[axis]
    # a unit on the last item applies to bare numbers before it
    trailing = re.match(r"^\S+\s+(\S+)$", items[-1])
    unit = trailing.group(1) if trailing else ""
    out = []
    for item in items:
        text = item if (" " in item or not unit) else f"{item} {unit}"
        out.append(src.quantity("sweep", "points", text, dim))
    return tuple(out)


def parse_sweep_config(text: str, seed: int | None = None, name: str = "<config>") -> SweepConfig:
    src = _Source(text, name)
    items = src.section("sweep", {"axis", "points", "replications", "seed", "layers"})
    for key in ("axis", "points"):
        if key not in items:
            src.fail("sweep", None, f"missing key {key!r}")
    try:
        axis = Axis(items["axis"].strip())
    except ValueError:
        src.fail("sweep", "axis", f"unknown axis {items['axis']!r} (expected one of {[a.value for a in Axis]})")
    points = _parse_points(src, axis, items["points"])
    replications = src.integer("sweep", "replications", items.get("replications", "1"))
    if seed is None:
        seed = src.integer("sweep", "seed", items.get("seed", "0"))
    layers = src.integer("sweep", "layers", items.get("layers", str(DEFAULT_LAYERS)))
    if layers < 1:
        src.fail("sweep", "layers", "K must be >= 1")
    try:
        spec = SweepSpec(axis=axis, points=points, replications=replications, seed=seed)
    except ValueError as exc:
        src.fail("sweep", None, str(exc))
    return SweepConfig(spec, _ranges(src), layers, _weights(src) or (0.5, 0.5))


def scenario_to_config(scen: Scenario) -> str:
    """Lossless scenario file in canonical units (parses back to an equal Scenario)."""
    lines = ["[satellite]"]
    for key, dim in SATELLITE_FIELDS.items():
        lines.append(f"{key} = {format_quantity(getattr(scen.satellite, key), dim)}")
    lines.append("")
    lines.append("[cloud]")
    for key, dim in CLOUD_FIELDS.items():
        lines.append(f"{key} = {format_quantity(getattr(scen.cloud, key), dim)}")
    lines.append(f"colocated = {str(scen.cloud.colocated).lower()}")
    lines += [
        "",
        "[request]",
        f"data_size = {format_quantity(scen.request.data_size, 'data')}",
        "alphas = " + ", ".join(repr(a) for a in scen.request.alphas),
        "",
        "[weights]",
        f"mu = {scen.mu!r}",
        f"lambda = {scen.lam!r}",
    ]
    return "\n".join(lines) + "\n"


def ranges_as_dict(r: ParameterRanges) -> dict:
    return {f.name: getattr(r, f.name) for f in fields(r)}

