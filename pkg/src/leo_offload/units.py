"""Unit-suffixed quantity parsing into canonical KB / s / W units.

Decimal prefixes throughout: 1 MB = 1000 KB, 1 Mbps = 125 KB/s.
"""
from __future__ import annotations

import re

# dimension -> {suffix: factor to canonical}
UNITS: dict[str, dict[str, float]] = {
    "data": {"B": 1e-3, "KB": 1.0, "MB": 1e3, "GB": 1e6, "TB": 1e9},
    "rate": {
        "B/s": 1e-3, "KB/s": 1.0, "MB/s": 1e3, "GB/s": 1e6,
        "bps": 1.25e-4, "kbps": 0.125, "Kbps": 0.125, "Mbps": 125.0, "Gbps": 125e3,
    },
    "time": {"ms": 1e-3, "s": 1.0, "min": 60.0, "h": 3600.0},
    "latency_per_data": {"s/KB": 1.0, "ms/KB": 1e-3, "s/MB": 1e-3, "s/GB": 1e-6},
    "power": {"mW": 1e-3, "W": 1.0, "kW": 1e3},
    "dimensionless": {"": 1.0},
}

CANONICAL = {
    "data": "KB",
    "rate": "KB/s",
    "time": "s",
    "latency_per_data": "s/KB",
    "power": "W",
    "dimensionless": "",
}

_QUANTITY = re.compile(r"^\s*([-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)\s*([A-Za-z/]*)\s*$")


class UnitError(ValueError):
    pass


def split_quantity(text: str) -> tuple[float, str]:
    m = _QUANTITY.match(text)
    if not m:
        raise UnitError(f"cannot parse quantity {text!r}")
    return float(m.group(1)), m.group(2)


def parse_quantity(text: str, dimension: str) -> float:
    """Parse ``"50 Mbps"`` style text into the canonical unit of ``dimension``.

    A unit suffix is mandatory for every dimension except ``dimensionless``.
    """
    value, unit = split_quantity(text)
    table = UNITS[dimension]
    if unit not in table:
        if unit == "":
            raise UnitError(f"{text!r}: missing unit, expected one of {sorted(table)}")
        raise UnitError(f"{text!r}: unit {unit!r} is not a {dimension} unit (expected one of {sorted(table)})")
    return value * table[unit]


def to_unit(value: float, dimension: str, unit: str) -> float:
    """Convert a canonical value into ``unit``."""
    return value / UNITS[dimension][unit]


def format_quantity(value: float, dimension: str) -> str:
    """Lossless canonical rendering, e.g. ``"360.0 s"``."""
    unit = CANONICAL[dimension]
    return f"{value!r} {unit}".rstrip()
