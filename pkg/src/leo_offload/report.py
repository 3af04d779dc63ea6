"""Sweep evaluation, CSV rows and text summaries."""
from __future__ import annotations

import math
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .objective import normalization_bounds
from .scenario import Axis, SweepPoint
from .solver import Method, Solution, baseline_arg, baseline_ars, solve_ilpb

SWEEP_METHODS = (Method.ILPB, Method.ARG, Method.ARS)

CSV_COLUMNS = (
    "axis_value",
    "replication",
    "method",
    "raw_T_seconds",
    "raw_E_joules",
    "norm_T",
    "norm_E",
    "Z",
    "split_index",
    "nodes_explored",
    "seed",
)
LOG10_COLUMNS = ("log10_T", "log10_E")

# axis values are written in these units
AXIS_DISPLAY = {
    Axis.DATA_SIZE: ("GB", 1e6),
    Axis.RATE_DOWN: ("MB/s", 1e3),
    Axis.WEIGHT_RATIO: ("lambda share", 1.0),
}


def fmt(x: float) -> str:
    return f"{x:.12g}"


def _log10(x: float) -> float:
    return math.log10(x) if x > 0 else -math.inf


@dataclass(frozen=True)
class ResultRow:
    axis_value: float
    replication: int
    method: Method
    raw_t: float
    raw_e: float
    norm_t: float
    norm_e: float
    z: float
    split_index: int
    nodes_explored: int
    seed: int

    @classmethod
    def from_solution(cls, point: SweepPoint, axis_value: float, sol: Solution) -> "ResultRow":
        o = sol.objective
        return cls(
            axis_value, point.replication, sol.method, o.raw_t, o.raw_e, o.norm_t, o.norm_e,
            o.z, sol.split_index, sol.nodes_explored, point.seed,
        )

    def cells(self, log10: bool = False) -> list[str]:
        out = [
            fmt(self.axis_value), str(self.replication), self.method.value,
            fmt(self.raw_t), fmt(self.raw_e), fmt(self.norm_t), fmt(self.norm_e), fmt(self.z),
            str(self.split_index), str(self.nodes_explored), str(self.seed),
        ]
        if log10:
            out += [fmt(_log10(self.raw_t)), fmt(_log10(self.raw_e))]
        return out


def evaluate_point(point: SweepPoint, axis: Axis) -> list[ResultRow]:
    """ILPB, ARG and ARS rows for one (axis point, replication)."""
    scen = point.scenario
    bounds = normalization_bounds(scen)
    display = point.axis_value / AXIS_DISPLAY[axis][1]
    return [
        ResultRow.from_solution(point, display, solve(scen, bounds))
        for solve in (solve_ilpb, baseline_arg, baseline_ars)
    ]


def evaluate_sweep(points: list[SweepPoint], axis: Axis, jobs: int = 1) -> list[ResultRow]:
    """Rows in (axis point, replication, method) order regardless of ``jobs``."""
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(evaluate_point, points, [axis] * len(points), chunksize=16))
    else:
        chunks = [evaluate_point(p, axis) for p in points]
    return [row for chunk in chunks for row in chunk]


def render_csv(rows: list[ResultRow], log10: bool = False) -> str:
    header = list(CSV_COLUMNS) + (list(LOG10_COLUMNS) if log10 else [])
    lines = [",".join(header)]
    lines += [",".join(r.cells(log10)) for r in rows]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class PointSummary:
    axis_value: float
    n: int
    mean_z: dict
    mean_t: dict
    mean_e: dict

    @property
    def ilpb_ratio(self) -> float:
        """mean Z(ILPB) / mean((Z(ARG) + Z(ARS)) / 2)."""
        ref = (self.mean_z[Method.ARG] + self.mean_z[Method.ARS]) / 2
        return self.mean_z[Method.ILPB] / ref if ref > 0 else math.nan


def summarize(rows: list[ResultRow]) -> list[PointSummary]:
    groups: dict[float, dict[Method, list[ResultRow]]] = defaultdict(lambda: defaultdict(list))
    order: list[float] = []
    for r in rows:
        if r.axis_value not in groups:
            order.append(r.axis_value)
        groups[r.axis_value][r.method].append(r)
    out = []
    for value in order:
        by = groups[value]

        def mean(attr):
            return {m: sum(getattr(r, attr) for r in by[m]) / len(by[m]) for m in SWEEP_METHODS}

        out.append(PointSummary(value, len(by[Method.ILPB]), mean("z"), mean("raw_t"), mean("raw_e")))
    return out


def render_summary(summaries: list[PointSummary], axis: Axis, log10: bool = False) -> str:
    unit = AXIS_DISPLAY[axis][0]
    head = f"{'axis (' + unit + ')':>16} {'n':>5}"
    for m in SWEEP_METHODS:
        head += f" {'Z ' + m.value:>12}"
    head += f" {'ILPB/avg(ARG,ARS)':>18}"
    lines = [head]
    for s in summaries:
        line = f"{fmt(s.axis_value):>16} {s.n:>5}"
        for m in SWEEP_METHODS:
            line += f" {s.mean_z[m]:>12.6f}"
        line += f" {s.ilpb_ratio:>18.6f}"
        lines.append(line)
    label = "log10 mean" if log10 else "mean"
    lines.append("")
    lines.append(f"{'axis (' + unit + ')':>16} " + " ".join(
        f"{label + ' T ' + m.value:>18} {label + ' E ' + m.value:>18}" for m in SWEEP_METHODS
    ))
    for s in summaries:
        cells = []
        for m in SWEEP_METHODS:
            t, e = s.mean_t[m], s.mean_e[m]
            if log10:
                t, e = _log10(t), _log10(e)
            cells.append(f"{t:>18.6g} {e:>18.6g}")
        lines.append(f"{fmt(s.axis_value):>16} " + " ".join(cells))
    return "\n".join(lines) + "\n"
