"""Command-line entry point: ``solve``, ``sweep`` and ``verify``."""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, TextIO

from . import __version__
from .config import (
    ConfigError,
    SweepConfig,
    parse_scenario_config,
    parse_sweep_config,
    ranges_as_dict,
    scenario_to_config,
)
from .model import Scenario, ValidationError, validate_scenario
from .objective import normalization_bounds
from .report import AXIS_DISPLAY, evaluate_sweep, render_csv, render_summary, summarize
from .scenario import PRNG_ALGORITHM, ParameterRanges, build_sweep, sample_instance
from .solver import TIE_TOL, Solution, baseline_arg, baseline_ars, solve_bruteforce, solve_ilpb

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_CONFIG = 2
EXIT_VALIDATION = 3


def format_solution(sol: Solution, scen: Scenario) -> str:
    lat, en, obj = sol.latency, sol.energy, sol.objective
    lines = [
        f"method          {sol.method.value}",
        f"layers (K)      {scen.n_layers}",
        f"split_index     {sol.split_index}",
        f"decision h      {' '.join(str(v) for v in sol.decision.h)}",
        f"nodes_explored  {sol.nodes_explored}",
        "latency [s]",
        f"  satellite     {lat.t_satellite:.12g}",
        f"  sat->ground   {lat.t_s_to_g:.12g}",
        f"  ground->dc    {lat.t_g_to_c:.12g}",
        f"  cloud         {lat.t_cloud:.12g}",
        f"  total T       {lat.total:.12g}",
        "energy [J]",
        f"  processing    {en.e_processing:.12g}",
        f"  transmission  {en.e_transmission:.12g}",
        f"  total E       {en.total:.12g}",
        f"weights         mu={scen.mu:.12g} lambda={scen.lam:.12g}",
        f"norm_E          {obj.norm_e:.12g}",
        f"norm_T          {obj.norm_t:.12g}",
        f"Z               {obj.z:.12g}",
    ]
    return "\n".join(lines) + "\n"


def run_solve(config_path: Path, seed: int | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    try:
        cfg = parse_scenario_config(Path(config_path).read_text(), seed=seed, name=str(config_path))
        scen = validate_scenario(cfg.scenario)
    except (ConfigError, OSError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    sol = solve_ilpb(scen)
    out.write(format_solution(sol, scen))
    return EXIT_OK


def sweep_metadata(cfg: SweepConfig, log10: bool) -> dict:
    spec = cfg.spec
    unit, scale = AXIS_DISPLAY[spec.axis]
    return {
        "tool": "leo_offload",
        "version": __version__,
        "prng": PRNG_ALGORITHM,
        "axis": spec.axis.value,
        "axis_unit": unit,
        "points": [list(p) if isinstance(p, tuple) else p / scale for p in spec.points],
        "replications": spec.replications,
        "seed": spec.seed,
        "layers": cfg.n_layers,
        "weights": {"mu": cfg.weights[0], "lambda": cfg.weights[1]},
        "ranges_canonical_units": ranges_as_dict(cfg.ranges),
        "canonical_units": {"data": "KB", "rate": "KB/s", "time": "s", "power": "W"},
        "report_scale": "log10" if log10 else "raw",
    }


def run_sweep(
    config_path: Path,
    out_path: Path,
    seed: int | None = None,
    log10: bool = False,
    jobs: int = 1,
    out: TextIO | None = None,
) -> int:
    out = out or sys.stdout
    try:
        cfg = parse_sweep_config(Path(config_path).read_text(), seed=seed, name=str(config_path))
        points = build_sweep(cfg.spec, cfg.ranges, cfg.n_layers, cfg.weights)
    except (ConfigError, OSError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ValueError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    out_path = Path(out_path)
    if not out_path.parent.is_dir():
        print(f"config error: output directory {out_path.parent} does not exist", file=sys.stderr)
        return EXIT_CONFIG
    rows = evaluate_sweep(points, cfg.spec.axis, jobs=jobs)
    with open(out_path, "w", encoding="utf-8", newline="") as fh:
        fh.write(render_csv(rows, log10=log10))
    meta_path = out_path.with_name(out_path.name + ".meta.json")
    meta_path.write_text(json.dumps(sweep_metadata(cfg, log10), indent=2) + "\n", encoding="utf-8")
    out.write(render_summary(summarize(rows), cfg.spec.axis, log10=log10))
    out.write(f"wrote {len(rows)} rows to {out_path} (metadata: {meta_path.name})\n")
    return EXIT_OK


@dataclass
class VerifyReport:
    instances: int = 0
    passed: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_instance(scen: Scenario, solver: Callable = solve_ilpb) -> list[str]:
    """Problems found comparing ``solver`` against the enumeration oracle."""
    bounds = normalization_bounds(scen)
    oracle = solve_bruteforce(scen, bounds)
    try:
        sol = solver(scen, bounds)
    except Exception as exc:  # noqa: BLE001 - any solver crash is a counterexample
        return [f"solver raised {type(exc).__name__}: {exc}"]
    problems = []
    if abs(sol.z - oracle.z) > TIE_TOL:
        problems.append(f"z mismatch: solver {sol.z!r} vs oracle {oracle.z!r}")
    if sol.decision != oracle.decision:
        problems.append(f"decision mismatch: solver split {sol.split_index} vs oracle split {oracle.split_index}")
    for base in (baseline_arg(scen, bounds), baseline_ars(scen, bounds)):
        if sol.z > base.z:
            problems.append(f"dominance violated: z={sol.z!r} > {base.method.value} z={base.z!r}")
    return problems


def run_verify(
    instances: int,
    k_max: int,
    seed: int,
    solver: Callable = solve_ilpb,
    ranges: ParameterRanges | None = None,
    out: TextIO | None = None,
) -> tuple[int, VerifyReport]:
    out = out or sys.stdout
    report = VerifyReport()
    if instances <= 0:
        out.write("warning: 0 instances requested; vacuous pass\n")
        return EXIT_OK, report
    for i in range(instances):
        scen = sample_instance(seed, i, k_max, ranges)
        problems = check_instance(scen, solver)
        report.instances += 1
        if problems:
            report.failures.append((i, scen, problems))
        else:
            report.passed += 1
    out.write(f"verify: {report.passed}/{report.instances} instances passed (K in [1, {k_max}], seed {seed})\n")
    if report.ok:
        out.write("PASS\n")
        return EXIT_OK, report
    i, scen, problems = report.failures[0]
    out.write(f"FAIL: {len(report.failures)} counterexample(s); first is instance {i}\n")
    for p in problems:
        out.write(f"  - {p}\n")
    out.write("# counterexample scenario\n")
    out.write(scenario_to_config(scen))
    return EXIT_VERIFY_FAILED, report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leo-offload",
        description="Layer-wise DNN inference offloading between a LEO satellite and the ground.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="optimal split for one scenario")
    p.add_argument("--config", required=True, type=Path)
    p.add_argument("--seed", type=int, default=None, help="seed for a [sample] scenario")

    p = sub.add_parser("sweep", help="paired parameter sweep to CSV")
    p.add_argument("--config", required=True, type=Path)
    p.add_argument("--out", required=True, type=Path)
    p.add_argument("--seed", type=int, default=None, help="overrides the config seed")
    p.add_argument("--log10", action="store_true", help="append log10 columns and report log10 means")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")

    p = sub.add_parser("verify", help="check ILPB against brute force on random scenarios")
    p.add_argument("--instances", type=int, default=1000)
    p.add_argument("--k-max", type=int, default=24)
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "solve":
        return run_solve(args.config, args.seed)
    if args.command == "sweep":
        return run_sweep(args.config, args.out, args.seed, args.log10, args.jobs)
    if args.k_max < 1:
        print("config error: --k-max must be >= 1", file=sys.stderr)
        return EXIT_CONFIG
    code, _ = run_verify(args.instances, args.k_max, args.seed)
    return code


if __name__ == "__main__":
    sys.exit(main())
