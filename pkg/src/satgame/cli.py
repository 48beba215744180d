"""Command-line workbench.

    satgame analyze  <scenario> [--json]
    satgame simulate <scenario> --policy <p> [--dt s] [--out-prefix path]
    satgame sweep    <scenario> --axis heading|speed --min X --max Y --n N
    satgame regions  <scenario> --speeds v1,v2,... [--check]

``<scenario>`` is a JSON file path or a bundled name (headings, capture, escape,
tangent). Exit status: 0 success, 2 invalid input, 3 internal diagnostic
(bisection bracket, timeout, failed nesting check).
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys
from pathlib import Path

from . import analysis, workbench
from .analysis import AnalysisError
from .model import ConfigError, load_scenario
from .simulation import OutcomeKind, SimulationParams, simulate
from .strategy import TargetPolicy

EXIT_OK, EXIT_INPUT, EXIT_DIAGNOSTIC = 0, 2, 3


class DiagnosticFailure(Exception):
    pass


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    print(f"wrote {path}")


def cmd_analyze(args) -> int:
    cfg, _ = load_scenario(args.scenario)
    report = workbench.analysis_report(cfg, args.samples)
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        sys.stdout.write(workbench.format_report(report))
    return EXIT_OK


def cmd_simulate(args) -> int:
    cfg, doc = load_scenario(args.scenario)
    if args.v_t is not None:
        cfg = cfg.with_target_speed(args.v_t)
    policy = TargetPolicy.parse(args.policy or doc.get("policy", "best-escape"))
    params = SimulationParams(dt=args.dt, max_time=args.max_time)
    out = simulate(cfg, policy, params)
    s = out.strategy
    print(f"policy {policy}: target heading {_deg(s.gamma_t):.2f} deg, "
          f"sensor {_deg(s.gamma_s):.2f} deg, attacker {_deg(s.gamma_a):.2f} deg")
    print(f"outcome: {out.kind.value} at t = {out.t_final:.4f} s, "
          f"target at ({out.terminal_point.x:.4f}, {out.terminal_point.y:.4f})"
          + (" [capture/escape tie]" if out.tie else ""))
    if args.out_prefix:
        prefix = Path(args.out_prefix)
        _write(prefix.with_name(prefix.name + "_trajectory.csv"), out.trajectory.to_csv(args.stride))
        _write(prefix.with_name(prefix.name + "_regions.svg"), workbench.engagement_figure(cfg, out))
    if out.kind is OutcomeKind.TIMEOUT:
        raise DiagnosticFailure(f"timeout after {args.max_time} s")
    return EXIT_OK


def cmd_sweep(args) -> int:
    cfg, _ = load_scenario(args.scenario)
    params = SimulationParams(dt=args.dt, max_time=args.max_time)
    result = workbench.sweep(cfg, args.axis, args.min, args.max, args.n, params, args.samples, args.jobs)
    text = result.to_csv()
    if args.out:
        _write(Path(args.out), text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_regions(args) -> int:
    cfg, _ = load_scenario(args.scenario)
    try:
        speeds = [float(v) for v in args.speeds.split(",") if v.strip()]
    except ValueError:
        raise ConfigError([("--speeds", f"expected comma-separated numbers, got {args.speeds!r}")]) from None
    if not speeds:
        raise ConfigError([("--speeds", "no speeds given")])
    regions = workbench.regions(cfg, speeds, args.samples)
    prefix = Path(args.out_prefix)
    _write(prefix.with_name(prefix.name + "_boundaries.csv"), regions.to_csv())
    _write(prefix.with_name(prefix.name + ".svg"), regions.figure())
    if args.check:
        problems = regions.nesting_violations()
        if problems:
            raise DiagnosticFailure("; ".join(problems))
        print(f"nesting ok across {len(speeds)} speeds")
    return EXIT_OK


def _deg(rad):
    return math.degrees(rad)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="satgame", description="Sensor-attacker-target pursuit-evasion workbench")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="closed-form results for a scenario")
    a.add_argument("scenario")
    a.add_argument("--json", action="store_true", help="machine-readable output")
    a.add_argument("--samples", type=int, default=analysis.DEFAULT_SAMPLES)
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("simulate", help="simulate one engagement")
    s.add_argument("scenario")
    s.add_argument("--policy", help="fixed:<deg>, away-sensor, away-attacker, toward-attacker, best-escape")
    s.add_argument("--dt", type=float, default=1e-3)
    s.add_argument("--max-time", type=float, default=1000.0)
    s.add_argument("--v-t", type=float, help="override the target speed")
    s.add_argument("--out-prefix", help="write <prefix>_trajectory.csv and <prefix>_regions.svg")
    s.add_argument("--stride", type=int, default=1, help="keep every k-th trajectory row")
    s.set_defaults(func=cmd_simulate)

    w = sub.add_parser("sweep", help="classify a grid of headings or speeds")
    w.add_argument("scenario")
    w.add_argument("--axis", choices=("heading", "speed"), required=True)
    w.add_argument("--min", type=float, required=True)
    w.add_argument("--max", type=float, required=True)
    w.add_argument("--n", type=int, required=True)
    w.add_argument("--dt", type=float, default=1e-3)
    w.add_argument("--max-time", type=float, default=1000.0)
    w.add_argument("--samples", type=int, default=analysis.DEFAULT_SAMPLES)
    w.add_argument("--jobs", type=int, default=1)
    w.add_argument("--out", help="CSV path (default stdout)")
    w.set_defaults(func=cmd_sweep)

    r = sub.add_parser("regions", help="sensable regions and Apollonius circles for several speeds")
    r.add_argument("scenario")
    r.add_argument("--speeds", required=True)
    r.add_argument("--samples", type=int, default=analysis.DEFAULT_SAMPLES)
    r.add_argument("--out-prefix", default="regions")
    r.add_argument("--check", action="store_true", help="assert the regions nest monotonically")
    r.set_defaults(func=cmd_regions)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except ConfigError as err:
        for fld, msg in err.problems:
            print(f"invalid scenario: {fld}: {msg}", file=sys.stderr)
        return EXIT_INPUT
    except (FileNotFoundError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    except (AnalysisError, DiagnosticFailure) as err:
        print(f"diagnostic: {err}", file=sys.stderr)
        return EXIT_DIAGNOSTIC


if __name__ == "__main__":
    sys.exit(main())
