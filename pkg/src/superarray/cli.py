"""Command-line surface and machine-readable output formats.

Subcommands
-----------
design    solve one (frequency, steering) point, write the filter JSON,
          and print a metrics line
sweep     write a per-frequency or per-steering metrics CSV
optimize  run the genetic optimizer with checkpoint/resume support
compare   rank two or more geometries by overall approximation error

All angles are degrees at this boundary and radians internally. Primary
outputs are byte-identical across reruns with identical inputs; wall-clock
information goes only to the sidecar ``run.log``.

Exit codes: 0 success, 2 configuration/validation failure, 3 numerical or
solver failure, 4 checkpoint incompatibility.
"""

from __future__ import annotations

import argparse
import datetime as _dt
import hashlib
import json
import math
import os
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .arraymodel import ArrayConfig, PhysicalConstants, SteeringContext, df, validate_spacing, wng
from .beamformer import assemble_system, solve_filter
from .errors import (
    CheckpointError,
    SolverError,
    SuperarrayError,
    ValidationError,
)
from .evaluation import WNG_DB_FLOOR, band_summary, sweep_frequency, sweep_steering
from .ga import DesignProblem, GaParams, GaRunState, Individual, optimize
from .idp import IdpSpec
from .metrics import DesignGrid, direction_error

SCHEMA_VERSION = 1
CHECKPOINT_SCHEMA_VERSION = 1
SPEED_OF_SOUND_ENV = "SUPERARRAY_SPEED_OF_SOUND"

_EXIT_VALIDATION = 2
_EXIT_SOLVER = 3
_EXIT_CHECKPOINT = 4


# ---------------------------------------------------------------------------
# configuration parsing


@dataclass
class RunConfig:
    m: int
    min_spacing: float
    aperture: float
    consts: PhysicalConstants
    idp: IdpSpec
    grid: DesignGrid
    trunc: int
    regularization: float
    ga: GaParams
    output_dir: Path
    checkpoint_interval: int
    resolved: dict
    fingerprint: str


def _fingerprints(resolved: dict) -> tuple[str, str]:
    """Full config fingerprint plus the run-length-agnostic problem one.

    The problem fingerprint keys checkpoints: it covers everything that
    shapes the optimization trajectory (physics, grids, solver, GA
    operators, seed) but not how many generations are run, so a finished
    or interrupted run can be extended or resumed under the same problem.
    """
    full = hashlib.sha256(
        json.dumps(resolved, sort_keys=True, separators=(",", ":")).encode()
    ).hexdigest()
    problem_key = {k: resolved[k] for k in ("problem", "idp", "grid", "solver")}
    problem_key["ga"] = {k: v for k, v in resolved["ga"].items()
                         if k != "generations"}
    problem = hashlib.sha256(
        json.dumps(problem_key, sort_keys=True, separators=(",", ":")).encode()
    ).hexdigest()
    return full, problem


def _block(raw: dict, name: str, where: str) -> dict:
    if name not in raw:
        raise ValidationError(f"{where}: missing block '{name}'")
    if not isinstance(raw[name], dict):
        raise ValidationError(f"{where}: block '{name}' must be an object")
    return raw[name]


def _field(block: dict, name: str, kind, where: str, check=None, msg=""):
    if name not in block:
        raise ValidationError(f"{where}.{name}: missing field")
    value = block[name]
    if kind is float and isinstance(value, int) and not isinstance(value, bool):
        value = float(value)
    if not isinstance(value, kind) or isinstance(value, bool):
        raise ValidationError(
            f"{where}.{name}: expected {kind.__name__}, got {type(value).__name__}"
        )
    if check is not None and not check(value):
        raise ValidationError(f"{where}.{name}: {msg} (got {value!r})")
    return value


def load_config(path) -> RunConfig:
    """Parse and validate a run configuration file."""
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise ValidationError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ValidationError(f"{path}: config must be a JSON object")
    where = str(path)
    version = _field(raw, "schema_version", int, where,
                     check=lambda v: v == SCHEMA_VERSION,
                     msg=f"must equal {SCHEMA_VERSION}")

    problem = _block(raw, "problem", where)
    m = _field(problem, "m", int, f"{where}.problem",
               check=lambda v: v >= 1, msg="must be >= 1")
    d_c = _field(problem, "d_c", float, f"{where}.problem",
                 check=lambda v: v >= 0, msg="must be >= 0")
    aperture = _field(problem, "L", float, f"{where}.problem",
                      check=lambda v: v > 0, msg="must be > 0")
    c = _field(problem, "c", float, f"{where}.problem",
               check=lambda v: v > 0, msg="must be > 0")
    env_c = os.environ.get(SPEED_OF_SOUND_ENV)
    if env_c is not None:
        try:
            c = float(env_c)
        except ValueError as exc:
            raise ValidationError(
                f"{SPEED_OF_SOUND_ENV}: not a number: {env_c!r}"
            ) from exc
        if not c > 0:
            raise ValidationError(f"{SPEED_OF_SOUND_ENV}: must be > 0")

    idp_block = _block(raw, "idp", where)
    order = _field(idp_block, "n", int, f"{where}.idp",
                   check=lambda v: v >= 1, msg="must be >= 1")
    alpha = idp_block.get("alpha")
    if (not isinstance(alpha, list)
            or len(alpha) != order + 1
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool)
                       for v in alpha)):
        raise ValidationError(
            f"{where}.idp.alpha: must be a list of {order + 1} numbers"
        )
    alpha = np.asarray(alpha, dtype=float)
    total = float(alpha.sum())
    if abs(total - 1.0) > 1e-9:
        raise ValidationError(
            f"{where}.idp.alpha: coefficients must sum to 1 within 1e-9, "
            f"got {total!r}"
        )
    spec = IdpSpec(order=order, alpha=alpha / total)

    grid_block = _block(raw, "grid", where)
    gwhere = f"{where}.grid"
    f_lo = _field(grid_block, "f_lo", float, gwhere,
                  check=lambda v: v > 0, msg="must be > 0")
    f_hi = _field(grid_block, "f_hi", float, gwhere,
                  check=lambda v: v >= f_lo, msg="must be >= f_lo")
    f_step = _field(grid_block, "f_step", float, gwhere,
                    check=lambda v: v > 0, msg="must be > 0")
    ts_lo = _field(grid_block, "theta_s_lo", float, gwhere,
                   check=lambda v: 0 <= v < 360, msg="must lie in [0, 360)")
    ts_hi = _field(grid_block, "theta_s_hi", float, gwhere,
                   check=lambda v: ts_lo <= v < 360,
                   msg="must lie in [theta_s_lo, 360)")
    ts_step = _field(grid_block, "theta_s_step", float, gwhere,
                     check=lambda v: v > 0, msg="must be > 0")
    k_angles = _field(grid_block, "eval_angle_count", int, gwhere,
                      check=lambda v: v >= 8, msg="must be >= 8")
    grid = DesignGrid.regular(f_lo, f_hi, f_step, ts_lo, ts_hi, ts_step,
                              k_angles)

    solver = _block(raw, "solver", where)
    trunc = _field(solver, "trunc", int, f"{where}.solver",
                   check=lambda v: v >= spec.order,
                   msg=f"must be >= idp order {spec.order}")
    reg = _field(solver, "regularization", float, f"{where}.solver",
                 check=lambda v: v >= 0, msg="must be >= 0")

    ga_block = _block(raw, "ga", where)
    gawhere = f"{where}.ga"
    try:
        ga = GaParams(
            population_size=_field(ga_block, "population_size", int, gawhere),
            generations=_field(ga_block, "generations", int, gawhere),
            crossover_prob=_field(ga_block, "crossover_prob", float, gawhere),
            mutation_prob=_field(ga_block, "mutation_prob", float, gawhere),
            tournament_size=_field(ga_block, "tournament_size", int, gawhere),
            elite_count=_field(ga_block, "elite_count", int, gawhere),
            seed=_field(ga_block, "seed", int, gawhere),
        )
    except ValidationError as exc:
        raise ValidationError(f"{gawhere}: {exc}") from exc

    io_block = _block(raw, "io", where)
    out_dir = Path(_field(io_block, "output_dir", str, f"{where}.io",
                          check=bool, msg="must be non-empty"))
    interval = _field(io_block, "checkpoint_interval", int, f"{where}.io",
                      check=lambda v: v >= 0,
                      msg="must be >= 0 (0 disables checkpoints)")

    resolved = {
        "schema_version": version,
        "problem": {"m": m, "d_c": d_c, "L": aperture, "c": c},
        "idp": {"n": order, "alpha": [float(v) for v in spec.alpha]},
        "grid": {"f_lo": f_lo, "f_hi": f_hi, "f_step": f_step,
                 "theta_s_lo": ts_lo, "theta_s_hi": ts_hi,
                 "theta_s_step": ts_step, "eval_angle_count": k_angles},
        "solver": {"trunc": trunc, "regularization": reg},
        "ga": {"population_size": ga.population_size,
               "generations": ga.generations,
               "crossover_prob": ga.crossover_prob,
               "mutation_prob": ga.mutation_prob,
               "tournament_size": ga.tournament_size,
               "elite_count": ga.elite_count, "seed": ga.seed},
    }
    fingerprint, _ = _fingerprints(resolved)

    return RunConfig(m=m, min_spacing=d_c, aperture=aperture,
                     consts=PhysicalConstants(speed_of_sound=c), idp=spec,
                     grid=grid, trunc=trunc, regularization=reg, ga=ga,
                     output_dir=out_dir, checkpoint_interval=interval,
                     resolved=resolved, fingerprint=fingerprint)


def load_geometry(path, config: RunConfig) -> ArrayConfig:
    """Read a geometry file: a JSON array of {position_m, directivity}."""
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise ValidationError(f"cannot read geometry {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(raw, list) or not raw:
        raise ValidationError(f"{path}: geometry must be a non-empty JSON array")
    positions = []
    directivity = []
    for i, entry in enumerate(raw):
        if not isinstance(entry, dict):
            raise ValidationError(f"{path}[{i}]: must be an object")
        for key in ("position_m", "directivity"):
            if key not in entry or isinstance(entry[key], bool) \
                    or not isinstance(entry[key], (int, float)):
                raise ValidationError(f"{path}[{i}].{key}: missing or not a number")
        positions.append(float(entry["position_m"]))
        directivity.append(float(entry["directivity"]))
    try:
        cfg = ArrayConfig(positions=np.array(positions),
                          directivity=np.array(directivity))
        validate_spacing(cfg, config.min_spacing, config.aperture)
    except ValidationError as exc:
        raise ValidationError(f"{path}: {exc}") from exc
    return cfg


def geometry_to_json(cfg: ArrayConfig) -> list:
    return [{"position_m": float(x), "directivity": float(a)}
            for x, a in zip(cfg.positions, cfg.directivity)]


# ---------------------------------------------------------------------------
# deterministic writers


def _write_text(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _write_json(path: Path, payload: dict) -> None:
    _write_text(path, json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _log_line(output_dir: Path, message: str) -> None:
    output_dir.mkdir(parents=True, exist_ok=True)
    stamp = _dt.datetime.now().isoformat(timespec="seconds")
    with open(output_dir / "run.log", "a", encoding="utf-8") as fh:
        fh.write(f"{stamp} {message}\n")


def sweep_csv_text(result, fingerprint: str) -> str:
    """Render a sweep as CSV: axis_value, df_db, wng_db, approx_error, flag.

    Nine significant digits, LF endings, and a fingerprint comment line.
    The flag column is 1 where the WNG value was floored at -100 dB.
    """
    lines = [f"# fingerprint={fingerprint}",
             "axis_value,df_db,wng_db,approx_error,flag"]
    for i in range(result.axis_values.size):
        wng_db = result.wng_db[i]
        flag = 0
        if wng_db < WNG_DB_FLOOR:
            wng_db = WNG_DB_FLOOR
            flag = 1
        lines.append("%.9g,%.9g,%.9g,%.9g,%d" % (
            result.axis_values[i], result.df_db[i], wng_db,
            result.approx_error[i], flag))
    return "\n".join(lines) + "\n"


def history_csv_text(history, fingerprint: str) -> str:
    lines = [f"# fingerprint={fingerprint}",
             "generation,best,mean,median"]
    for gen, best, mean, median in history:
        lines.append(f"{gen},{best!r},{mean!r},{median!r}")
    return "\n".join(lines) + "\n"


def state_to_checkpoint(state: GaRunState, problem_fingerprint: str) -> dict:
    return {
        "schema_version": CHECKPOINT_SCHEMA_VERSION,
        "problem_fingerprint": problem_fingerprint,
        "generation": state.generation,
        "rng_state": {"scheme": "seed-generation-substream",
                      "seed": state.seed},
        "bounds": {"m": state.m, "d_c": state.min_spacing,
                   "L": state.aperture},
        "population": [
            {"positions": [float(v) for v in ind.genome.positions],
             "directivity": [float(v) for v in ind.genome.directivity],
             "fitness": ind.fitness}
            for ind in state.population
        ],
        "best": None if state.best is None else {
            "positions": [float(v) for v in state.best.genome.positions],
            "directivity": [float(v) for v in state.best.genome.directivity],
            "fitness": state.best.fitness,
        },
        "history": [list(row) for row in state.history],
    }


def state_from_checkpoint(payload: dict, problem_fingerprint: str) -> GaRunState:
    if not isinstance(payload, dict):
        raise CheckpointError("checkpoint must be a JSON object")
    version = payload.get("schema_version")
    if version != CHECKPOINT_SCHEMA_VERSION:
        raise CheckpointError(
            f"checkpoint schema_version {version!r} incompatible with "
            f"{CHECKPOINT_SCHEMA_VERSION}"
        )
    if payload.get("problem_fingerprint") != problem_fingerprint:
        raise CheckpointError(
            "checkpoint was produced by a different problem "
            f"(fingerprint {payload.get('problem_fingerprint')!r})"
        )
    def individual(entry) -> Individual:
        return Individual(
            genome=ArrayConfig(positions=np.array(entry["positions"]),
                               directivity=np.array(entry["directivity"])),
            fitness=entry["fitness"],
        )
    try:
        bounds = payload["bounds"]
        state = GaRunState(
            generation=int(payload["generation"]),
            population=[individual(e) for e in payload["population"]],
            best=None if payload["best"] is None else individual(payload["best"]),
            seed=int(payload["rng_state"]["seed"]),
            m=int(bounds["m"]),
            min_spacing=float(bounds["d_c"]),
            aperture=float(bounds["L"]),
            history=[tuple(row) for row in payload["history"]],
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise CheckpointError(f"malformed checkpoint: {exc}") from exc
    return state


# ---------------------------------------------------------------------------
# subcommands


def _metrics_at_point(cfg, config: RunConfig, theta_s: float, omega: float,
                      h: np.ndarray) -> dict:
    ctx = SteeringContext(theta_s=theta_s, omega=omega)
    point = DesignGrid.single(omega / (2.0 * np.pi), theta_s,
                              config.grid.eval_angles.size)
    return {
        "df_db": 10.0 * math.log10(df(h, cfg, ctx, config.consts)),
        "wng_db": 10.0 * math.log10(wng(h, cfg, ctx, config.consts)),
        "approx_error": direction_error(h, cfg, config.idp, theta_s, omega,
                                        point, config.consts),
    }


def cmd_design(args) -> int:
    config = load_config(args.config)
    cfg = load_geometry(args.geometry, config)
    if not 0.0 <= args.theta_s < 360.0:
        raise ValidationError("--theta-s must lie in [0, 360) degrees")
    if not args.freq > 0.0:
        raise ValidationError("--freq must be > 0")
    theta_s = math.radians(args.theta_s)
    omega = 2.0 * math.pi * args.freq
    system = assemble_system(cfg, config.idp, theta_s, omega, config.trunc,
                             config.consts)
    h = solve_filter(system, config.regularization)
    metrics = _metrics_at_point(cfg, config, theta_s, omega, h)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "fingerprint": config.fingerprint,
        "frequency_hz": args.freq,
        "theta_s_deg": args.theta_s,
        "speed_of_sound": config.consts.speed_of_sound,
        "trunc": config.trunc,
        "regularization": config.regularization,
        "filter": [[float(v.real), float(v.imag)] for v in h],
        "metrics": metrics,
    }
    out = Path(args.output) if args.output else config.output_dir / "filter.json"
    _write_json(out, payload)
    _log_line(config.output_dir, f"design geometry={args.geometry} -> {out}")
    print("df_db=%.9g wng_db=%.9g approx_error=%.9g"
          % (metrics["df_db"], metrics["wng_db"], metrics["approx_error"]))
    return 0


def cmd_sweep(args) -> int:
    config = load_config(args.config)
    cfg = load_geometry(args.geometry, config)
    label = Path(args.geometry).stem
    if args.axis == "freq":
        if not 0.0 <= args.theta_s < 360.0:
            raise ValidationError("--theta-s must lie in [0, 360) degrees")
        result = sweep_frequency(cfg, config.idp, math.radians(args.theta_s),
                                 config.grid, config.trunc,
                                 config.regularization, config.consts,
                                 label=label)
        default_name = "sweep_frequency.csv"
    elif args.axis == "steering":
        result = sweep_steering(cfg, config.idp, config.grid, config.trunc,
                                config.regularization, config.consts,
                                label=label)
        default_name = "sweep_steering.csv"
    else:  # argparse choices make this unreachable; kept for direct calls
        raise ValidationError(f"unknown sweep axis {args.axis!r}")
    out = Path(args.output) if args.output else config.output_dir / default_name
    _write_text(out, sweep_csv_text(result, config.fingerprint))
    _log_line(config.output_dir, f"sweep axis={args.axis} -> {out}")
    print(f"wrote {out}")
    return 0


def cmd_optimize(args) -> int:
    config = load_config(args.config)
    ga_params = config.ga
    effective = config.resolved
    if args.seed is not None:
        ga_params = GaParams(
            population_size=ga_params.population_size,
            generations=ga_params.generations,
            crossover_prob=ga_params.crossover_prob,
            mutation_prob=ga_params.mutation_prob,
            tournament_size=ga_params.tournament_size,
            elite_count=ga_params.elite_count,
            seed=args.seed,
        )
        effective = json.loads(json.dumps(config.resolved))
        effective["ga"]["seed"] = args.seed
    fingerprint, problem_fingerprint = _fingerprints(effective)
    problem = DesignProblem(m=config.m, min_spacing=config.min_spacing,
                            aperture=config.aperture, idp=config.idp,
                            grid=config.grid, trunc=config.trunc,
                            regularization=config.regularization,
                            consts=config.consts)
    state = None
    if args.resume:
        try:
            payload = json.loads(Path(args.resume).read_text(encoding="utf-8"))
        except OSError as exc:
            raise CheckpointError(f"cannot read checkpoint: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise CheckpointError(f"invalid checkpoint JSON: {exc}") from exc
        state = state_from_checkpoint(payload, problem_fingerprint)
    inject = tuple(load_geometry(path, config) for path in args.inject or ())

    checkpoint_path = config.output_dir / "checkpoint.json"

    def on_generation(run_state: GaRunState) -> None:
        interval = config.checkpoint_interval
        if interval and run_state.generation % interval == 0:
            _write_json(checkpoint_path,
                        state_to_checkpoint(run_state, problem_fingerprint))

    result = optimize(ga_params, problem, inject=inject, state=state,
                      callback=on_generation, threads=args.threads)
    best_payload = {
        "schema_version": SCHEMA_VERSION,
        "fingerprint": fingerprint,
        "seed": ga_params.seed,
        "fitness": result.best_fitness,
        "geometry": geometry_to_json(result.best_config),
    }
    _write_json(config.output_dir / "best_geometry.json", best_payload)
    _write_text(config.output_dir / "history.csv",
                history_csv_text(result.history, fingerprint))
    _log_line(config.output_dir,
              f"optimize seed={ga_params.seed} fitness={result.best_fitness!r}")
    print("best_fitness=%.9g" % result.best_fitness)
    return 0


def cmd_compare(args) -> int:
    config = load_config(args.config)
    if len(args.geometry) < 2:
        raise ValidationError("compare needs at least two --geometry files")
    labels = []
    for path in args.geometry:
        stem = Path(path).stem
        label = stem
        k = 2
        while label in labels:
            label = f"{stem}-{k}"
            k += 1
        labels.append(label)
    rows = []
    for path, label in zip(args.geometry, labels):
        cfg = load_geometry(path, config)
        summary = band_summary(cfg, config.idp, config.grid, config.trunc,
                               config.regularization, config.consts)
        rows.append((label, summary))
    lines = [f"# fingerprint={config.fingerprint}",
             "label,overall_error,band_mean_df_db,band_mean_wng_db"]
    for label, summary in rows:
        lines.append("%s,%.9g,%.9g,%.9g" % (
            label, summary["overall_error"], summary["mean_df_db"],
            summary["mean_wng_db"]))
    out = Path(args.output) if args.output else config.output_dir / "compare.csv"
    _write_text(out, "\n".join(lines) + "\n")
    _log_line(config.output_dir, f"compare {len(rows)} geometries -> {out}")
    best_error = min(summary["overall_error"] for _, summary in rows)
    winners = [label for label, summary in rows
               if summary["overall_error"] == best_error]
    if len(winners) == 1:
        print(f"verdict: {winners[0]} (overall_error=%.9g)" % best_error)
    else:
        print("verdict: tie between " + ", ".join(winners)
              + " (overall_error=%.9g)" % best_error)
    return 0


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superarray",
        description="Steerable differential beamformer design for linear "
                    "superarrays",
    )
    parser.add_argument("--threads", type=int, default=1,
                        help="worker cap for parallel fitness evaluation")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("design", help="solve one design point")
    p.add_argument("config", help="run configuration JSON")
    p.add_argument("--geometry", required=True, help="geometry JSON file")
    p.add_argument("--theta-s", type=float, required=True,
                   help="steering direction in degrees")
    p.add_argument("--freq", type=float, required=True, help="frequency in Hz")
    p.add_argument("--output", help="filter JSON path (default: output_dir)")
    p.set_defaults(func=cmd_design)

    p = sub.add_parser("sweep", help="metric sweep along an axis")
    p.add_argument("config")
    p.add_argument("--geometry", required=True)
    p.add_argument("--axis", required=True, choices=("freq", "steering"))
    p.add_argument("--theta-s", type=float, default=60.0,
                   help="steering direction in degrees (freq axis only)")
    p.add_argument("--output")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("optimize", help="jointly optimize geometry and "
                                        "directivity")
    p.add_argument("config")
    p.add_argument("--seed", type=int, help="override the configured GA seed")
    p.add_argument("--resume", help="checkpoint JSON to continue from")
    p.add_argument("--inject", action="append",
                   help="geometry JSON inserted into generation 0 "
                        "(repeatable)")
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("compare", help="rank geometries by overall error")
    p.add_argument("config")
    p.add_argument("--geometry", action="append", required=True,
                   help="geometry JSON file (give two or more)")
    p.add_argument("--output")
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CheckpointError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_CHECKPOINT
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_VALIDATION
    except SolverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_SOLVER
    except SuperarrayError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_VALIDATION


if __name__ == "__main__":
    raise SystemExit(main())
