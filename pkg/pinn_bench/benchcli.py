# coding=utf-8
"""
Command-line front end: lists problems, runs finite-difference references, trains PINNs from
JSON configs, sweeps layer/neuron grids and compares saved FieldGrid files.

Exit codes: 0 success, 2 usage or configuration error, 3 refusal (existing output, unstable
step sizes), 4 numeric divergence.
"""
import argparse
import json
import os
import shutil
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

import numpy as np
from loguru import logger
from pydantic import BaseModel, ValidationError

import pinn_bench.fdm_solvers as fdm
import pinn_bench.field_grid_io as grid_io
import pinn_bench.network_mlp as mlp
import pinn_bench.pinn_bench_exception as pinn_exception
import pinn_bench.pinn_bench_metrics as metrics
import pinn_bench.pinn_bench_visualizer as visualizer
from pinn_bench.model.classes.field_grid import FieldGrid
from pinn_bench.model.classes.train_config import ExperimentConfig, TrainConfig
from pinn_bench.model.classes.train_report import TrainReport
from pinn_bench.pinn_bench_consts import Consts
from pinn_bench.problem_registry import create_problem, list_problems
from pinn_bench.trainer import REFERENCE_SNAPSHOTS, train

PRESET_PREFIX = "preset:"
PRESET_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "presets")

# Full histories above this many stored values are thinned to evenly spaced slices.
MAX_STORED_VALUES = 50_000_000
THINNED_SLICES = 101


def configure_logging(verbose: bool) -> None:
    logger.remove()
    logger.add(sys.stderr, level="DEBUG" if verbose else "INFO")


def output_root(out: Optional[str]) -> str:
    if out:
        return out
    return os.environ.get(Consts.output_env_var, Consts.default_output_root)


def resolve_config_path(source: str, kind: str) -> str:
    """
    ``preset:name`` resolves to the packaged preset of that kind (train or sweep); anything
    else is a file path.
    """
    if source.startswith(PRESET_PREFIX):
        name = source[len(PRESET_PREFIX):]
        path = os.path.join(PRESET_DIR, kind, f"{name}.json")
        if not os.path.exists(path):
            available = sorted(entry[:-5] for entry in os.listdir(os.path.join(PRESET_DIR, kind)))
            raise pinn_exception.ConfigurationError(f"No {kind} preset {name}, available: {', '.join(available)}")
        return path
    return source


def load_config(source: str, model_class: type[BaseModel], kind: str) -> BaseModel:
    """
    Reads a JSON config and validates it against ``model_class``. Syntax errors are
    reported with their line and column.
    """
    path = resolve_config_path(source, kind)
    try:
        with open(path, "r") as file_object:
            text = file_object.read()
    except OSError as error:
        raise pinn_exception.ConfigurationError(f"Cannot read config {path}: {error.strerror}")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as error:
        raise pinn_exception.ConfigurationError(
            f"{path}: line {error.lineno} column {error.colno}: {error.msg}")
    return model_class.model_validate(data)


def _stem(problem: str, variant: Optional[str]) -> str:
    return problem if variant is None else f"{problem}-{variant}"


def _history_options(solution_grid, problem_id: str) -> dict:
    if problem_id in REFERENCE_SNAPSHOTS:
        return {"keep_history": False, "snapshots": REFERENCE_SNAPSHOTS[problem_id]}
    stored = int(np.prod(solution_grid.spatial_shape)) * solution_grid.time.count
    if stored > MAX_STORED_VALUES:
        times = solution_grid.time.coords()
        return {"keep_history": False, "snapshots": list(np.linspace(times[0], times[-1], THINNED_SLICES))}
    return {"keep_history": True, "snapshots": None}


def cmd_list(args: argparse.Namespace) -> int:
    for problem_id, description in list_problems():
        print(f"{problem_id}\t{description}")
    return Consts.exit_ok


def cmd_solve_fd(args: argparse.Namespace) -> int:
    problem = create_problem(args.problem, args.variant, seed=args.seed or 0)
    directory = output_root(args.out)
    stem = f"{_stem(problem.id, args.variant)}_fd"
    csv_path = os.path.join(directory, stem + ".csv")
    binary_path = os.path.join(directory, stem + ".pbfg")
    grid_io.check_overwrite(csv_path, args.force)
    grid_io.check_overwrite(binary_path, args.force)

    grid = fdm.preset_grid(problem.id, args.variant)
    if args.dry_run:
        print(grid.model_dump_json(indent=2))
        return Consts.exit_ok
    options = _history_options(grid, problem.id)
    solution = fdm.solve_fd(problem.id, problem.params, grid=grid, variant=args.variant, seed=args.seed or 0,
                            **options)
    if args.scale > 1:
        bounds = [(axis.origin, axis.last) for axis in grid.spatial]
        solution = solution.restrict(bounds, stride=args.scale, time_stride=args.scale if options["keep_history"] else 1)
    grid_io.export_field_grid_csv(solution, csv_path)
    grid_io.export_field_grid_binary(solution, binary_path)
    if not args.no_plot:
        visualizer.plot_heatmap(solution, solution.field_names[0], os.path.join(directory, stem))
    if solution.diverged:
        logger.error("{} diverged at step {}", problem.id, solution.diverged_step)
        return Consts.exit_diverged
    return Consts.exit_ok


def _comparison_times(config: TrainConfig, evaluation: FieldGrid) -> list[float]:
    if config.eval_times:
        return list(config.eval_times)
    times = evaluation.times
    return [float(times[0]), float(times[len(times) // 2]), float(times[-1])]


def write_train_outputs(config: TrainConfig, report: TrainReport, directory: str, stem: str,
                        plots: bool = True) -> None:
    base = os.path.join(directory, stem)
    grid_io.export_report(report, base + Consts.report_suffix)
    grid_io.export_loss_history_csv(report, base + Consts.loss_history_suffix)
    mlp.save_params(report.params, base + Consts.params_suffix)
    if report.evaluation is not None:
        grid_io.export_field_grid_csv(report.evaluation, base + Consts.evaluation_suffix)
    if not plots:
        return
    if report.history:
        visualizer.plot_loss_history(report, base + "_loss")
    if report.evaluation is not None and report.references:
        label = Consts.reference_oracle if Consts.reference_oracle in report.references else Consts.reference_fd
        times = _comparison_times(config, report.evaluation)
        for name in report.evaluation.field_names:
            visualizer.plot_time_slices(report.evaluation, report.references[label], name, times,
                                        f"{base}_{name}_compare", reference_label=label)


def cmd_train(args: argparse.Namespace) -> int:
    config = load_config(args.config, TrainConfig, "train")
    update = {}
    if args.seed is not None:
        update.update({"seed": args.seed, "seeds": None})
    if args.scale > 1:
        update["eval_scale"] = args.scale
    config = config.model_copy(update=update)
    if args.dry_run:
        print(config.model_dump_json(indent=2))
        return Consts.exit_ok

    directory = output_root(args.out)
    seeds = config.seed_list()
    stems = {seed: f"{_stem(config.problem, config.variant)}_seed{seed}" for seed in seeds}
    for stem in stems.values():
        grid_io.check_overwrite(os.path.join(directory, stem + Consts.report_suffix), args.force)
    grid_io.ensure_directory(directory)

    exit_code = Consts.exit_ok
    for seed in seeds:
        report = train(config.model_copy(update={"seed": seed, "seeds": None}))
        write_train_outputs(config, report, directory, stems[seed], plots=not args.no_plot)
        if report.diverged:
            logger.error("Seed {} diverged at iteration {}", seed, report.diverged_iteration)
            exit_code = Consts.exit_diverged
    return exit_code


def _cell_name(layers: int, neurons: int, seed: int) -> str:
    return f"L{layers}_N{neurons}_S{seed}.json"


def run_cell(experiment_json: str, layers: int, neurons: int, seed: int) -> dict:
    """
    Trains one sweep cell. Failures are recorded as diverged rows so the sweep continues.
    """
    experiment = ExperimentConfig.model_validate_json(experiment_json)
    problem = create_problem(experiment.problem, experiment.variant)
    config = experiment.train_config(layers, neurons, seed, problem.domain.dim, problem.n_fields)
    row = {Consts.csv_layers: layers, Consts.csv_neurons: neurons, Consts.csv_seed: seed,
           Consts.csv_rmse_oracle: None, Consts.csv_rmse_fd: None, Consts.csv_wall_seconds: 0.0,
           Consts.csv_diverged: True}
    try:
        report = train(config)
    except pinn_exception.PinnBenchError as error:
        logger.warning("Cell {}x{} seed {} failed: {}", layers, neurons, seed, error)
        return row
    row.update({Consts.csv_rmse_oracle: report.rmse.get(Consts.reference_oracle),
                Consts.csv_rmse_fd: report.rmse.get(Consts.reference_fd),
                Consts.csv_wall_seconds: report.wall_seconds, Consts.csv_diverged: report.diverged})
    return row


def _store_cell(state_dir: str, row: dict) -> None:
    path = os.path.join(state_dir, _cell_name(row[Consts.csv_layers], row[Consts.csv_neurons], row[Consts.csv_seed]))
    with open(path, "w") as file_object:
        json.dump(row, file_object, sort_keys=True)


def cmd_sweep(args: argparse.Namespace) -> int:
    experiment = load_config(args.config, ExperimentConfig, "sweep")
    if args.seed is not None:
        experiment = experiment.model_copy(update={"seeds": [args.seed]})
    if args.scale > 1:
        experiment = experiment.model_copy(update={"eval_scale": args.scale})
    create_problem(experiment.problem, experiment.variant)
    cells = experiment.cells()
    if args.dry_run:
        print(experiment.model_dump_json(indent=2))
        print(f"{len(cells)} cells")
        return Consts.exit_ok

    directory = args.out or experiment.output_dir or os.path.join(output_root(None), f"sweep-{experiment.problem}")
    state_dir = os.path.join(directory, Consts.cell_state_dir)
    if args.force and os.path.isdir(state_dir):
        shutil.rmtree(state_dir)
    grid_io.ensure_directory(state_dir)
    pending = [cell for cell in cells if not os.path.exists(os.path.join(state_dir, _cell_name(*cell)))]
    logger.info("Sweep of {}: {} cells, {} already complete", experiment.problem, len(cells), len(cells) - len(pending))

    experiment_json = experiment.model_dump_json()
    if args.jobs > 1 and len(pending) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            futures = [pool.submit(run_cell, experiment_json, *cell) for cell in pending]
            for future in futures:
                _store_cell(state_dir, future.result())
    else:
        for cell in pending:
            _store_cell(state_dir, run_cell(experiment_json, *cell))

    rows = []
    for cell in cells:
        with open(os.path.join(state_dir, _cell_name(*cell)), "r") as file_object:
            rows.append(json.load(file_object))
    for path in grid_io.export_result_table(rows, directory):
        logger.info("Wrote {}", path)
    diverged = sum(1 for row in rows if row[Consts.csv_diverged])
    if diverged:
        logger.warning("{} of {} cells diverged", diverged, len(rows))
    return Consts.exit_ok


def cmd_compare(args: argparse.Namespace) -> int:
    first = grid_io.import_field_grid(args.first)
    second = grid_io.import_field_grid(args.second)
    print(f"rmse = {metrics.rmse(first, second)!r}")
    for name, value in metrics.rmse_per_field(first, second).items():
        print(f"rmse_{name} = {value!r}")
    return Consts.exit_ok


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help=f"output directory (default ${Consts.output_env_var} or "
                                      f"{Consts.default_output_root})")
    common.add_argument("--force", action="store_true", help="overwrite existing outputs")
    common.add_argument("--verbose", "-v", action="store_true", help="debug logging")

    parser = argparse.ArgumentParser(prog="pinn-bench", description=__doc__.strip().splitlines()[0])
    subparsers = parser.add_subparsers(dest="command", required=True)

    list_parser = subparsers.add_parser("list", parents=[common], help="list the benchmark problems")
    list_parser.set_defaults(handler=cmd_list)

    solve_parser = subparsers.add_parser("solve-fd", parents=[common], help="run a finite-difference reference")
    solve_parser.add_argument("problem")
    solve_parser.add_argument("--variant")
    solve_parser.add_argument("--seed", type=int, help="seed of random initial fields")
    solve_parser.add_argument("--scale", type=int, default=1, help="keep every n-th node of the output")
    solve_parser.add_argument("--dry-run", action="store_true", help="print the grid and exit")
    solve_parser.add_argument("--no-plot", action="store_true")
    solve_parser.set_defaults(handler=cmd_solve_fd)

    train_parser = subparsers.add_parser("train", parents=[common], help="train a PINN from a config")
    train_parser.add_argument("--config", required=True, help="JSON file or preset:<name>")
    train_parser.add_argument("--seed", type=int, help="train this seed only")
    train_parser.add_argument("--scale", type=int, default=1, help="evaluation grid divisor")
    train_parser.add_argument("--dry-run", action="store_true", help="print the resolved config and exit")
    train_parser.add_argument("--no-plot", action="store_true")
    train_parser.set_defaults(handler=cmd_train)

    sweep_parser = subparsers.add_parser("sweep", parents=[common], help="layers x neurons sweep")
    sweep_parser.add_argument("--config", required=True, help="JSON file or preset:<name>")
    sweep_parser.add_argument("--seed", type=int, help="sweep this seed only")
    sweep_parser.add_argument("--jobs", type=int, default=1, help="cells trained concurrently")
    sweep_parser.add_argument("--scale", type=int, default=1, help="evaluation grid divisor")
    sweep_parser.add_argument("--dry-run", action="store_true", help="print the resolved config and exit")
    sweep_parser.set_defaults(handler=cmd_sweep)

    compare_parser = subparsers.add_parser("compare", parents=[common], help="RMSE between two FieldGrid files")
    compare_parser.add_argument("first")
    compare_parser.add_argument("second")
    compare_parser.set_defaults(handler=cmd_compare)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    if getattr(args, "scale", 1) < 1 or getattr(args, "jobs", 1) < 1:
        logger.error("--scale and --jobs must be positive")
        return Consts.exit_usage
    try:
        return args.handler(args)
    except ValidationError as error:
        logger.error("Invalid configuration:\n{}", error)
        return Consts.exit_usage
    except (pinn_exception.ConfigurationError, pinn_exception.DomainError, pinn_exception.ShapeError) as error:
        logger.error(str(error.value))
        return Consts.exit_usage
    except (pinn_exception.OutputExistsError, pinn_exception.StabilityError) as error:
        logger.error(str(error.value))
        return Consts.exit_refused
    except (pinn_exception.NumericError, pinn_exception.SeriesTruncationError,
            pinn_exception.TransformSingularityError) as error:
        logger.error(str(error.value))
        return Consts.exit_diverged


if __name__ == "__main__":
    sys.exit(main())
