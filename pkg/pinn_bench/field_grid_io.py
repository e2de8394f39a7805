# coding=utf-8
"""
Import and export of FieldGrid, CollocationSet, loss-history and result-table files.

CSV files are written with pandas using 17 significant digits, so reading them back gives
the stored floats exactly. Binary FieldGrid files start with a header (magic ``PBFG``,
version, dimensions and axes) followed by little-endian float64 values.
"""
import errno
import os
import struct

import numpy as np
import pandas as pd
from loguru import logger

import pinn_bench.pinn_bench_exception as pinn_exception
from pinn_bench.model.classes.collocation_set import CollocationSet
from pinn_bench.model.classes.field_grid import FieldGrid
from pinn_bench.model.classes.grid import Axis, Grid
from pinn_bench.model.classes.train_report import TrainReport
from pinn_bench.pinn_bench_consts import Consts

FLOAT_FORMAT = "%.17g"

_HEADER = struct.Struct("<4sIIIQ")
_AXIS = struct.Struct("<8sddQ")


def ensure_directory(directory: str) -> None:
    if directory and not os.path.exists(directory):
        try:
            os.makedirs(directory)
        except OSError as exception:
            if exception.errno != errno.EEXIST:
                raise


def check_overwrite(file_path: str, force: bool) -> None:
    if os.path.exists(file_path) and not force:
        logger.warning("Refusing to overwrite {}", file_path)
        raise pinn_exception.OutputExistsError(f"{file_path} exists, pass --force to overwrite")


def field_grid_frame(field_grid: FieldGrid) -> pd.DataFrame:
    """
    One row per stored (time, node): columns are the time, the spatial coordinates and the
    fields. Rows are time-major, then the first spatial axis, the last spatial axis varying
    fastest.
    """
    meshes = field_grid.grid.spatial_mesh()
    n_nodes = int(np.prod(field_grid.grid.spatial_shape))
    n_times = len(field_grid.times)
    columns = {Consts.csv_time: np.repeat(field_grid.times, n_nodes)}
    for axis, mesh in zip(field_grid.grid.spatial, meshes):
        columns[axis.name] = np.tile(mesh.reshape(-1), n_times)
    for index, name in enumerate(field_grid.field_names):
        columns[name] = field_grid.values[index].reshape(-1)
    return pd.DataFrame(columns)


def export_field_grid_csv(field_grid: FieldGrid, file_path: str) -> None:
    ensure_directory(os.path.dirname(file_path))
    field_grid_frame(field_grid).to_csv(file_path, index=False, float_format=FLOAT_FORMAT)
    logger.info("Wrote {}", file_path)


def import_field_grid_csv(file_path: str, time_axis: Axis | None = None) -> FieldGrid:
    """
    Rebuilds a FieldGrid from its CSV export. Spatial axes are recovered from the distinct
    coordinates; the time axis defaults to the stored times when they are equally spaced.

    :param time_axis: marching axis of the original grid, if known.
    """
    frame = pd.read_csv(file_path, float_precision="round_trip")
    if Consts.csv_time not in frame.columns:
        raise pinn_exception.ConfigurationError(f"{file_path}: missing column {Consts.csv_time}")
    names = [column for column in frame.columns if column != Consts.csv_time]
    spatial_names = [name for name in names if name in ("x", "y")]
    field_names = [name for name in names if name not in spatial_names]
    times = np.unique(frame[Consts.csv_time].to_numpy())
    axes = []
    for name in spatial_names:
        coords = np.unique(frame[name].to_numpy())
        spacing = (coords[-1] - coords[0]) / (len(coords) - 1) if len(coords) > 1 else 1.0
        axes.append(Axis(name=name, origin=float(coords[0]), spacing=float(spacing), count=len(coords)))
    if time_axis is None:
        spacing = float(times[1] - times[0]) if len(times) > 1 else 1.0
        time_axis = Axis(name=Consts.csv_time, origin=float(times[0]), spacing=spacing, count=len(times))
    grid = Grid(spatial=axes, time=time_axis)
    shape = (len(times),) + grid.spatial_shape
    values = np.stack([frame[name].to_numpy().reshape(shape) for name in field_names])
    return FieldGrid(grid=grid, field_names=field_names, times=times, values=values)


def export_field_grid_binary(field_grid: FieldGrid, file_path: str) -> None:
    """
    Layout: header (magic, version, field count, spatial axis count, stored time count),
    one record per spatial axis and the time axis (name, origin, spacing, count), the stored
    times, newline-separated field names, then the values.
    """
    ensure_directory(os.path.dirname(file_path))
    names = "\n".join(field_grid.field_names).encode("utf-8")
    with open(file_path, "wb") as file_object:
        file_object.write(_HEADER.pack(Consts.field_grid_magic, Consts.field_grid_version, field_grid.n_fields,
                                       len(field_grid.grid.spatial), len(field_grid.times)))
        for axis in field_grid.grid.spatial + [field_grid.grid.time]:
            file_object.write(_AXIS.pack(axis.name.encode("utf-8")[:8], axis.origin, axis.spacing, axis.count))
        file_object.write(np.asarray(field_grid.times, dtype="<f8").tobytes())
        file_object.write(struct.pack("<I", len(names)) + names)
        file_object.write(np.asarray(field_grid.values, dtype="<f8").tobytes())
    logger.info("Wrote {}", file_path)


def import_field_grid_binary(file_path: str) -> FieldGrid:
    with open(file_path, "rb") as file_object:
        data = file_object.read()
    if len(data) < _HEADER.size:
        raise pinn_exception.ShapeError(f"{file_path}: truncated header")
    magic, version, n_fields, n_spatial, n_times = _HEADER.unpack_from(data, 0)
    if magic != Consts.field_grid_magic:
        raise pinn_exception.ConfigurationError(f"{file_path}: not a FieldGrid file")
    if version != Consts.field_grid_version:
        raise pinn_exception.ConfigurationError(f"{file_path}: unsupported version {version}")
    offset = _HEADER.size
    axes = []
    for _ in range(n_spatial + 1):
        name, origin, spacing, count = _AXIS.unpack_from(data, offset)
        offset += _AXIS.size
        axes.append(Axis(name=name.rstrip(b"\0").decode("utf-8"), origin=origin, spacing=spacing, count=count))
    times = np.frombuffer(data, dtype="<f8", count=n_times, offset=offset).astype(np.float64)
    offset += 8 * n_times
    (name_length,) = struct.unpack_from("<I", data, offset)
    offset += 4
    field_names = data[offset:offset + name_length].decode("utf-8").split("\n")
    offset += name_length
    grid = Grid(spatial=axes[:-1], time=axes[-1])
    shape = (n_fields, n_times) + grid.spatial_shape
    expected = int(np.prod(shape))
    if len(data) - offset != 8 * expected:
        raise pinn_exception.ShapeError(f"{file_path}: expected {expected} values, found {(len(data) - offset) // 8}")
    values = np.frombuffer(data, dtype="<f8", offset=offset).astype(np.float64).reshape(shape)
    return FieldGrid(grid=grid, field_names=field_names, times=times, values=values)


def import_field_grid(file_path: str) -> FieldGrid:
    if file_path.endswith(".csv"):
        return import_field_grid_csv(file_path)
    return import_field_grid_binary(file_path)


def export_collocation_csv(colloc: CollocationSet, file_path: str) -> None:
    """
    Columns: role, coordinates, then one target column per field (empty for interior rows).
    """
    ensure_directory(os.path.dirname(file_path))
    frames = []
    for role, points, targets in ((Consts.csv_role_initial, colloc.initial_points, colloc.initial_targets),
                                  (Consts.csv_role_boundary, colloc.boundary_points, colloc.boundary_targets),
                                  (Consts.csv_role_interior, colloc.interior_points, None)):
        frame = pd.DataFrame(points, columns=colloc.axis_names)
        frame.insert(0, Consts.csv_role, role)
        for index, name in enumerate(colloc.field_names):
            frame[name] = targets[:, index] if targets is not None else np.nan
        frames.append(frame)
    pd.concat(frames, ignore_index=True).to_csv(file_path, index=False, float_format=FLOAT_FORMAT)


def export_loss_history_csv(report: TrainReport, file_path: str) -> None:
    ensure_directory(os.path.dirname(file_path))
    frame = pd.DataFrame([(record.iteration, record.initial, record.boundary, record.residual, record.total)
                          for record in report.history],
                         columns=[Consts.csv_iteration, Consts.csv_loss_initial, Consts.csv_loss_boundary,
                                  Consts.csv_loss_residual, Consts.csv_loss_total])
    frame.to_csv(file_path, index=False, float_format=FLOAT_FORMAT)


def export_report(report: TrainReport, file_path: str) -> None:
    ensure_directory(os.path.dirname(file_path))
    with open(file_path, "w") as file_object:
        file_object.write(report.to_text())
    logger.info("Wrote {}", file_path)


def export_result_table(rows: list[dict], directory: str) -> list[str]:
    """
    Writes the raw per-run table, one layers x neurons pivot per reference taking the best
    (lowest) RMSE over seeds, and a layers x neurons pivot of the mean wall-clock seconds.

    :return: the written file paths.
    """
    ensure_directory(directory)
    columns = [Consts.csv_layers, Consts.csv_neurons, Consts.csv_seed, Consts.csv_rmse_oracle,
               Consts.csv_rmse_fd, Consts.csv_wall_seconds, Consts.csv_diverged]
    frame = pd.DataFrame(rows, columns=columns).sort_values(
        [Consts.csv_layers, Consts.csv_neurons, Consts.csv_seed], kind="stable")
    raw_path = os.path.join(directory, Consts.results_file)
    frame.to_csv(raw_path, index=False, float_format=FLOAT_FORMAT)
    written = [raw_path]
    for column in (Consts.csv_rmse_oracle, Consts.csv_rmse_fd):
        if frame[column].notna().any():
            table = frame.pivot_table(index=Consts.csv_layers, columns=Consts.csv_neurons, values=column,
                                      aggfunc="min")
            path = os.path.join(directory, f"table_{column}.csv")
            table.to_csv(path, float_format=FLOAT_FORMAT)
            written.append(path)
    runtime = frame.pivot_table(index=Consts.csv_layers, columns=Consts.csv_neurons, values=Consts.csv_wall_seconds,
                                aggfunc="mean")
    path = os.path.join(directory, f"table_{Consts.csv_wall_seconds}.csv")
    runtime.to_csv(path, float_format=FLOAT_FORMAT)
    written.append(path)
    return written
