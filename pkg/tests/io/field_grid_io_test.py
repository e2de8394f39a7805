# coding=utf-8
"""
Unit tests for FieldGrid, collocation, loss-history and result-table files.
"""
import os
import shutil
import unittest

import numpy as np
import pandas as pd

import pinn_bench.field_grid_io as grid_io
import pinn_bench.pinn_bench_exception as pinn_exception
from pinn_bench.fdm_solvers import preset_grid, solve_toy_fd
from pinn_bench.model.classes.field_grid import FieldGrid
from pinn_bench.model.classes.grid import Axis, Grid
from pinn_bench.model.classes.train_report import LossRecord, TrainReport
from pinn_bench.problem_registry import create_problem
from pinn_bench.sampling import sample


def two_dimensional_grid() -> FieldGrid:
    grid = Grid(spatial=[Axis.spanning("x", -1.0, 1.0, 4), Axis.spanning("y", 0.0, 1.0, 3)],
                time=Axis.spanning("t", 0.0, 0.5, 6))
    rng = np.random.Generator(np.random.PCG64(11))
    return FieldGrid(grid=grid, field_names=["u", "v"], times=grid.time.coords()[[0, 2, 5]],
                     values=rng.normal(size=(2, 3, 4, 3)))


class FieldGridCsvTests(unittest.TestCase):
    output_directory = "./output/io/"

    def setUp(self) -> None:
        shutil.rmtree(self.output_directory, ignore_errors=True)

    def test_toy_export_row_count_and_columns(self) -> None:
        result = solve_toy_fd(preset_grid("toy"), keep_history=True)
        file_path = self.output_directory + "toy_fd.csv"
        grid_io.export_field_grid_csv(result, file_path)
        frame = pd.read_csv(file_path)
        self.assertEqual(len(frame), 2121)
        self.assertEqual(list(frame.columns), ["t", "x", "u"])
        self.assertEqual(frame["u"].iloc[0], result.values[0, 0, 0])

    def test_csv_values_survive_exactly(self) -> None:
        field_grid = two_dimensional_grid()
        file_path = self.output_directory + "grid.csv"
        grid_io.export_field_grid_csv(field_grid, file_path)
        loaded = grid_io.import_field_grid_csv(file_path, time_axis=field_grid.grid.time)
        self.assertEqual(loaded.field_names, ["u", "v"])
        np.testing.assert_array_equal(loaded.values, field_grid.values)
        np.testing.assert_array_equal(loaded.times, field_grid.times)
        self.assertTrue(loaded.same_layout(field_grid))

    def test_last_axis_varies_fastest(self) -> None:
        field_grid = two_dimensional_grid()
        frame = grid_io.field_grid_frame(field_grid)
        self.assertEqual(list(frame.columns), ["t", "x", "y", "u", "v"])
        self.assertEqual(frame["y"].iloc[1], field_grid.grid.spatial[1].coords()[1])
        self.assertEqual(frame["x"].iloc[1], frame["x"].iloc[0])

    def test_missing_time_column(self) -> None:
        file_path = self.output_directory + "broken.csv"
        os.makedirs(self.output_directory, exist_ok=True)
        pd.DataFrame({"x": [0.0, 1.0], "u": [1.0, 2.0]}).to_csv(file_path, index=False)
        with self.assertRaises(pinn_exception.ConfigurationError):
            grid_io.import_field_grid_csv(file_path)


class FieldGridBinaryTests(unittest.TestCase):
    output_directory = "./output/io-binary/"

    def setUp(self) -> None:
        shutil.rmtree(self.output_directory, ignore_errors=True)

    def test_binary_keeps_layout_and_flags(self) -> None:
        field_grid = two_dimensional_grid()
        file_path = self.output_directory + "grid.pbfg"
        grid_io.export_field_grid_binary(field_grid, file_path)
        loaded = grid_io.import_field_grid(file_path)
        self.assertEqual(loaded.grid, field_grid.grid)
        np.testing.assert_array_equal(loaded.values, field_grid.values)

    def test_wrong_magic(self) -> None:
        file_path = self.output_directory + "bad.pbfg"
        os.makedirs(self.output_directory, exist_ok=True)
        with open(file_path, "wb") as file_object:
            file_object.write(b"XXXX" + bytes(40))
        with self.assertRaises(pinn_exception.ConfigurationError):
            grid_io.import_field_grid_binary(file_path)

    def test_truncated_values(self) -> None:
        file_path = self.output_directory + "short.pbfg"
        grid_io.export_field_grid_binary(two_dimensional_grid(), file_path)
        with open(file_path, "rb") as file_object:
            data = file_object.read()
        with open(file_path, "wb") as file_object:
            file_object.write(data[:-8])
        with self.assertRaises(pinn_exception.ShapeError):
            grid_io.import_field_grid_binary(file_path)


class OtherFileTests(unittest.TestCase):
    output_directory = "./output/io-other/"

    def setUp(self) -> None:
        shutil.rmtree(self.output_directory, ignore_errors=True)

    def test_overwrite_refusal(self) -> None:
        file_path = self.output_directory + "exists.txt"
        os.makedirs(self.output_directory, exist_ok=True)
        grid_io.check_overwrite(file_path, force=False)
        with open(file_path, "w") as file_object:
            file_object.write("x")
        with self.assertRaises(pinn_exception.OutputExistsError):
            grid_io.check_overwrite(file_path, force=False)
        grid_io.check_overwrite(file_path, force=True)

    def test_collocation_export(self) -> None:
        colloc = sample(create_problem("burgers"), 8, 3, seed=0, augment=False)
        file_path = self.output_directory + "colloc.csv"
        grid_io.export_collocation_csv(colloc, file_path)
        frame = pd.read_csv(file_path)
        self.assertEqual(list(frame.columns), ["role", "x", "t", "u"])
        self.assertEqual(frame["role"].value_counts().to_dict(), {"initial": 4, "boundary": 4, "interior": 3})
        self.assertTrue(frame.loc[frame["role"] == "interior", "u"].isna().all())

    def test_loss_history_and_report(self) -> None:
        report = TrainReport(problem="toy", seed=2, iterations=10, params=np.zeros(3),
                             history=[LossRecord(iteration=0, initial=1.0, boundary=0.5, residual=0.25, total=1.75),
                                      LossRecord(iteration=10, initial=0.1, boundary=0.0, residual=0.1, total=0.2)])
        grid_io.export_loss_history_csv(report, self.output_directory + "loss.csv")
        frame = pd.read_csv(self.output_directory + "loss.csv")
        self.assertEqual(list(frame["iteration"]), [0, 10])
        self.assertEqual(frame["loss_total"].iloc[1], 0.2)
        grid_io.export_report(report, self.output_directory + "report.txt")
        with open(self.output_directory + "report.txt") as file_object:
            text = file_object.read()
        self.assertIn("final_loss = 0.2\n", text)
        self.assertIn("param_count = 3\n", text)

    def test_result_table_keeps_best_seed(self) -> None:
        rows = [
            {"layers": 2, "neurons": 8, "seed": 1, "rmse_vs_oracle": 0.3, "rmse_vs_fd": 0.4, "wall_seconds": 1.0,
             "diverged": False},
            {"layers": 2, "neurons": 8, "seed": 0, "rmse_vs_oracle": 0.1, "rmse_vs_fd": 0.5, "wall_seconds": 1.0,
             "diverged": False},
            {"layers": 4, "neurons": 8, "seed": 0, "rmse_vs_oracle": None, "rmse_vs_fd": None, "wall_seconds": 2.0,
             "diverged": True},
        ]
        written = grid_io.export_result_table(rows, self.output_directory)
        self.assertEqual([os.path.basename(path) for path in written],
                         ["results.csv", "table_rmse_vs_oracle.csv", "table_rmse_vs_fd.csv", "table_wall_seconds.csv"])
        raw = pd.read_csv(written[0])
        self.assertEqual(list(raw["seed"]), [0, 1, 0])
        table = pd.read_csv(written[1], index_col=0)
        self.assertEqual(table.loc[2, "8"], 0.1)

    def test_result_table_without_fd_column(self) -> None:
        rows = [{"layers": 1, "neurons": 4, "seed": 0, "rmse_vs_oracle": 0.2, "rmse_vs_fd": None,
                 "wall_seconds": 0.5, "diverged": False}]
        written = grid_io.export_result_table(rows, self.output_directory)
        self.assertEqual([os.path.basename(path) for path in written],
                         ["results.csv", "table_rmse_vs_oracle.csv", "table_wall_seconds.csv"])

    def test_runtime_table_averages_seeds(self) -> None:
        rows = [{"layers": layers, "neurons": 8, "seed": seed, "rmse_vs_oracle": 0.1, "rmse_vs_fd": None,
                 "wall_seconds": 10.0 * layers + seed, "diverged": False}
                for layers in (2, 4) for seed in (0, 1, 2)]
        written = grid_io.export_result_table(rows, self.output_directory)
        table = pd.read_csv(written[-1], index_col=0)
        self.assertEqual(list(table.index), [2, 4])
        self.assertAlmostEqual(table.loc[2, "8"], 21.0, places=12)
        self.assertAlmostEqual(table.loc[4, "8"], 41.0, places=12)


if __name__ == '__main__':
    unittest.main()
