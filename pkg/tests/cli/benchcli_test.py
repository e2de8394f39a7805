# coding=utf-8
"""
Tests of the command-line front end and its exit codes
"""
import contextlib
import io
import json
import os
import shutil
import unittest

import pandas as pd

from pinn_bench.benchcli import main


def run(*argv: str) -> tuple[int, str]:
    buffer = io.StringIO()
    with contextlib.redirect_stdout(buffer):
        code = main(list(argv))
    return code, buffer.getvalue()


class CliTests(unittest.TestCase):
    output_directory = "./output/cli/"

    def setUp(self) -> None:
        shutil.rmtree(self.output_directory, ignore_errors=True)
        os.makedirs(self.output_directory)

    def write_config(self, name: str, content: dict | str) -> str:
        path = os.path.join(self.output_directory, name)
        with open(path, "w") as file_object:
            if isinstance(content, str):
                file_object.write(content)
            else:
                json.dump(content, file_object)
        return path

    def test_list(self) -> None:
        code, text = run("list")
        self.assertEqual(code, 0)
        lines = text.strip().splitlines()
        self.assertEqual(len(lines), 8)
        self.assertTrue(any(line.startswith("fisher\t") for line in lines))

    def test_missing_command(self) -> None:
        with self.assertRaises(SystemExit) as context:
            main([])
        self.assertEqual(context.exception.code, 2)

    def test_unknown_problem(self) -> None:
        self.assertEqual(run("solve-fd", "wave", "--out", self.output_directory)[0], 2)

    def test_problem_without_scheme(self) -> None:
        self.assertEqual(run("solve-fd", "exp-ode", "--out", self.output_directory)[0], 2)

    def test_non_positive_scale(self) -> None:
        self.assertEqual(run("solve-fd", "toy", "--scale", "0", "--out", self.output_directory)[0], 2)

    def test_solve_fd_writes_and_refuses_overwrite(self) -> None:
        out = self.output_directory + "fd"
        self.assertEqual(run("solve-fd", "toy", "--out", out)[0], 0)
        frame = pd.read_csv(os.path.join(out, "toy_fd.csv"))
        self.assertEqual(len(frame), 2121)
        self.assertTrue(os.path.isfile(os.path.join(out, "toy_fd.pbfg")))
        self.assertTrue(os.path.isfile(os.path.join(out, "toy_fd.png")))
        self.assertEqual(run("solve-fd", "toy", "--out", out, "--no-plot")[0], 3)
        self.assertEqual(run("solve-fd", "toy", "--out", out, "--no-plot", "--force")[0], 0)

    def test_solve_fd_scale(self) -> None:
        out = self.output_directory + "scaled"
        self.assertEqual(run("solve-fd", "toy", "--scale", "2", "--no-plot", "--out", out)[0], 0)
        frame = pd.read_csv(os.path.join(out, "toy_fd.csv"))
        self.assertEqual(len(frame), 11 * 51)

    def test_solve_fd_dry_run(self) -> None:
        out = self.output_directory + "dry"
        code, text = run("solve-fd", "burgers", "--dry-run", "--out", out)
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(text)["time"]["count"], 4000)
        self.assertFalse(os.path.exists(os.path.join(out, "burgers_fd.csv")))

    def test_compare(self) -> None:
        out = self.output_directory + "compare"
        run("solve-fd", "toy", "--out", out, "--no-plot")
        csv_path, binary_path = os.path.join(out, "toy_fd.csv"), os.path.join(out, "toy_fd.pbfg")
        code, text = run("compare", csv_path, binary_path)
        self.assertEqual(code, 0)
        self.assertEqual(text.splitlines(), ["rmse = 0.0", "rmse_u = 0.0"])

    def test_train_dry_run_with_preset(self) -> None:
        code, text = run("train", "--config", "preset:kdv", "--seed", "5", "--dry-run")
        self.assertEqual(code, 0)
        config = json.loads(text)
        self.assertEqual(config["problem"], "kdv")
        self.assertEqual(config["seed"], 5)
        self.assertIsNone(config["seeds"])
        self.assertEqual(config["network"]["output_dim"], 2)

    def test_every_train_preset_validates(self) -> None:
        for name in ("toy", "toy-listing", "burgers", "heat2d", "kdv", "fisher", "fisher-stated", "turing1",
                     "turing2", "exp-ode"):
            self.assertEqual(run("train", "--config", f"preset:{name}", "--dry-run")[0], 0, name)

    def test_every_sweep_preset_validates(self) -> None:
        for name in ("toy", "burgers", "heat2d", "kdv", "fisher", "turing1", "turing2", "exp-ode"):
            self.assertEqual(run("sweep", "--config", f"preset:{name}", "--dry-run")[0], 0, name)

    def test_unknown_preset(self) -> None:
        self.assertEqual(run("train", "--config", "preset:wave", "--dry-run")[0], 2)

    def test_bad_json(self) -> None:
        path = self.write_config("bad.json", '{"problem": "toy",\n  "iterations": }')
        self.assertEqual(run("train", "--config", path, "--dry-run")[0], 2)

    def test_missing_config_file(self) -> None:
        self.assertEqual(run("train", "--config", self.output_directory + "absent.json")[0], 2)

    def test_unknown_key(self) -> None:
        path = self.write_config("typo.json", {"problem": "toy", "iteratons": 10})
        self.assertEqual(run("train", "--config", path, "--dry-run")[0], 2)

    def test_train_exp_ode_outputs(self) -> None:
        path = self.write_config("ode.json", {
            "problem": "exp-ode",
            "network": {"input_dim": 1, "hidden_layers": 1, "hidden_width": 4},
            "iterations": 2, "n_data": 1, "n_interior": 20, "validation_cadence": 1})
        out = self.output_directory + "train"
        self.assertEqual(run("train", "--config", path, "--out", out, "--no-plot")[0], 0)
        for suffix in (".txt", "_loss.csv", ".params"):
            self.assertTrue(os.path.isfile(os.path.join(out, "exp-ode_seed0" + suffix)), suffix)
        self.assertFalse(os.path.exists(os.path.join(out, "exp-ode_seed0_eval.csv")))
        self.assertEqual(len(pd.read_csv(os.path.join(out, "exp-ode_seed0_loss.csv"))), 3)
        self.assertEqual(run("train", "--config", path, "--out", out, "--no-plot")[0], 3)

    def test_train_toy_with_plots(self) -> None:
        path = self.write_config("toy.json", {
            "problem": "toy", "network": {"hidden_layers": 1, "hidden_width": 4},
            "iterations": 1, "n_data": 8, "n_interior": 10, "eval_times": [0.0, 1.0]})
        out = self.output_directory + "toy"
        self.assertEqual(run("train", "--config", path, "--out", out)[0], 0)
        self.assertTrue(os.path.isfile(os.path.join(out, "toy_seed0_eval.csv")))
        self.assertTrue(os.path.isfile(os.path.join(out, "toy_seed0_loss.png")))
        self.assertTrue(os.path.isfile(os.path.join(out, "toy_seed0_u_compare.png")))
        with open(os.path.join(out, "toy_seed0.txt")) as file_object:
            self.assertIn("rmse_vs_fd = ", file_object.read())

    def test_sweep_writes_table_and_resumes(self) -> None:
        path = self.write_config("sweep.json", {
            "problem": "exp-ode", "layers": [1], "neurons": [2, 3], "seeds": [0],
            "iterations": 1, "n_data": 1, "n_interior": 10})
        out = self.output_directory + "sweep"
        code, text = run("sweep", "--config", path, "--dry-run")
        self.assertEqual(code, 0)
        self.assertIn("2 cells", text)
        self.assertEqual(run("sweep", "--config", path, "--out", out)[0], 0)
        results = pd.read_csv(os.path.join(out, "results.csv"))
        self.assertEqual(list(results["neurons"]), [2, 3])
        self.assertEqual(sorted(os.listdir(os.path.join(out, "cells"))), ["L1_N2_S0.json", "L1_N3_S0.json"])
        self.assertTrue(os.path.isfile(os.path.join(out, "table_rmse_vs_oracle.csv")))
        self.assertEqual(run("sweep", "--config", path, "--out", out)[0], 0)
        self.assertEqual(run("sweep", "--config", path, "--out", out, "--force")[0], 0)

    def test_sweep_rejects_zero_jobs(self) -> None:
        path = self.write_config("sweep.json", {"problem": "exp-ode", "layers": [1], "neurons": [2]})
        self.assertEqual(run("sweep", "--config", path, "--jobs", "0")[0], 2)


if __name__ == '__main__':
    unittest.main()
