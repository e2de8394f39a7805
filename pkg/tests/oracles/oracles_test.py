# coding=utf-8
"""
Unit tests of the closed-form and series reference solutions
"""
import unittest

import numpy as np

import pinn_bench.oracles as oracles
import pinn_bench.pinn_bench_exception as pinn_exception
from pinn_bench.model.classes.problem_params import BurgersParams, HeatParams, KdvParams, OdeParams, ToyParams


class OracleTests(unittest.TestCase):

    def test_toy_value_at_origin(self) -> None:
        self.assertEqual(oracles.toy_exact(0.0, 0.0), 6.0)
        self.assertAlmostEqual(float(oracles.toy_exact(1.0, 1.0)), 6.0 * np.exp(-5.0), places=14)

    def test_burgers_matches_initial_profile(self) -> None:
        x = np.linspace(0.0, 1.0, 41)
        np.testing.assert_allclose(oracles.burgers_exact(x, 1e-6), np.sin(np.pi * x), atol=1e-4)

    def test_burgers_boundary_values_vanish(self) -> None:
        t = np.linspace(0.0, 0.1, 11)
        np.testing.assert_allclose(oracles.burgers_exact(0.0, t), 0.0, atol=1e-12)
        np.testing.assert_allclose(oracles.burgers_exact(1.0, t), 0.0, atol=1e-12)

    def test_burgers_decays(self) -> None:
        x = np.linspace(0.05, 0.95, 19)
        early = np.max(np.abs(oracles.burgers_exact(x, 0.01)))
        late = np.max(np.abs(oracles.burgers_exact(x, 0.1)))
        self.assertLess(late, early)
        self.assertLess(early, 1.0)

    def test_burgers_coefficients_are_cached(self) -> None:
        first = oracles.burgers_coefficients(1.0, 100)
        self.assertIs(first, oracles.burgers_coefficients(1.0, 100))
        self.assertEqual(len(first[1]), 100)

    def test_burgers_short_series_is_refused_when_it_breaks_down(self) -> None:
        with self.assertRaises(pinn_exception.SeriesTruncationError):
            oracles.burgers_exact(np.linspace(0.0, 1.0, 201), 0.0, BurgersParams(nu=0.01), n_terms=1)

    def test_heat_initial_gaussian(self) -> None:
        x = np.linspace(-3.0, 3.0, 13)
        np.testing.assert_allclose(oracles.heat2d_exact(x, 0.5, 0.0), np.exp(-x ** 2 - 0.25), rtol=1e-15)

    def test_heat_conserves_mass(self) -> None:
        x = np.linspace(-10.0, 10.0, 801)
        xx, yy = np.meshgrid(x, x, indexing="ij")
        spacing = x[1] - x[0]
        start = oracles.heat2d_exact(xx, yy, 0.0, HeatParams()).sum() * spacing ** 2
        end = oracles.heat2d_exact(xx, yy, 0.25, HeatParams()).sum() * spacing ** 2
        self.assertAlmostEqual(start, np.pi, places=6)
        self.assertAlmostEqual(end, np.pi, places=6)

    def test_kdv_soliton_shape(self) -> None:
        params = KdvParams()
        self.assertAlmostEqual(params.omega, 12.0)
        x = np.linspace(-250.0, 250.0, 5001)
        u, v = oracles.kdv_exact(x, 0.0, params)
        self.assertAlmostEqual(float(u.max()), 0.5, places=4)
        self.assertAlmostEqual(float(v.max()), 1.0 / (2.0 * np.sqrt(12.0)), places=4)
        np.testing.assert_allclose([u[0], u[-1]], 0.0, atol=1e-40)

    def test_kdv_peak_travels_at_lam_squared(self) -> None:
        x = np.linspace(-50.0, 50.0, 100001)
        start = x[np.argmax(oracles.kdv_exact(x, 0.0)[0])]
        end = x[np.argmax(oracles.kdv_exact(x, 10.0)[0])]
        self.assertAlmostEqual(end - start, 2.5, places=2)

    def test_exp_ode(self) -> None:
        self.assertEqual(oracles.exp_ode_exact(0.0), 3.0)
        self.assertAlmostEqual(float(oracles.exp_ode_exact(1.0, OdeParams(alpha=-1.0, c=2.0))), 2.0 / np.e, places=14)

    def test_oracle_functions_return_one_column_per_field(self) -> None:
        points = np.array([[0.2, 0.05], [0.7, 0.01], [0.4, 0.1]])
        self.assertEqual(oracles.oracle_for("toy", ToyParams())(points).shape, (3, 1))
        self.assertEqual(oracles.oracle_for("burgers", BurgersParams())(points).shape, (3, 1))
        self.assertEqual(oracles.oracle_for("kdv", KdvParams())(points).shape, (3, 2))
        self.assertEqual(oracles.oracle_for("heat2d", HeatParams())([[0.0, 0.0, 0.0]]).shape, (1, 1))
        self.assertEqual(oracles.oracle_for("exp-ode", OdeParams())([[0.5]]).shape, (1, 1))

    def test_problems_without_oracle(self) -> None:
        for problem_id in ("fisher", "turing1-1d", "turing2-2d"):
            self.assertIsNone(oracles.oracle_for(problem_id, None))


if __name__ == '__main__':
    unittest.main()
