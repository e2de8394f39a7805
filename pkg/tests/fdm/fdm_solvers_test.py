# coding=utf-8
"""
Unit tests of the finite-difference reference solvers
"""
import unittest

import numpy as np
from scipy.linalg import solve_banded

import pinn_bench.fdm_solvers as fdm
import pinn_bench.oracles as oracles
import pinn_bench.pinn_bench_exception as pinn_exception
from pinn_bench.model.classes.grid import Axis, Grid
from pinn_bench.model.classes.problem_params import (BurgersParams, FisherParams, HeatParams, KdvParams, ToyParams,
                                                     Turing1Params, Turing2Params)
from pinn_bench.pinn_bench_metrics import front_position, kdv_linspace_rmse, rmse_arrays


class ThomasTests(unittest.TestCase):

    def test_matches_banded_solver(self) -> None:
        rng = np.random.Generator(np.random.PCG64(5))
        n = 50
        lower, upper = rng.uniform(-1.0, 1.0, n - 1), rng.uniform(-1.0, 1.0, n - 1)
        diagonal = 4.0 + rng.uniform(0.0, 1.0, n)
        rhs = rng.uniform(-1.0, 1.0, n)
        bands = np.zeros((3, n))
        bands[0, 1:], bands[1], bands[2, :-1] = upper, diagonal, lower
        np.testing.assert_allclose(fdm.thomas_solve(lower, diagonal, upper, rhs),
                                   solve_banded((1, 1), bands, rhs), rtol=1e-12, atol=1e-14)

    def test_single_row(self) -> None:
        np.testing.assert_allclose(fdm.thomas_solve(np.empty(0), np.array([2.0]), np.empty(0), np.array([3.0])),
                                   [1.5])

    def test_band_lengths(self) -> None:
        with self.assertRaises(pinn_exception.ShapeError):
            fdm.thomas_solve(np.ones(3), np.ones(3), np.ones(2), np.ones(3))

    def test_zero_pivot(self) -> None:
        with self.assertRaises(pinn_exception.SingularityError):
            fdm.thomas_solve(np.ones(1), np.array([0.0, 1.0]), np.ones(1), np.ones(2))


class PresetGridTests(unittest.TestCase):

    def test_toy_grid(self) -> None:
        grid = fdm.preset_grid("toy")
        self.assertEqual(grid.spatial_shape, (21,))
        self.assertEqual(grid.time.count, 101)

    def test_half_open_grids(self) -> None:
        self.assertEqual(fdm.preset_grid("kdv").spatial_shape, (500,))
        self.assertEqual(fdm.preset_grid("fisher").time.count, 1000)
        self.assertEqual(fdm.preset_grid("fisher", "stated").time.count, 10000)

    def test_ode_has_no_scheme(self) -> None:
        with self.assertRaises(pinn_exception.ConfigurationError):
            fdm.preset_grid("exp-ode")
        with self.assertRaises(pinn_exception.ConfigurationError):
            fdm.solve_fd("exp-ode", None, grid=fdm.preset_grid("toy"))


class ToyTests(unittest.TestCase):

    def error(self, scheme: str) -> float:
        result = fdm.solve_toy_fd(fdm.preset_grid("toy"), scheme=scheme, keep_history=True)
        x = result.grid.spatial[0].coords()
        exact = oracles.toy_exact(x[None, :], result.times[:, None])
        return rmse_arrays(result.field("u"), exact)

    def test_third_order_scheme_beats_first_order(self) -> None:
        third, first = self.error("upwind3"), self.error("upwind1")
        self.assertLess(third, 0.05)
        self.assertLess(third, 0.5 * first)

    def test_boundary_columns_are_exact(self) -> None:
        result = fdm.solve_toy_fd(fdm.preset_grid("toy"), keep_history=True)
        np.testing.assert_allclose(result.field("u")[:, 0], oracles.toy_exact(0.0, result.times), rtol=1e-14)

    def test_unknown_scheme(self) -> None:
        with self.assertRaises(pinn_exception.ConfigurationError):
            fdm.solve_toy_fd(fdm.preset_grid("toy"), scheme="lax")

    def test_refuses_large_step(self) -> None:
        grid = Grid(spatial=[Axis.stepped("x", 0.0, 2.0, 0.1)], time=Axis.stepped("t", 0.0, 1.0, 0.2))
        with self.assertRaises(pinn_exception.StabilityError) as context:
            fdm.solve_toy_fd(grid, ToyParams())
        self.assertAlmostEqual(context.exception.suggested_step, 0.1)

    def test_snapshots_without_history(self) -> None:
        result = fdm.solve_toy_fd(fdm.preset_grid("toy"), snapshots=[0.5])
        np.testing.assert_allclose(result.times, [0.5, 0.99, 1.0])

    def test_wrong_dimension(self) -> None:
        with self.assertRaises(pinn_exception.ShapeError):
            fdm.solve_toy_fd(fdm.preset_grid("heat2d"))


class BurgersTests(unittest.TestCase):

    def test_error_against_series(self) -> None:
        result = fdm.solve_burgers_fd(fdm.preset_grid("burgers"), keep_history=True)
        later = result.at_times([0.01 * k for k in range(1, 10)])
        x = later.grid.spatial[0].coords()
        exact = oracles.burgers_exact(x[None, :], later.times[:, None])
        error = rmse_arrays(later.field("u"), exact)
        self.assertGreater(error, 1e-3)
        self.assertLess(error, 0.03)

    def test_end_values_and_potential(self) -> None:
        result = fdm.solve_burgers_fd(fdm.preset_grid("burgers"), keep_theta=True)
        self.assertEqual(result.field_names, ["u", "theta"])
        np.testing.assert_array_equal(result.field("u")[:, [0, -1]], 0.0)
        self.assertTrue(np.all(result.field("theta") > 0.0))

    def test_refuses_large_step(self) -> None:
        grid = Grid(spatial=[Axis(name="x", origin=0.0, spacing=0.01, count=100)],
                    time=Axis(name="t", origin=0.0, spacing=1e-4, count=10))
        with self.assertRaises(pinn_exception.StabilityError) as context:
            fdm.solve_burgers_fd(grid, BurgersParams())
        self.assertAlmostEqual(context.exception.suggested_step, 5e-5)


class HeatTests(unittest.TestCase):
    grid = Grid(spatial=[Axis.stepped("x", -3.0, 3.0, 0.2), Axis.stepped("y", -3.0, 3.0, 0.2)],
                time=Axis.stepped("t", 0.0, 0.1, 0.004))

    def test_ring_carries_free_space_solution(self) -> None:
        result = fdm.solve_heat2d_fd(self.grid, keep_history=True)
        xs, ys = self.grid.spatial_mesh()
        for index, time in enumerate(result.times):
            exact = oracles.heat2d_exact(xs, ys, time)
            values = result.field("u")[index]
            np.testing.assert_array_equal(values[0], exact[0])
            np.testing.assert_array_equal(values[:, -1], exact[:, -1])
            self.assertLess(np.max(np.abs(values - exact)), 0.05)

    def test_refuses_large_step(self) -> None:
        grid = Grid(spatial=self.grid.spatial, time=Axis.stepped("t", 0.0, 0.1, 0.01))
        with self.assertRaises(pinn_exception.StabilityError) as context:
            fdm.solve_heat2d_fd(grid, HeatParams())
        self.assertAlmostEqual(context.exception.suggested_step, 0.005)

    def test_initial_shape_is_checked(self) -> None:
        with self.assertRaises(pinn_exception.ShapeError):
            fdm.solve_heat2d_fd(self.grid, initial=np.zeros((3, 3)))


class KdvTests(unittest.TestCase):

    def test_listing_scheme_stays_close_to_soliton(self) -> None:
        result = fdm.solve_kdv_fd(fdm.preset_grid("kdv"), keep_history=True)
        self.assertFalse(result.diverged)
        self.assertEqual(len(result.times), 500)
        x = result.grid.spatial[0].coords()
        u, v = oracles.kdv_exact(x[None, :], result.times[:, None], KdvParams())
        error_u = rmse_arrays(result.field("u"), u)
        error_v = rmse_arrays(result.field("v"), v)
        self.assertGreater(error_u, 1e-4)
        self.assertLess(error_u, 0.1)
        self.assertLess(error_v, 0.1)

    def test_benchmark_comparison_reproduces_reference_figures(self) -> None:
        result = fdm.solve_kdv_fd(fdm.preset_grid("kdv"), keep_history=True)
        error_u, error_v = kdv_linspace_rmse(result, KdvParams())
        self.assertGreaterEqual(error_u, 0.5 * 0.0110)
        self.assertLessEqual(error_u, 1.5 * 0.0110)
        self.assertGreaterEqual(error_v, 0.5 * 0.0158)
        self.assertLessEqual(error_v, 1.5 * 0.0158)

    def test_benchmark_comparison_needs_square_history(self) -> None:
        result = fdm.solve_kdv_fd(fdm.preset_grid("kdv"), snapshots=[0.0, 5.0])
        with self.assertRaises(pinn_exception.ShapeError):
            kdv_linspace_rmse(result)

    def test_edge_nodes_are_held_at_zero(self) -> None:
        result = fdm.solve_kdv_fd(fdm.preset_grid("kdv"))
        last = result.field("u")[-1]
        np.testing.assert_array_equal(last[[0, 1, -3, -2, -1]], 0.0)

    def test_divergence_is_flagged(self) -> None:
        grid = Grid(spatial=[Axis.stepped("x", -20.0, 20.0, 1.0, closed=False)],
                    time=Axis.stepped("t", 0.0, 1.0, 0.02))
        n = grid.spatial_shape[0]
        result = fdm.solve_kdv_fd(grid, initial=(np.full(n, 1e7), np.zeros(n)))
        self.assertTrue(result.diverged)
        self.assertEqual(result.diverged_step, 1)
        self.assertEqual(len(result.times), 1)


class FisherTests(unittest.TestCase):

    def test_heaviside_start(self) -> None:
        np.testing.assert_array_equal(fdm.fisher_initial(np.array([-1.0, 0.0, 1.0])), [1.0, 0.0, 0.0])

    def test_values_stay_in_unit_interval_and_front_advances(self) -> None:
        result = fdm.solve_fisher_fd(fdm.preset_grid("fisher"), FisherParams(), snapshots=[0.0])
        self.assertFalse(result.diverged)
        values = result.field("u")
        self.assertGreaterEqual(values.min(), -1e-12)
        self.assertLessEqual(values.max(), 1.0 + 1e-12)
        fronts = front_position(result)
        self.assertAlmostEqual(fronts[0], -0.05, places=9)
        self.assertGreater(fronts[-1], fronts[0] + 0.3)

    def test_refuses_large_step(self) -> None:
        grid = Grid(spatial=[Axis.stepped("x", -1.0, 1.0, 0.1)], time=Axis.stepped("t", 0.0, 1.0, 0.01))
        with self.assertRaises(pinn_exception.StabilityError) as context:
            fdm.solve_fisher_fd(grid)
        self.assertAlmostEqual(context.exception.suggested_step, 0.005)


class Turing1Tests(unittest.TestCase):
    grid = Grid(spatial=[Axis.spanning("x", 0.0, 3e-3, 31)], time=Axis.stepped("t", 0.0, 300.0, 1.0))

    def test_pulse(self) -> None:
        pulse = fdm.turing1_pulse(np.linspace(0.0, 3000.0, 3001), Turing1Params.listing_fd(), 0.0, 3000.0)
        self.assertEqual(np.count_nonzero(pulse), 9)
        self.assertEqual(pulse.max(), 0.01 * Turing1Params.listing_fd().b_i)

    def test_bacteria_stay_below_capacity(self) -> None:
        params = Turing1Params.listing_pinn()
        x = self.grid.spatial[0].coords()
        b0 = 0.01 * params.b_i * np.exp(-((x - 1.5e-3) / 1e-4) ** 2)
        result = fdm.solve_turing1_fd(self.grid, params, initial=(b0, np.zeros_like(x)))
        self.assertFalse(result.diverged)
        self.assertTrue(np.all(np.isfinite(result.values)))
        self.assertLessEqual(result.field("b").max(), params.b_i)
        self.assertGreater(result.field("c")[-1].max(), 0.0)

    def test_zero_flux_diffusion_conserves_mass(self) -> None:
        params = Turing1Params(r_b=0.0, r_c=0.0, alpha=0.0, f_b=0.0, f_e=0.0, d_b=1e-9, d_c=1e-9)
        x = self.grid.spatial[0].coords()
        b0 = np.exp(-((x - 1e-3) / 3e-4) ** 2)
        result = fdm.solve_turing1_fd(self.grid, params, initial=(b0, np.zeros_like(x)))
        self.assertAlmostEqual(result.field("b")[-1].sum(), b0.sum(), places=10)
        self.assertLess(np.std(result.field("b")[-1]), np.std(b0))


class Turing2Tests(unittest.TestCase):
    grid = Grid(spatial=[Axis(name="x", origin=-1.0, spacing=0.1, count=20),
                         Axis(name="y", origin=-1.0, spacing=0.1, count=20)],
                time=Axis.stepped("t", 0.0, 1.0, 0.01))

    def test_seeded_runs_are_reproducible(self) -> None:
        first = fdm.solve_turing2_fd(self.grid, seed=3)
        second = fdm.solve_turing2_fd(self.grid, seed=3)
        other = fdm.solve_turing2_fd(self.grid, seed=4)
        np.testing.assert_array_equal(first.values, second.values)
        self.assertFalse(np.array_equal(first.values[:, -1], other.values[:, -1]))

    def test_bounded_with_zero_flux_edges(self) -> None:
        result = fdm.solve_turing2_fd(self.grid, seed=0)
        self.assertFalse(result.diverged)
        self.assertLess(np.max(np.abs(result.values)), 2.0)
        u = result.field("u")[-1]
        np.testing.assert_array_equal(u[0, :], u[1, :])
        np.testing.assert_array_equal(u[:, -1], u[:, -2])

    def test_initial_field(self) -> None:
        field = fdm.turing2_initial_field(0, (5, 4))
        self.assertEqual(field.shape, (2, 5, 4))
        self.assertTrue(np.all((field >= 0.0) & (field < 1.0)))

    def test_refuses_large_step(self) -> None:
        grid = Grid(spatial=self.grid.spatial, time=Axis.stepped("t", 0.0, 1.0, 0.1))
        with self.assertRaises(pinn_exception.StabilityError):
            fdm.solve_turing2_fd(grid, Turing2Params())


class SolveFdTests(unittest.TestCase):

    def test_dispatch_uses_preset_grid(self) -> None:
        result = fdm.solve_fd("toy", ToyParams(), keep_history=True)
        self.assertEqual(result.values.shape, (1, 101, 21))


if __name__ == '__main__':
    unittest.main()
