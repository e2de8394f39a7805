# coding=utf-8
"""
Unit tests for the Adam and L-BFGS minimizers
"""
import unittest

import numpy as np

import pinn_bench.pinn_bench_exception as pinn_exception
from pinn_bench.model.classes.optimizer_state import AdamState, LbfgsState
from pinn_bench.optim_adam import adam_step
from pinn_bench.optim_lbfgs import lbfgs_step, two_loop_direction, wolfe_search


def quadratic(scales: np.ndarray):
    def loss_fn(x: np.ndarray) -> tuple[float, np.ndarray]:
        return float(0.5 * np.sum(scales * x * x)), scales * x
    return loss_fn


class AdamTests(unittest.TestCase):

    def test_first_step_by_hand(self) -> None:
        state = AdamState.zeros(1)
        state, params = adam_step(state, np.zeros(1), np.ones(1))
        self.assertAlmostEqual(state.m[0], 0.1, places=15)
        self.assertAlmostEqual(state.v[0], 0.001, places=15)
        self.assertEqual(state.t, 1)
        self.assertAlmostEqual(params[0], -0.001, places=10)

    def test_zero_gradient_keeps_params(self) -> None:
        state = AdamState.zeros(3)
        params = np.array([1.0, -2.0, 3.0])
        for _ in range(5):
            state, new_params = adam_step(state, params, np.zeros(3))
            np.testing.assert_array_equal(new_params, params)
            params = new_params

    def test_step_is_deterministic_and_pure(self) -> None:
        state = AdamState.zeros(2, lr=0.01)
        params, grad = np.array([0.3, -0.1]), np.array([2.0, -0.5])
        first = adam_step(state, params, grad)
        second = adam_step(state, params, grad)
        self.assertEqual(first[1].tobytes(), second[1].tobytes())
        np.testing.assert_array_equal(state.m, 0.0)
        self.assertEqual(state.t, 0)

    def test_update_is_bounded_by_learning_rate(self) -> None:
        rng = np.random.Generator(np.random.PCG64(1))
        state = AdamState.zeros(10)
        params = np.zeros(10)
        for _ in range(100):
            state, new_params = adam_step(state, params, rng.normal(scale=100.0, size=10))
            self.assertLessEqual(np.max(np.abs(new_params - params)), 10.0 * state.lr)
            self.assertTrue(np.all(state.v >= 0.0))
            params = new_params

    def test_non_finite_gradient(self) -> None:
        with self.assertRaises(pinn_exception.NumericError):
            adam_step(AdamState.zeros(2), np.zeros(2), np.array([1.0, np.nan]))

    def test_shape_mismatch(self) -> None:
        with self.assertRaises(pinn_exception.ShapeError):
            adam_step(AdamState.zeros(2), np.zeros(3), np.zeros(3))


class LbfgsTests(unittest.TestCase):

    def test_unit_quadratic_single_newton_step(self) -> None:
        state, params = lbfgs_step(LbfgsState(), np.array([1.0]), quadratic(np.ones(1)))
        self.assertEqual(params[0], 0.0)
        self.assertFalse(state.stalled)
        self.assertEqual(state.iteration, 1)

    def test_empty_history_direction_is_steepest_descent(self) -> None:
        grad = np.array([0.5, -2.0])
        np.testing.assert_array_equal(two_loop_direction(grad, [], []), -grad)

    def test_anisotropic_quadratic_converges(self) -> None:
        loss_fn = quadratic(np.array([1.0, 10.0]))
        params = np.array([1.0, 1.0])
        state = LbfgsState()
        losses = [loss_fn(params)[0]]
        for _ in range(20):
            state, params = lbfgs_step(state, params, loss_fn)
            losses.append(loss_fn(params)[0])
            if losses[-1] <= 1e-10:
                break
        self.assertLessEqual(losses[-1], 1e-10)
        for before, after in zip(losses, losses[1:]):
            self.assertLessEqual(after, before)

    def test_history_stays_within_memory_and_curvature(self) -> None:
        rng = np.random.Generator(np.random.PCG64(5))
        scales = rng.uniform(0.5, 20.0, size=5)
        loss_fn = quadratic(scales)
        params = rng.normal(size=5)
        state = LbfgsState(memory=3)
        previous = loss_fn(params)[0]
        for _ in range(15):
            state, params = lbfgs_step(state, params, loss_fn)
            current = loss_fn(params)[0]
            self.assertLessEqual(current, previous)
            previous = current
            self.assertLessEqual(len(state.s_history), 3)
            for s, y in zip(state.s_history, state.y_history):
                self.assertGreater(float(s @ y), 0.0)

    def test_line_search_failure_stalls(self) -> None:
        def uphill(x: np.ndarray) -> tuple[float, np.ndarray]:
            # gradient claims descent along +x while the loss grows in every direction
            return float(np.sum(x * x)), -np.ones_like(x)

        state, params = lbfgs_step(LbfgsState(), np.array([0.0, 0.0]), uphill)
        self.assertTrue(state.stalled)
        np.testing.assert_array_equal(params, [0.0, 0.0])

    def test_wolfe_search_accepts_unit_step_on_newton_direction(self) -> None:
        loss_fn = quadratic(np.array([2.0]))
        loss, grad = loss_fn(np.array([3.0]))
        step, new_loss, _ = wolfe_search(loss_fn, np.array([3.0]), loss, grad, np.array([-3.0]))
        self.assertEqual(step, 1.0)
        self.assertEqual(new_loss, 0.0)


if __name__ == '__main__':
    unittest.main()
