# coding=utf-8
"""
Adam minimizer over a flat parameter vector
"""
import numpy as np

import pinn_bench.pinn_bench_exception as pinn_exception
from pinn_bench.model.classes.optimizer_state import AdamState
from pinn_bench.network_mlp import ParamVector


def adam_step(state: AdamState, params: ParamVector, grad: np.ndarray) -> tuple[AdamState, ParamVector]:
    """
    One bias-corrected Adam update, with denominator sqrt(v_hat) + eps.

    :param state: moments and hyperparameters before the step,
    :param params: current parameters,
    :param grad: loss gradient at ``params``.
    :return: the new state and the updated parameters; inputs are left untouched.
    """
    if grad.shape != params.shape or state.m.shape != params.shape:
        raise pinn_exception.ShapeError(
            f"Adam got params {params.shape}, grad {grad.shape}, state {state.m.shape}")
    if not np.all(np.isfinite(grad)):
        bad = np.flatnonzero(~np.isfinite(grad))
        raise pinn_exception.NumericError(
            f"Non-finite gradient at step {state.t + 1}: {bad.size} entries, first at index {bad[0]}",
            location=state.t + 1)
    t = state.t + 1
    m = state.beta1 * state.m + (1.0 - state.beta1) * grad
    v = state.beta2 * state.v + (1.0 - state.beta2) * (grad * grad)
    m_hat = m / (1.0 - state.beta1 ** t)
    v_hat = v / (1.0 - state.beta2 ** t)
    new_params = params - state.lr * m_hat / (np.sqrt(v_hat) + state.eps)
    return state.model_copy(update={"m": m, "v": v, "t": t}), new_params
