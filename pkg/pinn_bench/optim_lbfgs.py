# coding=utf-8
"""
Limited-memory BFGS minimizer with a Wolfe line search
"""
from typing import Callable

import numpy as np
from loguru import logger

import pinn_bench.pinn_bench_exception as pinn_exception
from pinn_bench.model.classes.optimizer_state import LbfgsState
from pinn_bench.network_mlp import ParamVector
from pinn_bench.pinn_bench_consts import Consts

LossFn = Callable[[ParamVector], tuple[float, np.ndarray]]


def two_loop_direction(grad: np.ndarray, s_history: list[np.ndarray], y_history: list[np.ndarray]) -> np.ndarray:
    """
    Search direction -H*grad from the two-loop recursion. With an empty history the
    initial inverse Hessian is the identity; otherwise it is scaled by s'y / y'y of the
    newest pair.
    """
    q = grad.copy()
    alphas = []
    rhos = [1.0 / float(y @ s) for s, y in zip(s_history, y_history)]
    for s, y, rho in reversed(list(zip(s_history, y_history, rhos))):
        alpha = rho * float(s @ q)
        q -= alpha * y
        alphas.append(alpha)
    gamma = 1.0
    if s_history:
        gamma = float(s_history[-1] @ y_history[-1]) / float(y_history[-1] @ y_history[-1])
    r = gamma * q
    for (s, y, rho), alpha in zip(zip(s_history, y_history, rhos), reversed(alphas)):
        beta = rho * float(y @ r)
        r += (alpha - beta) * s
    return -r


def wolfe_search(loss_fn: LossFn, params: ParamVector, loss: float, grad: np.ndarray, direction: np.ndarray,
                 c1: float = Consts.wolfe_c1, c2: float = Consts.wolfe_c2,
                 max_halvings: int = Consts.line_search_max_halvings):
    """
    Bracketing line search starting at unit step. The bracket is halved whenever the
    sufficient-decrease or curvature condition fails.

    :return: (step, loss, grad) at the accepted point, or None after ``max_halvings`` failures.
    """
    slope = float(grad @ direction)
    step, low, high = 1.0, 0.0, np.inf
    for attempt in range(max_halvings + 1):
        candidate = params + step * direction
        new_loss, new_grad = loss_fn(candidate)
        if not np.isfinite(new_loss) or new_loss > loss + c1 * step * slope:
            high = step
        elif float(new_grad @ direction) < c2 * slope:
            low = step
        else:
            return step, new_loss, new_grad
        step = 0.5 * (low + high) if np.isfinite(high) else 2.0 * step
        logger.debug("Line search attempt {}: next step {}", attempt + 1, step)
    return None


def lbfgs_step(state: LbfgsState, params: ParamVector, loss_fn: LossFn) -> tuple[LbfgsState, ParamVector]:
    """
    One L-BFGS iteration.

    :param state: history and cached loss/gradient at ``params``,
    :param params: current parameters,
    :param loss_fn: returns (loss, gradient) at any candidate point.
    :return: new state and parameters. If the line search fails the state is flagged
             ``stalled`` and the parameters are returned unchanged.
    """
    if state.grad is None:
        loss, grad = loss_fn(params)
    else:
        loss, grad = state.loss, state.grad
    if not (np.isfinite(loss) and np.all(np.isfinite(grad))):
        raise pinn_exception.NumericError(f"Non-finite loss or gradient at iteration {state.iteration}",
                                          location=state.iteration)
    if not np.any(grad):
        return state.model_copy(update={"loss": loss, "grad": grad, "stalled": False}), params

    s_history, y_history = list(state.s_history), list(state.y_history)
    direction = two_loop_direction(grad, s_history, y_history)
    if float(grad @ direction) >= 0.0:
        logger.debug("Two-loop direction is not a descent direction, resetting history")
        s_history, y_history = [], []
        direction = -grad

    result = wolfe_search(loss_fn, params, loss, grad, direction)
    if result is None:
        logger.warning("Line search stalled at iteration {}", state.iteration)
        return state.model_copy(update={"loss": loss, "grad": grad, "stalled": True}), params

    step, new_loss, new_grad = result
    new_params = params + step * direction
    s = new_params - params
    y = new_grad - grad
    if float(s @ y) > 0.0:
        s_history.append(s)
        y_history.append(y)
        if len(s_history) > state.memory:
            s_history.pop(0)
            y_history.pop(0)
    new_state = state.model_copy(update={
        "s_history": s_history, "y_history": y_history, "loss": new_loss, "grad": new_grad,
        "iteration": state.iteration + 1, "stalled": False})
    return new_state, new_params
