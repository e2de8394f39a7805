# coding=utf-8
"""
Closed-form and quadrature-based reference solutions.
"""
from functools import lru_cache
from typing import Callable

import numpy as np
from loguru import logger
from pydantic import Field
from scipy.integrate import quad

import pinn_bench.pinn_bench_exception as pinn_exception
from pinn_bench.model.classes.base_config import ArrayModel
from pinn_bench.model.classes.problem_params import (BurgersParams, HeatParams, KdvParams, OdeParams,
                                                     ToyParams)
from pinn_bench.pinn_bench_consts import Consts


class OracleFn(ArrayModel):
    """
    Fields:
    - problem_id: problem the oracle solves,
    - evaluator: maps points of shape (n, input_dim) to values of shape (n, fields),
    - note: validity remarks.
    """
    problem_id: str
    evaluator: Callable[[np.ndarray], np.ndarray]
    note: str = Field(default="")

    def __call__(self, points: np.ndarray) -> np.ndarray:
        return self.evaluator(np.atleast_2d(np.asarray(points, dtype=np.float64)))


def toy_exact(x, t, params: ToyParams = ToyParams()):
    """
    6 exp(-3x - 2t) for the default coefficients. For general (a, b, c) the separable
    solution keeping the same initial profile is 6 exp(-3x + (3a - c) t / b).
    """
    return 6.0 * np.exp(-3.0 * np.asarray(x) + (3.0 * params.a - params.c) / params.b * np.asarray(t))


@lru_cache(maxsize=32)
def burgers_coefficients(nu: float, n_terms: int = 100) -> tuple[float, tuple[float, ...]]:
    """
    Cosine-series coefficients of theta_0(x) = exp((cos(pi x) - 1) / (2 pi nu)) on [0, 1].

    :return: (a_0, (a_1, ..., a_n)) with a_0 = int theta_0 and a_n = 2 int theta_0 cos(n pi x).
    """
    def theta0(x):
        return np.exp((np.cos(np.pi * x) - 1.0) / (2.0 * np.pi * nu))

    a0 = quad(theta0, 0.0, 1.0, epsabs=1e-14, epsrel=1e-12)[0]
    coefficients = tuple(
        2.0 * quad(lambda x, n=n: theta0(x) * np.cos(n * np.pi * x), 0.0, 1.0,
                   epsabs=1e-14, epsrel=1e-12, limit=200)[0]
        for n in range(1, n_terms + 1))
    logger.debug("Burgers coefficients for nu={}: a0={}", nu, a0)
    return a0, coefficients


def burgers_exact(x, t, params: BurgersParams = BurgersParams(), n_terms: int = 100):
    """
    Viscous Burgers with u(x, 0) = sin(pi x) and u(0, t) = u(1, t) = 0, through the
    Cole-Hopf transform of the truncated cosine series.
    """
    x, t = np.broadcast_arrays(np.asarray(x, dtype=np.float64), np.asarray(t, dtype=np.float64))
    nu = params.nu
    a0, coefficients = burgers_coefficients(nu, n_terms)
    numerator = np.zeros(x.shape)
    denominator = np.full(x.shape, a0)
    for n, a_n in enumerate(coefficients, start=1):
        decay = a_n * np.exp(-n * n * np.pi * np.pi * nu * t)
        numerator += decay * n * np.sin(n * np.pi * x)
        denominator += decay * np.cos(n * np.pi * x)
    if np.any(denominator <= 0.0):
        raise pinn_exception.SeriesTruncationError(
            f"Series denominator is not positive with {n_terms} terms, increase the term count")
    return 2.0 * np.pi * nu * numerator / denominator


def heat2d_exact(x, y, t, params: HeatParams = HeatParams()):
    """
    Heat-kernel evolution of the Gaussian exp(-x^2 - y^2) on the whole plane.
    """
    spread = 1.0 + 4.0 * params.alpha * np.asarray(t)
    return np.exp(-(np.asarray(x) ** 2 + np.asarray(y) ** 2) / spread) / spread


def kdv_exact(x, t, params: KdvParams = KdvParams()):
    """
    Sech soliton pair u = 2 lam^2 sech^2(xi), v = sech(xi) / (2 sqrt(omega)) with
    xi = lam (x - lam^2 t) + 1 / (2 ln omega).
    """
    lam = params.lam
    xi = lam * (np.asarray(x) - lam ** 2 * np.asarray(t)) + params.phase
    sech = 1.0 / np.cosh(xi)
    return 2.0 * lam ** 2 * sech ** 2, sech / (2.0 * np.sqrt(params.omega))


def exp_ode_exact(s, params: OdeParams = OdeParams()):
    return params.c * np.exp(params.alpha * np.asarray(s))


def oracle_for(problem_id: str, params) -> OracleFn | None:
    """
    :return: the oracle of a problem with the given parameter set, or None if it has none.
    """
    match problem_id:
        case Consts.toy:
            return OracleFn(problem_id=problem_id, note="exact",
                            evaluator=lambda p: toy_exact(p[:, 0], p[:, 1], params)[:, None])
        case Consts.burgers:
            return OracleFn(problem_id=problem_id, note="100-term cosine series; t > 0 is well resolved",
                            evaluator=lambda p: burgers_exact(p[:, 0], p[:, 1], params)[:, None])
        case Consts.heat2d:
            return OracleFn(problem_id=problem_id, note="free-space solution, box edges carry its values",
                            evaluator=lambda p: heat2d_exact(p[:, 0], p[:, 1], p[:, 2], params)[:, None])
        case Consts.kdv:
            return OracleFn(problem_id=problem_id, note="exact soliton",
                            evaluator=lambda p: np.stack(kdv_exact(p[:, 0], p[:, 1], params), axis=1))
        case Consts.exp_ode:
            return OracleFn(problem_id=problem_id, note="exact",
                            evaluator=lambda p: exp_ode_exact(p[:, 0], params)[:, None])
        case _:
            return None
