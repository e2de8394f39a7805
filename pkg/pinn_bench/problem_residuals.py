# coding=utf-8
"""
PDE/ODE residuals f := LHS - RHS.

The functions only use arithmetic operators, so they accept floats, numpy arrays or tape
nodes alike; the trainer feeds them tape nodes holding Jet coefficients.
"""
import numpy as np

import pinn_bench.pinn_bench_exception as pinn_exception
from pinn_bench.autodiff_tape import Node
from pinn_bench.model.classes.problem_params import (KdvParams, Turing1Params, Turing2Params)


def _values(x):
    return x.value if isinstance(x, Node) else np.asarray(x)


def residual_toy(u, u_x, u_t, a: float = 1.0, b: float = -2.0, c: float = -1.0):
    """
    a*u_x + b*u_t + c*u, which is u_x - 2u_t - u for the default coefficients.
    """
    return a * u_x + b * u_t + c * u


def residual_burgers(u, u_x, u_t, u_xx, nu: float):
    return u_t + u * u_x - nu * u_xx


def residual_heat2d(u_t, u_xx, u_yy, alpha: float):
    return u_t - alpha * (u_xx + u_yy)


def residual_kdv(u, v, u_x, v_x, u_t, v_t, u_xxx, v_xxx, params: KdvParams):
    """
    Coupled system
        f = u_t - 6a u u_x - 2b v v_x - a u_xxx
        g = v_t + 3 u v_x + v_xxx
    This is the convention satisfied by the sech soliton; the alternative sign pattern
    is kept in :func:`residual_kdv_rejected` for comparison.
    """
    f = u_t - 6.0 * params.a * (u * u_x) - 2.0 * params.b * (v * v_x) - params.a * u_xxx
    g = v_t + 3.0 * (u * v_x) + v_xxx
    return f, g


def residual_kdv_rejected(u, v, u_x, v_x, u_t, v_t, u_xxx, v_xxx, params: KdvParams):
    """
    Sign pattern of the displayed system, u_t = 6a u u_x - 2b v v_x - a u_xxx and
    v_t = -3a u v_x + v_xxx. The soliton does not satisfy it.
    """
    f = u_t - 6.0 * params.a * (u * u_x) + 2.0 * params.b * (v * v_x) + params.a * u_xxx
    g = v_t + 3.0 * params.a * (u * v_x) - v_xxx
    return f, g


def residual_fisher(u, u_t, u_xx, diffusivity: float = 1.0, growth_rate: float = 1.0):
    return u_t - diffusivity * u_xx - growth_rate * (u * (1.0 - u))


def residual_turing1(b, c, b_t, c_t, b_lap, c_lap, params: Turing1Params):
    """
    Bacteria b and phagocytes c:
        f = b_t - d_b lap(b) - r_b (1 - b/b_i) b + alpha b c / (s_b + b) - f_e (1 - b/b_i) c
        g = c_t - d_c lap(c) - f_b b + r_c c
    """
    if np.any(_values(b) + params.s_b == 0.0):
        raise pinn_exception.SingularityError("s_b + b vanishes")
    saturation = 1.0 - b / params.b_i
    f = (b_t - params.d_b * b_lap - params.r_b * (saturation * b)
         + params.alpha * (b * c) / (b + params.s_b) - params.f_e * (saturation * c))
    g = c_t - params.d_c * c_lap - params.f_b * b + params.r_c * c
    return f, g


def residual_turing2(u, v, u_t, v_t, u_lap, v_lap, params: Turing2Params):
    f = u_t - params.a * u_lap - u + u * u * u + v - params.c
    g = v_t - (params.b * v_lap + u - v) / params.tau
    return f, g


def residual_exp_ode(z, z_s, alpha: float):
    return z_s - alpha * z
