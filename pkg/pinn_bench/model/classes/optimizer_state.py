# coding=utf-8
"""
Classes used for representing the state of the optimizers
"""
from typing import Optional

import numpy as np
from pydantic import Field

from pinn_bench.model.classes.base_config import ArrayModel
from pinn_bench.pinn_bench_consts import Consts


class AdamState(ArrayModel):
    """
    Fields:
    - m, v: biased first and second moment estimates,
    - t: number of steps taken so far,
    - beta1, beta2, lr, eps: hyperparameters.
    """
    m: np.ndarray
    v: np.ndarray
    t: int = Field(default=0, ge=0)
    beta1: float = Field(default=Consts.adam_beta1)
    beta2: float = Field(default=Consts.adam_beta2)
    lr: float = Field(default=Consts.adam_lr, gt=0.0)
    eps: float = Field(default=Consts.adam_eps, gt=0.0)

    @classmethod
    def zeros(cls, size: int, **hyperparameters) -> "AdamState":
        return cls(m=np.zeros(size), v=np.zeros(size), **hyperparameters)


class LbfgsState(ArrayModel):
    """
    Fields:
    - s_history, y_history: stored parameter and gradient differences, oldest first,
    - memory: maximum number of stored pairs,
    - loss, grad: loss and gradient at the current parameters, None before the first step,
    - iteration: number of accepted steps,
    - stalled: set when the last line search failed.
    """
    s_history: list[np.ndarray] = Field(default_factory=list)
    y_history: list[np.ndarray] = Field(default_factory=list)
    memory: int = Field(default=Consts.lbfgs_memory, ge=1)
    loss: Optional[float] = Field(default=None)
    grad: Optional[np.ndarray] = Field(default=None)
    iteration: int = Field(default=0, ge=0)
    stalled: bool = Field(default=False)
