# coding=utf-8
"""
Class used for representing optimizer choice and hyperparameters
"""
from enum import Enum

from pydantic import Field, field_validator

from pinn_bench.model.classes.base_config import BaseConfig
from pinn_bench.pinn_bench_consts import Consts


class OptimizerKind(Enum):
    ADAM = "adam"
    LBFGS = "lbfgs"

    @classmethod
    def parse(cls, value: str) -> "OptimizerKind":
        value_lower = value.lower().replace("-", "")
        for member in cls:
            if member.name.lower() == value_lower or str(member.value).lower() == value_lower:
                return member
        raise ValueError(f"Invalid OptimizerKind value: {value}")


class OptimizerConfig(BaseConfig):
    kind: OptimizerKind = Field(default=OptimizerKind.ADAM, description="Minimizer used by the training loop")
    lr: float = Field(default=Consts.adam_lr, gt=0.0, description="Adam learning rate")
    beta1: float = Field(default=Consts.adam_beta1, ge=0.0, lt=1.0)
    beta2: float = Field(default=Consts.adam_beta2, ge=0.0, lt=1.0)
    eps: float = Field(default=Consts.adam_eps, gt=0.0)
    memory: int = Field(default=Consts.lbfgs_memory, ge=1, description="L-BFGS history size")

    @field_validator("kind", mode="before")
    @classmethod
    def parse_kind(cls, value):
        return OptimizerKind.parse(value) if isinstance(value, str) else value
