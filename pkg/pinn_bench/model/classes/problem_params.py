# coding=utf-8
"""
Physical parameter sets of the supported problems
"""
import math
from typing import Optional

from pydantic import Field, field_validator, model_validator

from pinn_bench.model.classes.base_config import BaseConfig


class ToyParams(BaseConfig):
    """
    Coefficients of a*u_x + b*u_t + c*u = 0.
    """
    a: float = Field(default=1.0)
    b: float = Field(default=-2.0)
    c: float = Field(default=-1.0)

    @field_validator("b")
    @classmethod
    def check_b(cls, value: float) -> float:
        if value == 0.0:
            raise ValueError("b must be non-zero, the equation is marched in time")
        return value


class BurgersParams(BaseConfig):
    nu: float = Field(default=1.0, gt=0.0, description="Kinematic viscosity")


class HeatParams(BaseConfig):
    alpha: float = Field(default=2.0, gt=0.0, description="Diffusivity")


class KdvParams(BaseConfig):
    a: float = Field(default=-0.125)
    b: float = Field(default=-3.0)
    lam: float = Field(default=0.5, description="Soliton wave number")

    @model_validator(mode="after")
    def check_omega(self) -> "KdvParams":
        if 4.0 * self.a + 1.0 == 0.0:
            raise ValueError("4a + 1 must be non-zero")
        if self.omega <= 0.0:
            raise ValueError(f"omega must be positive, got {self.omega}")
        return self

    @property
    def omega(self) -> float:
        return -self.b / (8.0 * (4.0 * self.a + 1.0) * self.lam ** 4)

    @property
    def phase(self) -> float:
        return 1.0 / (2.0 * math.log(self.omega))


class FisherParams(BaseConfig):
    diffusivity: float = Field(default=1.0, gt=0.0)
    growth_rate: float = Field(default=1.0, gt=0.0)


class Turing1Params(BaseConfig):
    """
    Bacteria (b) / phagocyte (c) system. ``f_b`` defaults to k*r_c and ``f_e`` to the value
    that makes (theta*b_i, k*theta*b_i) a uniform steady state.
    """
    r_b: float = Field(default=0.0347, description="Bacteria reproduction rate per minute")
    r_c: float = Field(default=0.02, description="Phagocyte death rate per minute")
    d_b: float = Field(default=1e-13, ge=0.0, description="Bacteria diffusion coefficient")
    d_c: float = Field(default=1e-10, ge=0.0, description="Phagocyte diffusion coefficient")
    b_i: float = Field(default=1e17, gt=0.0, description="Bacteria carrying capacity")
    alpha: float = Field(default=0.3129, description="Phagocytosis rate")
    s_b: float = Field(default=1e15, gt=0.0, description="Half-saturation bacteria density")
    theta: float = Field(default=0.3, gt=0.0, lt=1.0)
    k: float = Field(default=0.1, gt=0.0)
    f_b: Optional[float] = Field(default=None, description="Phagocyte recruitment by bacteria")
    f_e: Optional[float] = Field(default=None, description="Phagocyte recruitment by epithelium")

    @model_validator(mode="after")
    def fill_derived(self) -> "Turing1Params":
        if self.f_b is None:
            self.f_b = self.k * self.r_c
        if self.f_e is None:
            self.f_e = self.derived_f_e()
        return self

    def derived_f_e(self) -> float:
        beta = self.theta * self.b_i
        return self.alpha * beta / ((self.s_b + beta) * (1.0 - self.theta)) - self.r_b / self.k

    @classmethod
    def table(cls) -> "Turing1Params":
        return cls()

    @classmethod
    def listing_fd(cls) -> "Turing1Params":
        return cls(r_c=2.0, d_b=1.0, d_c=1e5)

    @classmethod
    def listing_pinn(cls) -> "Turing1Params":
        return cls(r_c=2.0, d_b=1.0, d_c=1e5, b_i=1e7, s_b=1e5)


class Turing2Params(BaseConfig):
    a: float = Field(default=2.8e-4, ge=0.0)
    b: float = Field(default=5e-3, ge=0.0)
    tau: float = Field(default=0.1, gt=0.0)
    c: float = Field(default=-0.005)


class OdeParams(BaseConfig):
    alpha: float = Field(default=2.0, allow_inf_nan=False, description="Growth rate")
    c: float = Field(default=3.0, allow_inf_nan=False, description="Abundance at s=0")
