# coding=utf-8
"""
Classes used for representing problem domains and their boundary faces
"""
from enum import Enum

from pydantic import Field, model_validator

from pinn_bench.model.classes.base_config import BaseConfig


class Interval(BaseConfig):
    lower: float = Field(description="Lower bound")
    upper: float = Field(description="Upper bound")

    @model_validator(mode="after")
    def check_nonempty(self) -> "Interval":
        if not self.lower < self.upper:
            raise ValueError(f"Empty interval [{self.lower}, {self.upper}]")
        return self

    @property
    def length(self) -> float:
        return self.upper - self.lower


class DomainBox(BaseConfig):
    """
    Space(-space)-time box. Inputs of a network over this box are ordered as the spatial
    axes followed by the time axis.
    Fields:
    - spatial: zero, one or two spatial intervals,
    - time: time interval, the initial slice sits at ``time.lower``,
    - axis_names: names of the spatial axes followed by the time axis name.
    """
    spatial: list[Interval] = Field(default_factory=list, max_length=2)
    time: Interval
    axis_names: list[str] = Field(default_factory=lambda: ["x", "t"])

    @model_validator(mode="after")
    def check_names(self) -> "DomainBox":
        if len(self.axis_names) != len(self.spatial) + 1:
            raise ValueError("One name per spatial axis plus the time axis is required")
        return self

    @property
    def dim(self) -> int:
        return len(self.spatial) + 1

    @property
    def intervals(self) -> list[Interval]:
        return list(self.spatial) + [self.time]

    def lower_corner(self) -> list[float]:
        return [interval.lower for interval in self.intervals]

    def upper_corner(self) -> list[float]:
        return [interval.upper for interval in self.intervals]


class BoundaryKind(Enum):
    DIRICHLET = "dirichlet"
    NEUMANN = "neumann"

    @classmethod
    def parse(cls, value: str) -> "BoundaryKind":
        value_lower = value.lower()
        for member in cls:
            if member.name.lower() == value_lower or str(member.value).lower() == value_lower:
                return member
        raise ValueError(f"Invalid BoundaryKind value: {value}")


class FaceSide(Enum):
    LOWER = "lower"
    UPPER = "upper"


class BoundaryFace(BaseConfig):
    """
    One face of the spatial boundary. For Neumann faces the target applies to the
    derivative along ``axis`` instead of the field value.
    """
    axis: int = Field(ge=0, le=1, description="Index of the spatial axis normal to the face")
    side: FaceSide
    kind: BoundaryKind = Field(default=BoundaryKind.DIRICHLET)

    @property
    def name(self) -> str:
        return f"{self.side.value}-{self.axis}"
