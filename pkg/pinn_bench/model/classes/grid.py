# coding=utf-8
"""
Classes used for representing regular space(-space)-time grids
"""
import numpy as np
from pydantic import Field, model_validator

from pinn_bench.model.classes.base_config import BaseConfig


class Axis(BaseConfig):
    name: str = Field(description="Axis name, e.g. x, y or t")
    origin: float = Field(description="Coordinate of the first node")
    spacing: float = Field(gt=0.0, description="Distance between consecutive nodes")
    count: int = Field(ge=1, description="Number of nodes")

    def coords(self) -> np.ndarray:
        return self.origin + self.spacing * np.arange(self.count, dtype=np.float64)

    @property
    def last(self) -> float:
        return self.origin + self.spacing * (self.count - 1)

    @classmethod
    def spanning(cls, name: str, lower: float, upper: float, count: int) -> "Axis":
        """
        Axis with ``count`` nodes from ``lower`` to ``upper`` inclusive.
        """
        return cls(name=name, origin=lower, spacing=(upper - lower) / (count - 1), count=count)

    @classmethod
    def stepped(cls, name: str, lower: float, upper: float, spacing: float, closed: bool = True) -> "Axis":
        """
        Axis with a fixed spacing. ``closed=False`` mirrors ``np.arange(lower, upper, spacing)``
        and stops one spacing short of ``upper``.
        """
        intervals = int(round((upper - lower) / spacing))
        return cls(name=name, origin=lower, spacing=spacing, count=intervals + 1 if closed else intervals)


class Grid(BaseConfig):
    """
    Regular grid: one or two spatial axes and a time axis. Spatial axes need at least
    three nodes.
    """
    spatial: list[Axis] = Field(min_length=1, max_length=2)
    time: Axis

    @model_validator(mode="after")
    def check_counts(self) -> "Grid":
        for axis in self.spatial:
            if axis.count < 3:
                raise ValueError(f"Spatial axis {axis.name} needs at least 3 nodes, got {axis.count}")
        return self

    @property
    def dt(self) -> float:
        return self.time.spacing

    @property
    def spatial_shape(self) -> tuple[int, ...]:
        return tuple(axis.count for axis in self.spatial)

    def spatial_mesh(self) -> list[np.ndarray]:
        return np.meshgrid(*[axis.coords() for axis in self.spatial], indexing="ij")
