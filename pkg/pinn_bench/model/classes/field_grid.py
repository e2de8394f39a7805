# coding=utf-8
"""
Class used for representing a discretized solution over a grid
"""
from typing import Optional

import numpy as np
from pydantic import Field

from pinn_bench.model.classes.base_config import ArrayModel
from pinn_bench.model.classes.grid import Axis, Grid
import pinn_bench.pinn_bench_exception as pinn_exception


class FieldGrid(ArrayModel):
    """
    Solution values on the nodes of a grid.
    Fields:
    - grid: the grid the solver marched on,
    - field_names: one name per stored field,
    - times: times of the stored slices (all grid times, or a subset when history was not kept),
    - values: array of shape (fields, stored times, *spatial counts); within a slice the last
      spatial axis varies fastest,
    - diverged: set when a solver stopped on a non-finite or exploding value,
    - diverged_step: index of the time step where that happened.
    """
    grid: Grid
    field_names: list[str]
    times: np.ndarray
    values: np.ndarray
    diverged: bool = Field(default=False)
    diverged_step: Optional[int] = Field(default=None)

    def model_post_init(self, __context) -> None:
        expected = (len(self.field_names), len(self.times)) + self.grid.spatial_shape
        if self.values.shape != expected:
            raise pinn_exception.ShapeError(f"FieldGrid values have shape {self.values.shape}, expected {expected}")

    @property
    def n_fields(self) -> int:
        return len(self.field_names)

    def field(self, name: str) -> np.ndarray:
        return self.values[self.field_names.index(name)]

    def select(self, names: list[str]) -> "FieldGrid":
        indices = [self.field_names.index(name) for name in names]
        return self.model_copy(update={"field_names": list(names), "values": self.values[indices]})

    def time_index(self, time: float) -> int:
        return int(np.argmin(np.abs(self.times - time)))

    def at_times(self, times: list[float]) -> "FieldGrid":
        indices = [self.time_index(time) for time in times]
        return self.model_copy(update={"times": self.times[indices], "values": self.values[:, indices]})

    def restrict(self, bounds: list[tuple[float, float]], t_max: float | None = None,
                 stride: int = 1, time_stride: int | None = None) -> "FieldGrid":
        """
        Sub-grid of the nodes inside ``bounds`` (one (lower, upper) pair per spatial axis) and
        with time at most ``t_max``, keeping every ``stride``-th node along each axis.

        :param bounds: inclusive coordinate ranges, one per spatial axis,
        :param t_max: latest stored time kept, None keeps all,
        :param stride: divisor applied to every axis,
        :param time_stride: divisor applied to the stored times, defaults to ``stride``.
        :return: a new FieldGrid on the restricted grid.
        """
        tol = 1e-9
        axes = []
        index = [slice(None), slice(None)]
        for axis, (lower, upper) in zip(self.grid.spatial, bounds):
            coords = axis.coords()
            inside = np.nonzero((coords >= lower - tol * axis.spacing) & (coords <= upper + tol * axis.spacing))[0]
            if inside.size == 0:
                raise pinn_exception.DomainError(f"No node of axis {axis.name} inside [{lower}, {upper}]")
            kept = inside[::stride]
            axes.append(Axis(name=axis.name, origin=float(coords[kept[0]]), spacing=axis.spacing * stride,
                             count=len(kept)))
            index.append(kept)
        time_keep = np.arange(len(self.times))
        if t_max is not None:
            time_keep = time_keep[self.times <= t_max + tol]
        time_keep = time_keep[::stride if time_stride is None else time_stride]
        values = self.values[:, time_keep]
        for axis_index, kept in enumerate(index[2:]):
            values = np.take(values, kept, axis=2 + axis_index)
        grid = Grid(spatial=axes, time=self.grid.time)
        return FieldGrid(grid=grid, field_names=list(self.field_names), times=self.times[time_keep],
                         values=np.ascontiguousarray(values), diverged=self.diverged,
                         diverged_step=self.diverged_step)

    def same_layout(self, other: "FieldGrid") -> bool:
        return (self.values.shape == other.values.shape
                and np.array_equal(self.times, other.times)
                and all(np.allclose(a.coords(), b.coords(), rtol=0.0, atol=1e-9 * a.spacing)
                        for a, b in zip(self.grid.spatial, other.grid.spatial)))
