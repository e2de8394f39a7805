# coding=utf-8
"""
Classes used for representing the outcome of a training run
"""
from typing import Optional

import numpy as np
from pydantic import Field

from pinn_bench.model.classes.base_config import ArrayModel, BaseConfig
from pinn_bench.model.classes.field_grid import FieldGrid


class LossRecord(BaseConfig):
    iteration: int = Field(ge=0)
    initial: float
    boundary: float
    residual: float
    total: float


class TrainReport(ArrayModel):
    """
    Fields:
    - problem, variant, seed: what was trained,
    - history: loss components every validation cadence, iteration 0 first,
    - wall_seconds: training time, evaluation excluded,
    - params: final ParamVector,
    - rmse: overall RMSE per reference name (``oracle``, ``fd``),
    - rmse_per_field: RMSE per reference and field,
    - diverged, diverged_iteration: set when the loss became non-finite,
    - stalled: set when L-BFGS ended on a failed line search,
    - evaluation, references: network and reference values on the evaluation grid, not
      part of the text form.
    """
    problem: str
    variant: Optional[str] = Field(default=None)
    seed: int = Field(default=0)
    iterations: int = Field(default=0)
    history: list[LossRecord] = Field(default_factory=list)
    wall_seconds: float = Field(default=0.0, ge=0.0)
    params: np.ndarray
    rmse: dict[str, float] = Field(default_factory=dict)
    rmse_per_field: dict[str, dict[str, float]] = Field(default_factory=dict)
    diverged: bool = Field(default=False)
    diverged_iteration: Optional[int] = Field(default=None)
    stalled: bool = Field(default=False)
    evaluation: Optional[FieldGrid] = Field(default=None, exclude=True)
    references: dict[str, FieldGrid] = Field(default_factory=dict, exclude=True)

    @property
    def final_loss(self) -> Optional[float]:
        return self.history[-1].total if self.history else None

    def to_text(self) -> str:
        """
        ``key = value`` lines; floats use repr so that reruns are byte-identical.
        """
        lines = [
            f"problem = {self.problem}",
            f"variant = {self.variant if self.variant is not None else ''}",
            f"seed = {self.seed}",
            f"iterations = {self.iterations}",
            f"history_length = {len(self.history)}",
            f"final_loss = {self.final_loss!r}",
            f"param_count = {self.params.size}",
            f"wall_seconds = {self.wall_seconds:.3f}",
            f"diverged = {str(self.diverged).lower()}",
            f"diverged_iteration = {self.diverged_iteration if self.diverged_iteration is not None else ''}",
            f"stalled = {str(self.stalled).lower()}",
        ]
        for reference in sorted(self.rmse):
            lines.append(f"rmse_vs_{reference} = {self.rmse[reference]!r}")
            for field, value in sorted(self.rmse_per_field.get(reference, {}).items()):
                lines.append(f"rmse_vs_{reference}_{field} = {value!r}")
        return "\n".join(lines) + "\n"
