# coding=utf-8
"""
Class used for representing a sampled collocation set
"""
import numpy as np
from pydantic import Field

from pinn_bench.model.classes.base_config import ArrayModel
from pinn_bench.model.classes.domain_box import BoundaryFace, BoundaryKind


class CollocationSet(ArrayModel):
    """
    Points are rows ordered as ``axis_names``; targets have one column per field.
    Fields:
    - initial_points, initial_targets: data on the initial slice,
    - boundary_points, boundary_targets: data on the spatial faces,
    - boundary_face: index into ``faces`` for every boundary row,
    - faces: the faces the boundary rows were drawn from,
    - interior_points: residual points, data points included when augmented.
    """
    axis_names: list[str]
    field_names: list[str]
    initial_points: np.ndarray
    initial_targets: np.ndarray
    boundary_points: np.ndarray
    boundary_targets: np.ndarray
    boundary_face: np.ndarray
    faces: list[BoundaryFace] = Field(default_factory=list)
    interior_points: np.ndarray

    @property
    def n_initial(self) -> int:
        return len(self.initial_points)

    @property
    def n_boundary(self) -> int:
        return len(self.boundary_points)

    @property
    def n_interior(self) -> int:
        return len(self.interior_points)

    def boundary_rows(self, kind: BoundaryKind) -> np.ndarray:
        """
        :return: indices of the boundary rows lying on faces of the given kind.
        """
        wanted = [index for index, face in enumerate(self.faces) if face.kind == kind]
        return np.nonzero(np.isin(self.boundary_face, wanted))[0]

    def chunks(self, size: int) -> list["CollocationSet"]:
        """
        Splits every block into consecutive slices of at most ``size`` rows. Chunk k holds
        the k-th slice of each block, so some chunks may have empty blocks.
        """
        longest = max(self.n_initial, self.n_boundary, self.n_interior)
        if longest <= size:
            return [self]
        parts = []
        for start in range(0, longest, size):
            rows = slice(start, start + size)
            parts.append(self.model_copy(update={
                "initial_points": self.initial_points[rows], "initial_targets": self.initial_targets[rows],
                "boundary_points": self.boundary_points[rows], "boundary_targets": self.boundary_targets[rows],
                "boundary_face": self.boundary_face[rows], "interior_points": self.interior_points[rows]}))
        return parts
