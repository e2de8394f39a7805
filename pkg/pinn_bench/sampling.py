# coding=utf-8
"""
Seeded generation of collocation sets.

All draws come from numpy's PCG64 generator in a fixed order: boundary faces (lower then
upper face of each spatial axis), then the initial slice, then the interior. Within a block
the coordinate columns are drawn in axis order.
"""
import numpy as np
from loguru import logger

import pinn_bench.pinn_bench_exception as pinn_exception
from pinn_bench.model.classes.collocation_set import CollocationSet
from pinn_bench.problem_registry import PdeProblem


def split_counts(problem: PdeProblem, n_data: int, initial_only: bool = False) -> tuple[int, int]:
    """
    Number of boundary points per face and of initial points. One spatial axis: a quarter
    on each face and half on the initial slice. Two spatial axes: an eighth per face. No
    spatial axis: everything on the initial point.

    :return: (per_face, initial).
    """
    if n_data < 1:
        raise pinn_exception.ConfigurationError("At least one data point is needed")
    faces = len(problem.faces)
    if initial_only or faces == 0:
        return 0, n_data
    divisor = 2 * faces
    if n_data % divisor != 0:
        raise pinn_exception.ConfigurationError(
            f"{n_data} data points cannot be split over {faces} faces and the initial slice, "
            f"use a multiple of {divisor}")
    return n_data // divisor, n_data // 2


def sample(problem: PdeProblem, n_data: int, n_interior: int, seed: int, augment: bool = True,
           initial_only: bool = False) -> CollocationSet:
    """
    Draws a collocation set uniformly at random.

    :param problem: the problem whose domain and data are sampled,
    :param n_data: initial plus boundary points,
    :param n_interior: residual points drawn inside the box,
    :param seed: PCG64 seed,
    :param augment: append every data point to the residual points,
    :param initial_only: put all data points on the initial slice, no boundary data.
    :return: the CollocationSet.
    """
    if n_interior < 0:
        raise pinn_exception.ConfigurationError("Interior point count must not be negative")
    per_face, n_initial = split_counts(problem, n_data, initial_only)
    rng = np.random.Generator(np.random.PCG64(seed))
    domain = problem.domain
    dim = domain.dim
    time = domain.time

    boundary_points, boundary_face = [], []
    faces = [] if per_face == 0 else list(problem.faces)
    for index, face in enumerate(faces):
        block = np.empty((per_face, dim))
        for axis, interval in enumerate(domain.spatial):
            if axis == face.axis:
                block[:, axis] = problem.face_coordinate(face)
            else:
                block[:, axis] = rng.uniform(interval.lower, interval.upper, size=per_face)
        block[:, -1] = rng.uniform(time.lower + problem.boundary_time_offset, time.upper, size=per_face)
        boundary_points.append(block)
        boundary_face.append(np.full(per_face, index))

    initial = np.empty((n_initial, dim))
    for axis, interval in enumerate(domain.spatial):
        initial[:, axis] = rng.uniform(interval.lower, interval.upper, size=n_initial)
    initial[:, -1] = time.lower

    interior = np.empty((n_interior, dim))
    for axis, interval in enumerate(domain.intervals):
        interior[:, axis] = rng.uniform(interval.lower, interval.upper, size=n_interior)

    boundary = np.concatenate(boundary_points) if boundary_points else np.empty((0, dim))
    face_index = np.concatenate(boundary_face) if boundary_face else np.empty(0, dtype=int)
    boundary_targets = np.empty((len(boundary), problem.n_fields))
    for index, face in enumerate(faces):
        rows = face_index == index
        boundary_targets[rows] = problem.boundary_values(face, boundary[rows])
    if augment:
        interior = np.concatenate([interior, boundary, initial])

    logger.debug("Sampled {} initial, {} boundary and {} interior points for {}",
                 n_initial, len(boundary), len(interior), problem.id)
    return CollocationSet(axis_names=list(domain.axis_names), field_names=list(problem.field_names),
                          initial_points=initial, initial_targets=problem.initial_values(initial),
                          boundary_points=boundary, boundary_targets=boundary_targets,
                          boundary_face=face_index, faces=faces, interior_points=interior)
