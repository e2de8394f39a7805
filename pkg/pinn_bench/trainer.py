# coding=utf-8
"""
Composite PINN loss, the training loop and evaluation against the references.

The loss is MSE_0 + MSE_b + MSE_f: squared errors on the initial slice, on the spatial
boundary and of the residuals at the interior points, each a mean over points and summed
over fields. Collocation rows are split into chunks, each recorded on its own tape; the
chunk losses and gradients are summed.
"""
import time
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np
from loguru import logger

import pinn_bench.autodiff_tape as ad
import pinn_bench.fdm_solvers as fdm
import pinn_bench.network_mlp as mlp
import pinn_bench.pinn_bench_exception as pinn_exception
import pinn_bench.pinn_bench_metrics as metrics
from pinn_bench.autodiff_jet import Jet, lift_input
from pinn_bench.autodiff_tape import Node, Tape
from pinn_bench.model.classes.collocation_set import CollocationSet
from pinn_bench.model.classes.domain_box import BoundaryKind, DomainBox, FaceSide
from pinn_bench.model.classes.field_grid import FieldGrid
from pinn_bench.model.classes.grid import Grid
from pinn_bench.model.classes.mlp_config import MlpConfig
from pinn_bench.model.classes.optimizer_config import OptimizerKind
from pinn_bench.model.classes.optimizer_state import AdamState, LbfgsState
from pinn_bench.model.classes.train_config import TrainConfig
from pinn_bench.model.classes.train_report import LossRecord, TrainReport
from pinn_bench.network_mlp import ParamVector
from pinn_bench.optim_adam import adam_step
from pinn_bench.optim_lbfgs import lbfgs_step
from pinn_bench.pinn_bench_consts import Consts
from pinn_bench.problem_registry import PdeProblem, create_problem, derivative_key
from pinn_bench.sampling import sample

PREDICT_CHUNK = 20000

# Snapshot times of references too large to keep every slice of.
REFERENCE_SNAPSHOTS = {
    Consts.heat2d: [0.0, 0.05, 0.1, 0.15, 0.2, 0.25],
    Consts.turing2: [2.0, 4.0, 6.0, 8.0, 10.0],
}


class InputScaling(object):
    """
    Affine map z = (x - center) / half applied to network inputs; the identity when
    normalization is off.
    """
    __slots__ = ("center", "half")

    def __init__(self, center: np.ndarray, half: np.ndarray):
        self.center = np.asarray(center, dtype=np.float64)
        self.half = np.asarray(half, dtype=np.float64)

    @classmethod
    def identity(cls, dim: int) -> "InputScaling":
        return cls(np.zeros(dim), np.ones(dim))

    @classmethod
    def for_domain(cls, domain: DomainBox, normalize: bool = True) -> "InputScaling":
        if not normalize:
            return cls.identity(domain.dim)
        lower, upper = np.array(domain.lower_corner()), np.array(domain.upper_corner())
        return cls(0.5 * (lower + upper), 0.5 * (upper - lower))

    def apply(self, points: np.ndarray) -> np.ndarray:
        return (np.asarray(points, dtype=np.float64) - self.center) / self.half


class LossTerms(object):
    """
    Result of one loss assembly: the weighted total (a tape node, or a float once chunks
    are summed) and the unweighted component values (0 for empty subsets).
    """
    __slots__ = ("total", "initial", "boundary", "residual")

    def __init__(self, total: Node | float, initial: float, boundary: float, residual: float):
        self.total = total
        self.initial = initial
        self.boundary = boundary
        self.residual = residual

    @property
    def value(self) -> float:
        return float(self.total.value) if isinstance(self.total, Node) else float(self.total)

    def record(self, iteration: int) -> LossRecord:
        return LossRecord(iteration=iteration, initial=self.initial, boundary=self.boundary,
                          residual=self.residual, total=self.value)


def _input_jets(tape: Tape, points: np.ndarray, scaling: InputScaling, active: Optional[int], order: int) -> list[Jet]:
    z = scaling.apply(points)
    return [lift_input(tape, z[:, axis], axis == active, order, 1.0 / scaling.half[axis])
            for axis in range(points.shape[1])]


def network_values(network: MlpConfig, params: Node, points: np.ndarray, scaling: InputScaling) -> list[Node]:
    jets = _input_jets(params.tape, points, scaling, None, 0)
    return [jet.value for jet in mlp.forward(network, params, jets)]


def field_derivatives(network: MlpConfig, params: Node, points: np.ndarray, problem: PdeProblem,
                      scaling: InputScaling) -> dict[str, Node]:
    """
    Values and input derivatives of every field at the given points, keyed as in
    ``derivative_key``. One forward pass per differentiated axis, each carrying jets up to
    the order the residual needs along that axis.
    """
    derivatives: dict[str, Node] = {}
    names = problem.domain.axis_names
    for axis_name, order in problem.derivative_orders.items():
        outputs = mlp.forward(network, params, _input_jets(params.tape, points, scaling,
                                                          names.index(axis_name), order))
        for field, jet in zip(problem.field_names, outputs):
            derivatives.setdefault(field, jet.value)
            for k in range(1, order + 1):
                derivatives[derivative_key(field, axis_name, k)] = jet[k]
    return derivatives


def _squared_error(prediction: Node, target: np.ndarray) -> Node:
    error = prediction - target
    return ad.total(error * error)


def assemble_loss(network: MlpConfig, params: Node | ParamVector, colloc: CollocationSet, problem: PdeProblem,
                  weights: Sequence[float] = (1.0, 1.0, 1.0), scaling: Optional[InputScaling] = None,
                  counts: Optional[Sequence[int]] = None) -> LossTerms:
    """
    Builds the composite loss on a tape.

    :param network: network shape,
    :param params: tape variable holding the ParamVector, or a plain array recorded as a constant,
    :param colloc: collocation set of the problem,
    :param problem: the problem,
    :param weights: weights of the initial, boundary and residual terms,
    :param scaling: input normalization, identity when None.
    :param counts: divisors of the initial, boundary and residual means; the sizes of
                   ``colloc`` when None, the sizes of the whole set when ``colloc`` is a chunk.
    :return: LossTerms; the total is the scalar node to differentiate.
    """
    if colloc.field_names != problem.field_names:
        raise pinn_exception.ShapeError(f"Collocation set carries {colloc.field_names}, problem needs "
                                        f"{problem.field_names}")
    if colloc.n_initial + colloc.n_boundary + colloc.n_interior == 0:
        raise pinn_exception.ConfigurationError("Collocation set is empty")
    if not isinstance(params, Node):
        params = Tape().constant(params)
    tape = params.tape
    scaling = scaling or InputScaling.identity(problem.domain.dim)
    counts = counts or (colloc.n_initial, colloc.n_boundary, colloc.n_interior)
    terms: list[Node] = []
    values = [0.0, 0.0, 0.0]

    if colloc.n_initial:
        predictions = network_values(network, params, colloc.initial_points, scaling)
        term = _mean_over_fields(
            [_squared_error(p, colloc.initial_targets[:, j]) for j, p in enumerate(predictions)], counts[0])
        values[0] = float(term.value)
        terms.append(weights[0] * term)

    if colloc.n_boundary:
        sums = []
        dirichlet = colloc.boundary_rows(BoundaryKind.DIRICHLET)
        if dirichlet.size:
            predictions = network_values(network, params, colloc.boundary_points[dirichlet], scaling)
            sums += [_squared_error(p, colloc.boundary_targets[dirichlet, j]) for j, p in enumerate(predictions)]
        for axis in sorted({face.axis for face in colloc.faces if face.kind == BoundaryKind.NEUMANN}):
            face_ids = [i for i, face in enumerate(colloc.faces) if face.kind == BoundaryKind.NEUMANN and face.axis == axis]
            rows = np.nonzero(np.isin(colloc.boundary_face, face_ids))[0]
            if rows.size == 0:
                continue
            signs = np.array([1.0 if colloc.faces[i].side == FaceSide.UPPER else -1.0
                              for i in colloc.boundary_face[rows]])
            outputs = mlp.forward(network, params, _input_jets(tape, colloc.boundary_points[rows], scaling, axis, 1))
            sums += [_squared_error(jet[1] * signs, colloc.boundary_targets[rows, j]) for j, jet in enumerate(outputs)]
        term = _mean_over_fields(sums, counts[1])
        values[1] = float(term.value)
        terms.append(weights[1] * term)

    if colloc.n_interior:
        derivatives = field_derivatives(network, params, colloc.interior_points, problem, scaling)
        sums = [ad.total(residual * residual) for residual in problem.residuals(derivatives)]
        term = _mean_over_fields(sums, counts[2])
        values[2] = float(term.value)
        terms.append(weights[2] * term)

    total = terms[0]
    for term in terms[1:]:
        total = total + term
    return LossTerms(total, *values)


def _mean_over_fields(sums: list[Node], count: int) -> Node:
    total = sums[0]
    for node in sums[1:]:
        total = total + node
    return total / float(count)


def loss_and_gradient(network: MlpConfig, params: ParamVector, colloc: CollocationSet, problem: PdeProblem,
                      weights: Sequence[float], scaling: InputScaling,
                      chunk_size: int = Consts.loss_chunk) -> tuple[LossTerms, np.ndarray]:
    """
    Loss value and parameter gradient. Each chunk of at most ``chunk_size`` rows per block
    gets its own tape, so memory is bounded by the chunk rather than the whole set.

    :return: LossTerms with a float total, and the gradient.
    """
    counts = (colloc.n_initial, colloc.n_boundary, colloc.n_interior)
    grad = np.zeros_like(params, dtype=np.float64)
    total, initial, boundary, residual = 0.0, 0.0, 0.0, 0.0
    for part in colloc.chunks(chunk_size):
        tape = Tape()
        variable = tape.variable(params)
        terms = assemble_loss(network, variable, part, problem, weights, scaling, counts)
        logger.trace("Loss tape holds {} nodes", len(tape))
        grad += ad.param_gradient(terms.total, variable)
        total += terms.value
        initial += terms.initial
        boundary += terms.boundary
        residual += terms.residual
    return LossTerms(total, initial, boundary, residual), grad


def predict_points(network: MlpConfig, params: ParamVector, points: np.ndarray, scaling: InputScaling) -> np.ndarray:
    """
    Network values at points of shape (n, dim), evaluated in chunks.
    """
    points = scaling.apply(points)
    chunks = [mlp.predict(network, params, points[start:start + PREDICT_CHUNK])
              for start in range(0, len(points), PREDICT_CHUNK)]
    return np.concatenate(chunks) if chunks else np.empty((0, network.output_dim))


def _layout_points(grid: Grid, times: np.ndarray) -> np.ndarray:
    meshes = [mesh.reshape(-1) for mesh in grid.spatial_mesh()]
    n_nodes = meshes[0].size
    spatial = np.tile(np.stack(meshes, axis=1), (len(times), 1))
    return np.concatenate([spatial, np.repeat(times, n_nodes)[:, None]], axis=1)


def _values_on_layout(values: np.ndarray, grid: Grid, times: np.ndarray) -> np.ndarray:
    shaped = values.reshape((len(times),) + grid.spatial_shape + (values.shape[1],))
    return np.ascontiguousarray(np.moveaxis(shaped, -1, 0))


def evaluate_on_grid(network: MlpConfig, params: ParamVector, grid: Grid, field_names: Optional[list[str]] = None,
                     times: Optional[np.ndarray] = None, scaling: Optional[InputScaling] = None) -> FieldGrid:
    """
    Network forward at every node of a grid.

    :param network: network shape,
    :param params: the ParamVector,
    :param grid: evaluation grid,
    :param field_names: names of the outputs, ``u``, ``v`` by default,
    :param times: stored times, all grid times by default,
    :param scaling: input normalization used in training.
    :return: FieldGrid in the row-major layout of the grid.
    """
    times = grid.time.coords() if times is None else np.asarray(times, dtype=np.float64)
    field_names = field_names or ["u", "v"][:network.output_dim]
    scaling = scaling or InputScaling.identity(network.input_dim)
    values = predict_points(network, params, _layout_points(grid, times), scaling)
    return FieldGrid(grid=grid, field_names=list(field_names), times=times,
                     values=_values_on_layout(values, grid, times))


def _reference_initial(problem: PdeProblem, grid: Grid) -> Optional[tuple[np.ndarray, np.ndarray]]:
    """
    Turing-1 references start from the network's initial condition sampled on the grid
    nodes; the other problems already share theirs.
    """
    if problem.id != Consts.turing1:
        return None
    x = grid.spatial[0].coords()
    values = problem.initial_values(np.column_stack([x, np.full_like(x, grid.time.origin)]))
    return values[:, 0], values[:, 1]


@lru_cache(maxsize=8)
def reference_grids(problem_id: str, variant: Optional[str], ic_seed: int, eval_scale: int) -> dict[str, FieldGrid]:
    """
    References of a problem restricted to its training domain: the finite-difference run on
    its preset grid and, where one exists, the oracle on the same nodes. Cached per process.
    """
    problem = create_problem(problem_id, variant, seed=ic_seed)
    if problem.problem_id.value == Consts.exp_ode:
        return {}
    snapshots = REFERENCE_SNAPSHOTS.get(problem.id)
    grid = fdm.preset_grid(problem.id, problem.variant)
    solution = fdm.solve_fd(problem.id, problem.params, grid=grid, variant=problem.variant,
                            keep_history=snapshots is None, snapshots=snapshots, seed=ic_seed,
                            initial=_reference_initial(problem, grid))
    bounds = [(interval.lower, interval.upper) for interval in problem.domain.spatial]
    restricted = solution.restrict(bounds, t_max=problem.domain.time.upper, stride=eval_scale,
                                   time_stride=1 if snapshots else eval_scale)
    references = {Consts.reference_fd: restricted}
    if problem.oracle is not None:
        points = _layout_points(restricted.grid, restricted.times)
        references[Consts.reference_oracle] = restricted.model_copy(update={
            "values": _values_on_layout(problem.oracle(points), restricted.grid, restricted.times),
            "diverged": False, "diverged_step": None})
    return references


def evaluate(config: TrainConfig, problem: PdeProblem, params: ParamVector,
             scaling: InputScaling) -> tuple[Optional[FieldGrid], dict[str, FieldGrid], dict[str, float],
                                             dict[str, dict[str, float]]]:
    """
    :return: (network FieldGrid, references, overall RMSE per reference, RMSE per reference and field).
    """
    if problem.id == Consts.exp_ode:
        s = np.linspace(problem.domain.time.lower, problem.domain.time.upper, 101)[:, None]
        error = metrics.rmse_arrays(predict_points(config.network, params, s, scaling), problem.oracle(s))
        return None, {}, {Consts.reference_oracle: error}, {Consts.reference_oracle: {"z": error}}
    references = reference_grids(problem.id, config.variant, config.ic_seed, config.eval_scale)
    if not references:
        return None, {}, {}, {}
    layout = references[Consts.reference_fd]
    predicted = evaluate_on_grid(config.network, params, layout.grid, problem.field_names, layout.times, scaling)
    rmse, per_field = {}, {}
    for name, reference in references.items():
        if reference.diverged:
            logger.warning("Reference {} diverged, RMSE against it is not reported", name)
            continue
        rmse[name] = metrics.rmse(predicted, reference)
        per_field[name] = metrics.rmse_per_field(predicted, reference)
    return predicted, references, rmse, per_field


def _check_network(config: TrainConfig, problem: PdeProblem) -> None:
    if config.network.input_dim != problem.domain.dim or config.network.output_dim != problem.n_fields:
        raise pinn_exception.ConfigurationError(
            f"{problem.id} needs a network with {problem.domain.dim} inputs and {problem.n_fields} outputs, "
            f"got {config.network.input_dim} and {config.network.output_dim}")


def train(config: TrainConfig, evaluate_result: bool = True) -> TrainReport:
    """
    Runs one training loop and evaluates the result.

    The loss history holds the loss before the first step and then every
    ``validation_cadence`` steps. A non-finite loss or gradient stops the loop and flags
    the report diverged; the parameters are those of the last finite step.

    :param config: run configuration,
    :param evaluate_result: compute RMSE against the references.
    :return: the TrainReport.
    """
    problem = create_problem(config.problem, config.variant, seed=config.ic_seed)
    _check_network(config, problem)
    scaling = InputScaling.for_domain(problem.domain, config.normalize_inputs)
    colloc = sample(problem, config.n_data, config.n_interior, config.seed, initial_only=config.initial_only)
    params = mlp.init_params(config.network, config.seed)
    weights = config.loss_weights
    history: list[LossRecord] = []
    diverged_iteration = None
    stalled = False
    logger.info("Training {} with {} parameters, {} for {} iterations", problem.id, params.size,
                config.optimizer.kind.value, config.iterations)

    def objective(candidate: ParamVector) -> tuple[float, np.ndarray]:
        try:
            terms, grad = loss_and_gradient(config.network, candidate, colloc, problem, weights, scaling,
                                            config.chunk_size)
        except (pinn_exception.NumericError, pinn_exception.SingularityError):
            return float("inf"), np.zeros_like(candidate)
        return terms.value, grad

    start = time.perf_counter()
    adam = AdamState.zeros(params.size, beta1=config.optimizer.beta1, beta2=config.optimizer.beta2,
                           lr=config.optimizer.lr, eps=config.optimizer.eps)
    lbfgs = LbfgsState(memory=config.optimizer.memory)
    for iteration in range(config.iterations + 1):
        if config.resample and iteration > 0:
            colloc = sample(problem, config.n_data, config.n_interior, config.seed + iteration,
                            initial_only=config.initial_only)
        try:
            terms, grad = loss_and_gradient(config.network, params, colloc, problem, weights, scaling,
                                            config.chunk_size)
        except (pinn_exception.NumericError, pinn_exception.SingularityError) as error:
            logger.warning("Numeric failure at iteration {}: {}", iteration, error)
            diverged_iteration = iteration
            break
        if not np.isfinite(terms.value) or not np.all(np.isfinite(grad)):
            logger.warning("Loss diverged at iteration {}", iteration)
            diverged_iteration = iteration
            break
        if iteration % config.validation_cadence == 0:
            history.append(terms.record(iteration))
            logger.info("Iteration {}: loss {:.6e}", iteration, terms.value)
        if iteration == config.iterations:
            break
        if config.optimizer.kind == OptimizerKind.ADAM:
            adam, params = adam_step(adam, params, grad)
        else:
            lbfgs = lbfgs.model_copy(update={"loss": terms.value, "grad": grad})
            lbfgs, params = lbfgs_step(lbfgs, params, objective)
            if lbfgs.stalled:
                stalled = True
                break
    wall_seconds = time.perf_counter() - start

    report = TrainReport(problem=problem.id, variant=config.variant, seed=config.seed, iterations=config.iterations,
                         history=history, wall_seconds=wall_seconds, params=params,
                         diverged=diverged_iteration is not None, diverged_iteration=diverged_iteration,
                         stalled=stalled)
    if evaluate_result and diverged_iteration is None:
        predicted, references, rmse, per_field = evaluate(config, problem, params, scaling)
        report = report.model_copy(update={"evaluation": predicted, "references": references, "rmse": rmse,
                                           "rmse_per_field": per_field})
        logger.info("Finished {} seed {} in {:.1f}s, RMSE {}", problem.id, config.seed, wall_seconds, rmse)
    return report


def best_of_seeds(config: TrainConfig, seeds: Sequence[int], reference: str = Consts.reference_oracle) -> TrainReport:
    """
    Trains once per seed and keeps the non-diverged run with the lowest RMSE against
    ``reference``; ties keep the earlier seed.
    """
    best: Optional[TrainReport] = None
    for seed in seeds:
        report = train(config.model_copy(update={"seed": seed}))
        if report.diverged or reference not in report.rmse:
            continue
        if best is None or report.rmse[reference] < best.rmse[reference]:
            best = report
    if best is None:
        raise pinn_exception.NumericError(f"No seed of {list(seeds)} produced an RMSE against {reference}")
    return best
