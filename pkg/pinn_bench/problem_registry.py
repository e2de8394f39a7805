# coding=utf-8
"""
Registry of the PDE/ODE problems: domains, residuals, initial and boundary data.
"""
from enum import Enum
from typing import Any, Callable, Optional

import numpy as np
from pydantic import ConfigDict, Field

import pinn_bench.fdm_solvers as fdm
import pinn_bench.oracles as oracles
import pinn_bench.pinn_bench_exception as pinn_exception
import pinn_bench.problem_residuals as residuals
from pinn_bench.model.classes.base_config import ArrayModel, BaseConfig
from pinn_bench.model.classes.domain_box import BoundaryFace, BoundaryKind, DomainBox, FaceSide, Interval
from pinn_bench.model.classes.problem_params import (BurgersParams, FisherParams, HeatParams, KdvParams,
                                                     OdeParams, ToyParams, Turing1Params, Turing2Params)
from pinn_bench.oracles import OracleFn
from pinn_bench.pinn_bench_consts import Consts


class ProblemId(Enum):
    TOY = Consts.toy
    BURGERS = Consts.burgers
    HEAT2D = Consts.heat2d
    KDV = Consts.kdv
    FISHER = Consts.fisher
    TURING1 = Consts.turing1
    TURING2 = Consts.turing2
    EXP_ODE = Consts.exp_ode

    @classmethod
    def parse(cls, value: str) -> "ProblemId":
        value_lower = value.lower()
        for member in cls:
            if member.name.lower() == value_lower or str(member.value).lower() == value_lower:
                return member
        raise ValueError(f"Invalid ProblemId value: {value}")


DESCRIPTIONS = {
    ProblemId.TOY: "first-order linear PDE u_x - 2u_t - u = 0 on [0,2]x[0,1], exact solution 6exp(-3x-2t)",
    ProblemId.BURGERS: "viscous Burgers u_t + u u_x = nu u_xx on [0,1]x[0,0.1], Cole-Hopf series oracle",
    ProblemId.HEAT2D: "2-D heat equation on [-10,10]^2x[0,0.25] from a Gaussian, free-space oracle",
    ProblemId.KDV: "coupled KdV pair on [-250,250]x[0,10], sech soliton oracle",
    ProblemId.FISHER: "Fisher-KPP front u_t = D u_xx + r u(1-u), Heaviside start",
    ProblemId.TURING1: "bacteria/phagocyte reaction-diffusion system in 1-D, zero-flux ends",
    ProblemId.TURING2: "cubic activator-inhibitor Turing system on [-1,1]^2, random start",
    ProblemId.EXP_ODE: "first-order growth ODE z' = alpha z on [0,1], exact solution c exp(alpha s)",
}

VARIANTS = {
    ProblemId.FISHER: ("listing", "stated"),
    ProblemId.TURING1: ("listing", "table", "fd-listing"),
}

# Lattice the Turing-2 random start lives on, shared with the finite-difference run.
TURING2_LATTICE = (-1.0, 0.02, 100)


def derivative_key(field: str, axis: str, order: int) -> str:
    """
    Name of a derivative in the dictionaries handed to residual evaluators: ``u`` for the
    value, ``u_x``, ``u_xx``, ``u_t`` and so on.
    """
    return field if order == 0 else f"{field}_{axis * order}"


class PdeProblem(ArrayModel):
    """
    Immutable problem definition.
    Fields:
    - problem_id, variant, description: identification,
    - domain: space(-space)-time box, network inputs follow ``domain.axis_names``,
    - params: physical parameter set,
    - field_names: one name per unknown field,
    - derivative_orders: highest derivative order the residual needs along each axis,
    - faces: spatial boundary faces carrying data,
    - boundary_time_offset: earliest time at which boundary points are sampled,
    - residual_fn: maps a dictionary of derivatives (see ``derivative_key``) and the params to
      one residual per field,
    - initial_fn: maps points of shape (n, dim) on the initial slice to targets of shape (n, fields),
    - boundary_fn: maps a face and points on it to targets of shape (n, fields); for Neumann faces
      the targets are outward normal derivatives,
    - oracle: closed-form solution when one exists.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    problem_id: ProblemId
    variant: Optional[str] = Field(default=None)
    description: str = Field(default="")
    domain: DomainBox
    params: BaseConfig
    field_names: list[str]
    derivative_orders: dict[str, int]
    faces: list[BoundaryFace] = Field(default_factory=list)
    boundary_time_offset: float = Field(default=0.0, ge=0.0)
    residual_fn: Callable[[dict[str, Any], Any], list]
    initial_fn: Callable[[np.ndarray], np.ndarray]
    boundary_fn: Optional[Callable[[BoundaryFace, np.ndarray], np.ndarray]] = Field(default=None)
    oracle: Optional[OracleFn] = Field(default=None)

    @property
    def n_fields(self) -> int:
        return len(self.field_names)

    @property
    def id(self) -> str:
        return self.problem_id.value

    def derivative_keys(self) -> list[str]:
        keys = []
        for field in self.field_names:
            keys.append(field)
            for axis, order in self.derivative_orders.items():
                keys.extend(derivative_key(field, axis, k) for k in range(1, order + 1))
        return keys

    def residuals(self, derivatives: dict[str, Any]) -> list:
        missing = [key for key in self.derivative_keys() if key not in derivatives]
        if missing:
            raise pinn_exception.ShapeError(f"Residual of {self.id} needs {missing}")
        return list(self.residual_fn(derivatives, self.params))

    def initial_values(self, points: np.ndarray) -> np.ndarray:
        return np.asarray(self.initial_fn(np.atleast_2d(points)), dtype=np.float64)

    def boundary_values(self, face: BoundaryFace, points: np.ndarray) -> np.ndarray:
        if self.boundary_fn is None:
            return np.zeros((len(np.atleast_2d(points)), self.n_fields))
        return np.asarray(self.boundary_fn(face, np.atleast_2d(points)), dtype=np.float64)

    def face_coordinate(self, face: BoundaryFace) -> float:
        interval = self.domain.spatial[face.axis]
        return interval.lower if face.side == FaceSide.LOWER else interval.upper


def ic_bc_values(problem: PdeProblem, point) -> np.ndarray:
    """
    Target values at a point of the initial slice or of a declared boundary face. The initial
    slice wins at corners. On Neumann faces the target is the outward normal derivative.

    :param problem: the problem,
    :param point: coordinates ordered as ``problem.domain.axis_names``.
    :return: one target per field.
    """
    point = np.asarray(point, dtype=np.float64).reshape(-1)
    if point.size != problem.domain.dim:
        raise pinn_exception.ShapeError(f"{problem.id} points have {problem.domain.dim} coordinates")
    intervals = problem.domain.intervals
    for value, interval in zip(point, intervals):
        if value < interval.lower - 1e-12 * interval.length or value > interval.upper + 1e-12 * interval.length:
            raise pinn_exception.DomainError(f"Point {point.tolist()} lies outside the domain of {problem.id}")
    if abs(point[-1] - problem.domain.time.lower) <= 1e-12 * problem.domain.time.length:
        return problem.initial_values(point[None, :])[0]
    for face in problem.faces:
        interval = problem.domain.spatial[face.axis]
        if abs(point[face.axis] - problem.face_coordinate(face)) <= 1e-12 * interval.length:
            return problem.boundary_values(face, point[None, :])[0]
    raise pinn_exception.DomainError(f"Point {point.tolist()} is neither on the initial slice nor on a boundary")


def _faces(spatial_dims: int, kind: BoundaryKind) -> list[BoundaryFace]:
    return [BoundaryFace(axis=axis, side=side, kind=kind)
            for axis in range(spatial_dims) for side in (FaceSide.LOWER, FaceSide.UPPER)]


def _toy(variant: Optional[str], params: Optional[ToyParams]) -> PdeProblem:
    params = params or ToyParams()
    oracle = oracles.oracle_for(Consts.toy, params)
    return PdeProblem(
        problem_id=ProblemId.TOY, variant=variant, description=DESCRIPTIONS[ProblemId.TOY],
        domain=DomainBox(spatial=[Interval(lower=0.0, upper=2.0)], time=Interval(lower=0.0, upper=1.0)),
        params=params, field_names=["u"], derivative_orders={"x": 1, "t": 1},
        faces=_faces(1, BoundaryKind.DIRICHLET),
        residual_fn=lambda d, p: [residuals.residual_toy(d["u"], d["u_x"], d["u_t"], p.a, p.b, p.c)],
        initial_fn=oracle, boundary_fn=lambda face, points: oracle(points), oracle=oracle)


def _burgers(variant: Optional[str], params: Optional[BurgersParams]) -> PdeProblem:
    params = params or BurgersParams()
    return PdeProblem(
        problem_id=ProblemId.BURGERS, variant=variant, description=DESCRIPTIONS[ProblemId.BURGERS],
        domain=DomainBox(spatial=[Interval(lower=0.0, upper=1.0)], time=Interval(lower=0.0, upper=0.1)),
        params=params, field_names=["u"], derivative_orders={"x": 2, "t": 1},
        faces=_faces(1, BoundaryKind.DIRICHLET), boundary_time_offset=1e-6,
        residual_fn=lambda d, p: [residuals.residual_burgers(d["u"], d["u_x"], d["u_t"], d["u_xx"], p.nu)],
        initial_fn=lambda points: np.sin(np.pi * points[:, :1]),
        oracle=oracles.oracle_for(Consts.burgers, params))


def _heat2d(variant: Optional[str], params: Optional[HeatParams]) -> PdeProblem:
    params = params or HeatParams()
    oracle = oracles.oracle_for(Consts.heat2d, params)
    return PdeProblem(
        problem_id=ProblemId.HEAT2D, variant=variant, description=DESCRIPTIONS[ProblemId.HEAT2D],
        domain=DomainBox(spatial=[Interval(lower=-10.0, upper=10.0), Interval(lower=-10.0, upper=10.0)],
                         time=Interval(lower=0.0, upper=0.25), axis_names=["x", "y", "t"]),
        params=params, field_names=["u"], derivative_orders={"x": 2, "y": 2, "t": 1},
        faces=_faces(2, BoundaryKind.DIRICHLET),
        residual_fn=lambda d, p: [residuals.residual_heat2d(d["u_t"], d["u_xx"], d["u_yy"], p.alpha)],
        initial_fn=oracle, boundary_fn=lambda face, points: oracle(points), oracle=oracle)


def _kdv(variant: Optional[str], params: Optional[KdvParams]) -> PdeProblem:
    params = params or KdvParams()
    oracle = oracles.oracle_for(Consts.kdv, params)
    return PdeProblem(
        problem_id=ProblemId.KDV, variant=variant, description=DESCRIPTIONS[ProblemId.KDV],
        domain=DomainBox(spatial=[Interval(lower=-250.0, upper=250.0)], time=Interval(lower=0.0, upper=10.0)),
        params=params, field_names=["u", "v"], derivative_orders={"x": 3, "t": 1},
        faces=_faces(1, BoundaryKind.DIRICHLET), boundary_time_offset=1e-3,
        residual_fn=lambda d, p: list(residuals.residual_kdv(d["u"], d["v"], d["u_x"], d["v_x"], d["u_t"],
                                                             d["v_t"], d["u_xxx"], d["v_xxx"], p)),
        initial_fn=oracle, boundary_fn=lambda face, points: oracle(points), oracle=oracle)


def _fisher(variant: Optional[str], params: Optional[FisherParams]) -> PdeProblem:
    params = params or FisherParams()
    if variant == "stated":
        domain = DomainBox(spatial=[Interval(lower=-50.0, upper=50.0)], time=Interval(lower=0.0, upper=10.0))
    else:
        domain = DomainBox(spatial=[Interval(lower=-10.0, upper=10.0)], time=Interval(lower=0.0, upper=1.0))

    def boundary(face: BoundaryFace, points: np.ndarray) -> np.ndarray:
        return np.full((len(points), 1), 1.0 if face.side == FaceSide.LOWER else 0.0)

    return PdeProblem(
        problem_id=ProblemId.FISHER, variant=variant or "listing", description=DESCRIPTIONS[ProblemId.FISHER],
        domain=domain, params=params, field_names=["u"], derivative_orders={"x": 2, "t": 1},
        faces=_faces(1, BoundaryKind.DIRICHLET),
        residual_fn=lambda d, p: [residuals.residual_fisher(d["u"], d["u_t"], d["u_xx"], p.diffusivity,
                                                            p.growth_rate)],
        initial_fn=lambda points: fdm.fisher_initial(points[:, :1]), boundary_fn=boundary)


def turing1_params(variant: Optional[str]) -> Turing1Params:
    match variant:
        case None | "listing":
            return Turing1Params.listing_pinn()
        case "table":
            return Turing1Params.table()
        case "fd-listing":
            return Turing1Params.listing_fd()
        case _:
            raise pinn_exception.ConfigurationError(f"Unknown {Consts.turing1} variant {variant}")


def _turing1(variant: Optional[str], params: Optional[Turing1Params]) -> PdeProblem:
    params = params or turing1_params(variant)
    lower, upper = (0.0, 3000.0) if variant == "fd-listing" else (0.0, 3e-3)
    center, width = 0.5 * (lower + upper), (upper - lower) / 30.0

    def initial(points: np.ndarray) -> np.ndarray:
        bacteria = 0.01 * params.b_i * np.exp(-((points[:, 0] - center) / width) ** 2)
        return np.stack([bacteria, np.zeros(len(points))], axis=1)

    return PdeProblem(
        problem_id=ProblemId.TURING1, variant=variant or "listing", description=DESCRIPTIONS[ProblemId.TURING1],
        domain=DomainBox(spatial=[Interval(lower=lower, upper=upper)],
                         time=Interval(lower=0.0, upper=200000.0 if variant == "fd-listing" else 1500.0)),
        params=params, field_names=["b", "c"], derivative_orders={"x": 2, "t": 1},
        faces=_faces(1, BoundaryKind.NEUMANN),
        residual_fn=lambda d, p: list(residuals.residual_turing1(d["b"], d["c"], d["b_t"], d["c_t"], d["b_xx"],
                                                                 d["c_xx"], p)),
        initial_fn=initial)


def turing2_start(seed: int) -> np.ndarray:
    count = TURING2_LATTICE[2]
    return fdm.turing2_initial_field(seed, (count, count))


def _turing2(variant: Optional[str], params: Optional[Turing2Params], seed: int) -> PdeProblem:
    params = params or Turing2Params()
    start = turing2_start(seed)
    origin, spacing, count = TURING2_LATTICE

    def initial(points: np.ndarray) -> np.ndarray:
        ix = np.clip(np.rint((points[:, 0] - origin) / spacing), 0, count - 1).astype(int)
        iy = np.clip(np.rint((points[:, 1] - origin) / spacing), 0, count - 1).astype(int)
        return np.stack([start[0][ix, iy], start[1][ix, iy]], axis=1)

    return PdeProblem(
        problem_id=ProblemId.TURING2, variant=variant, description=DESCRIPTIONS[ProblemId.TURING2],
        domain=DomainBox(spatial=[Interval(lower=-1.0, upper=1.0), Interval(lower=-1.0, upper=1.0)],
                         time=Interval(lower=0.0, upper=10.0), axis_names=["x", "y", "t"]),
        params=params, field_names=["u", "v"], derivative_orders={"x": 2, "y": 2, "t": 1},
        faces=_faces(2, BoundaryKind.NEUMANN), boundary_time_offset=1e-4,
        residual_fn=lambda d, p: list(residuals.residual_turing2(d["u"], d["v"], d["u_t"], d["v_t"],
                                                                 d["u_xx"] + d["u_yy"], d["v_xx"] + d["v_yy"], p)),
        initial_fn=initial)


def _exp_ode(variant: Optional[str], params: Optional[OdeParams]) -> PdeProblem:
    params = params or OdeParams()
    return PdeProblem(
        problem_id=ProblemId.EXP_ODE, variant=variant, description=DESCRIPTIONS[ProblemId.EXP_ODE],
        domain=DomainBox(spatial=[], time=Interval(lower=0.0, upper=1.0), axis_names=["s"]),
        params=params, field_names=["z"], derivative_orders={"s": 1},
        residual_fn=lambda d, p: [residuals.residual_exp_ode(d["z"], d["z_s"], p.alpha)],
        initial_fn=lambda points: np.full((len(points), 1), params.c),
        oracle=oracles.oracle_for(Consts.exp_ode, params))


def create_problem(problem_id: str | ProblemId, variant: Optional[str] = None,
                   params: Optional[BaseConfig] = None, seed: int = 0) -> PdeProblem:
    """
    Factory function building a problem definition from its identifier.

    :param problem_id: one of the eight identifiers,
    :param variant: preset variant (Fisher: listing or stated; Turing-1: listing, table or fd-listing),
    :param params: parameter set overriding the preset one,
    :param seed: seed of the Turing-2 random start.
    :return: the PdeProblem.
    """
    if isinstance(problem_id, str):
        try:
            problem_id = ProblemId.parse(problem_id)
        except ValueError:
            raise pinn_exception.ConfigurationError(f"Unknown problem id: {problem_id}")
    if variant is not None and variant not in VARIANTS.get(problem_id, ()):
        raise pinn_exception.ConfigurationError(f"Problem {problem_id.value} has no variant {variant}")

    match problem_id:
        case ProblemId.TOY:
            problem = _toy(variant, params)
        case ProblemId.BURGERS:
            problem = _burgers(variant, params)
        case ProblemId.HEAT2D:
            problem = _heat2d(variant, params)
        case ProblemId.KDV:
            problem = _kdv(variant, params)
        case ProblemId.FISHER:
            problem = _fisher(variant, params)
        case ProblemId.TURING1:
            problem = _turing1(variant, params)
        case ProblemId.TURING2:
            problem = _turing2(variant, params, seed)
        case _:
            problem = _exp_ode(variant, params)

    return problem


def list_problems() -> list[tuple[str, str]]:
    return [(member.value, DESCRIPTIONS[member]) for member in ProblemId]
