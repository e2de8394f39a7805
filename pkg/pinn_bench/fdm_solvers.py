# coding=utf-8
"""
Finite-difference reference solvers on regular grids.

Explicit schemes check their stability bound before marching and refuse to run when it
is violated. Every solver returns a FieldGrid; the full time history is stored only when
``keep_history`` is set, otherwise the requested snapshot times plus the last two slices.
"""
from typing import Callable, Iterable, Optional

import numpy as np
from loguru import logger

import pinn_bench.oracles as oracles
import pinn_bench.pinn_bench_exception as pinn_exception
from pinn_bench.model.classes.field_grid import FieldGrid
from pinn_bench.model.classes.grid import Axis, Grid
from pinn_bench.model.classes.problem_params import (BurgersParams, FisherParams, HeatParams, KdvParams,
                                                     ToyParams, Turing1Params, Turing2Params)
from pinn_bench.pinn_bench_consts import Consts

TOY_SCHEMES = ("upwind1", "upwind3")


class _SliceRecorder(object):
    """
    Collects time slices while a solver marches.
    """

    def __init__(self, grid: Grid, field_names: list[str], keep_history: bool,
                 snapshots: Optional[Iterable[float]]):
        self.grid = grid
        self.field_names = field_names
        self.keep_history = keep_history
        self.times = grid.time.coords()
        self.wanted = set()
        for time in snapshots or []:
            self.wanted.add(int(np.argmin(np.abs(self.times - time))))
        self.slices: dict[int, np.ndarray] = {}
        self.recent: list[tuple[int, np.ndarray]] = []

    def record(self, step: int, *fields: np.ndarray) -> None:
        state = np.stack([np.array(field, dtype=np.float64, copy=True) for field in fields])
        if self.keep_history or step in self.wanted:
            self.slices[step] = state
        self.recent = (self.recent + [(step, state)])[-2:]

    def finish(self, diverged_step: Optional[int] = None) -> FieldGrid:
        slices = dict(self.slices)
        slices.update(dict(self.recent))
        steps = sorted(slices)
        values = np.stack([slices[step] for step in steps], axis=1)
        return FieldGrid(grid=self.grid, field_names=list(self.field_names), times=self.times[steps],
                         values=values, diverged=diverged_step is not None, diverged_step=diverged_step)


def _exploded(*fields: np.ndarray) -> bool:
    return any(not np.all(np.isfinite(field)) or np.max(np.abs(field)) > Consts.divergence_threshold
               for field in fields)


def _check_dims(grid: Grid, spatial_dims: int, problem: str) -> None:
    if len(grid.spatial) != spatial_dims:
        raise pinn_exception.ShapeError(f"{problem} needs {spatial_dims} spatial axes, grid has {len(grid.spatial)}")


def _refuse(number: float, bound: float, suggested: float, problem: str) -> None:
    if number > bound:
        raise pinn_exception.StabilityError(
            f"{problem}: stability number {number:.6g} exceeds {bound}, use a time step <= {suggested:.6g}",
            suggested_step=suggested)


def solve_toy_fd(grid: Grid, params: ToyParams = ToyParams(), scheme: str = "upwind3",
                 keep_history: bool = False, snapshots: Optional[Iterable[float]] = None) -> FieldGrid:
    """
    Marches u_t = s u_x + k u, the rearranged toy equation with s = -a/b and k = -c/b.
    Boundary columns carry the exact solution. ``upwind1`` is the one-sided first-order
    scheme with forward Euler; ``upwind3`` is a third-order upwind-biased stencil with a
    three-stage strong-stability-preserving Runge-Kutta march, falling back to a centered
    difference on the node next to the downwind end.

    :param grid: one spatial axis,
    :param params: equation coefficients,
    :param scheme: ``upwind1`` or ``upwind3``.
    :return: FieldGrid with the field ``u``.
    """
    _check_dims(grid, 1, Consts.toy)
    if scheme not in TOY_SCHEMES:
        raise pinn_exception.ConfigurationError(f"Unknown toy scheme {scheme}, expected one of {TOY_SCHEMES}")
    x = grid.spatial[0].coords()
    dx, dt = grid.spatial[0].spacing, grid.dt
    speed = -params.a / params.b
    rate = -params.c / params.b
    if speed != 0.0:
        _refuse(abs(speed) * dt / dx, 0.5, 0.5 * dx / abs(speed), Consts.toy)

    def exact(t: float) -> np.ndarray:
        return oracles.toy_exact(x, t, params)

    def space_operator(u: np.ndarray) -> np.ndarray:
        du = np.zeros_like(u)
        if scheme == "upwind1":
            if speed > 0.0:
                du[1:-1] = (u[2:] - u[1:-1]) / dx
            else:
                du[1:-1] = (u[1:-1] - u[:-2]) / dx
        elif speed > 0.0:
            du[1:-2] = (-2.0 * u[:-3] - 3.0 * u[1:-2] + 6.0 * u[2:-1] - u[3:]) / (6.0 * dx)
            du[-2] = (u[-1] - u[-3]) / (2.0 * dx)
        else:
            du[2:-1] = (u[:-3] - 6.0 * u[1:-2] + 3.0 * u[2:-1] + 2.0 * u[3:]) / (6.0 * dx)
            du[1] = (u[2] - u[0]) / (2.0 * dx)
        result = speed * du + rate * u
        result[0] = result[-1] = 0.0
        return result

    def pin(u: np.ndarray, t: float) -> np.ndarray:
        u[0] = oracles.toy_exact(x[0], t, params)
        u[-1] = oracles.toy_exact(x[-1], t, params)
        return u

    recorder = _SliceRecorder(grid, ["u"], keep_history, snapshots)
    times = grid.time.coords()
    u = exact(times[0])
    recorder.record(0, u)
    for step in range(1, len(times)):
        t = times[step - 1]
        if scheme == "upwind1":
            u = pin(u + dt * space_operator(u), t + dt)
        else:
            stage1 = pin(u + dt * space_operator(u), t + dt)
            stage2 = pin(0.75 * u + 0.25 * (stage1 + dt * space_operator(stage1)), t + 0.5 * dt)
            u = pin(u / 3.0 + 2.0 / 3.0 * (stage2 + dt * space_operator(stage2)), t + dt)
        recorder.record(step, u)
    logger.info("Toy FD ({}) done on {} x {} nodes", scheme, len(x), len(times))
    return recorder.finish()


def burgers_theta0(x: np.ndarray, nu: float) -> np.ndarray:
    return np.exp((np.cos(np.pi * x) - 1.0) / (2.0 * np.pi * nu))


def solve_burgers_fd(grid: Grid, params: BurgersParams = BurgersParams(), keep_theta: bool = False,
                     keep_history: bool = False, snapshots: Optional[Iterable[float]] = None) -> FieldGrid:
    """
    Solves the heat equation for the Cole-Hopf potential theta with reflective end rows on
    the first and last grid node, then maps back u = -2 nu theta_x / theta with central
    differences. End values of u are zero.

    :param keep_theta: also store ``theta`` as a second field.
    """
    _check_dims(grid, 1, Consts.burgers)
    x = grid.spatial[0].coords()
    dx, dt = grid.spatial[0].spacing, grid.dt
    r = params.nu * dt / dx ** 2
    _refuse(r, 0.5, 0.5 * dx ** 2 / params.nu, Consts.burgers)

    def transform(theta: np.ndarray) -> np.ndarray:
        if np.any(theta <= 0.0):
            raise pinn_exception.TransformSingularityError("theta is not positive, the Cole-Hopf map is undefined")
        u = np.zeros_like(theta)
        u[1:-1] = -(params.nu / dx) * (theta[2:] - theta[:-2]) / theta[1:-1]
        return u

    names = ["u", "theta"] if keep_theta else ["u"]
    recorder = _SliceRecorder(grid, names, keep_history, snapshots)
    theta = burgers_theta0(x, params.nu)
    fields = (transform(theta), theta) if keep_theta else (transform(theta),)
    recorder.record(0, *fields)
    for step in range(1, grid.time.count):
        new = np.empty_like(theta)
        new[1:-1] = r * theta[:-2] + (1.0 - 2.0 * r) * theta[1:-1] + r * theta[2:]
        new[0] = (1.0 - 2.0 * r) * theta[0] + 2.0 * r * theta[1]
        new[-1] = (1.0 - 2.0 * r) * theta[-1] + 2.0 * r * theta[-2]
        theta = new
        fields = (transform(theta), theta) if keep_theta else (transform(theta),)
        recorder.record(step, *fields)
    logger.info("Burgers FD done with r={} on {} x {} nodes", r, len(x), grid.time.count)
    return recorder.finish()


def solve_heat2d_fd(grid: Grid, params: HeatParams = HeatParams(), initial: Optional[np.ndarray] = None,
                    boundary: Optional[Callable] = None, keep_history: bool = False,
                    snapshots: Optional[Iterable[float]] = None) -> FieldGrid:
    """
    Explicit five-point scheme. The boundary ring is overwritten each step by
    ``boundary(x, y, t)``, by default the free-space solution.

    :param initial: initial field, defaults to the Gaussian exp(-x^2 - y^2).
    """
    _check_dims(grid, 2, Consts.heat2d)
    dx, dy = (axis.spacing for axis in grid.spatial)
    dt = grid.dt
    number = params.alpha * dt * (1.0 / dx ** 2 + 1.0 / dy ** 2)
    _refuse(number, 0.5, 0.5 / (params.alpha * (1.0 / dx ** 2 + 1.0 / dy ** 2)), Consts.heat2d)
    if boundary is None:
        def boundary(x, y, t):
            return oracles.heat2d_exact(x, y, t, params)

    xs, ys = grid.spatial_mesh()
    times = grid.time.coords()
    u = boundary(xs, ys, times[0]) if initial is None else np.array(initial, dtype=np.float64)
    if u.shape != grid.spatial_shape:
        raise pinn_exception.ShapeError(f"Initial field has shape {u.shape}, grid needs {grid.spatial_shape}")
    ring = np.ones(grid.spatial_shape, dtype=bool)
    ring[1:-1, 1:-1] = False

    recorder = _SliceRecorder(grid, ["u"], keep_history, snapshots)
    recorder.record(0, u)
    for step in range(1, len(times)):
        new = u.copy()
        new[1:-1, 1:-1] = u[1:-1, 1:-1] + params.alpha * dt * (
            (u[2:, 1:-1] - 2.0 * u[1:-1, 1:-1] + u[:-2, 1:-1]) / dx ** 2
            + (u[1:-1, 2:] - 2.0 * u[1:-1, 1:-1] + u[1:-1, :-2]) / dy ** 2)
        new[ring] = np.broadcast_to(boundary(xs, ys, times[step]), grid.spatial_shape)[ring]
        u = new
        recorder.record(step, u)
    logger.info("Heat FD done with stability number {} on grid {}", number, grid.spatial_shape)
    return recorder.finish()


def solve_kdv_fd(grid: Grid, params: KdvParams = KdvParams(), initial: Optional[tuple] = None,
                 keep_history: bool = False, snapshots: Optional[Iterable[float]] = None) -> FieldGrid:
    """
    Explicit one-sided scheme for the coupled KdV pair. Nodes 2..n-4 are updated from the
    previous slice, the remaining nodes are held at zero. The march stops at the first
    slice with a non-finite value or a magnitude above the divergence threshold and the
    result is flagged diverged.

    :param initial: (u0, v0) arrays, defaults to the soliton pair at the first grid time.
    """
    _check_dims(grid, 1, Consts.kdv)
    x = grid.spatial[0].coords()
    dx, dt = grid.spatial[0].spacing, grid.dt
    alpha, beta = dt / dx, dt / dx ** 3
    a, b = params.a, params.b
    times = grid.time.coords()
    if initial is None:
        u, v = oracles.kdv_exact(x, times[0], params)
    else:
        u, v = (np.array(field, dtype=np.float64) for field in initial)
    n = len(x)
    inner = slice(2, n - 3)

    recorder = _SliceRecorder(grid, ["u", "v"], keep_history, snapshots)
    recorder.record(0, u, v)
    diverged_step = None
    for step in range(1, len(times)):
        new_u, new_v = np.zeros(n), np.zeros(n)
        i = np.arange(2, n - 3)
        new_u[inner] = (u[i] + 6.0 * a * alpha * u[i] * (u[i] - u[i - 1])
                        - 2.0 * b * alpha * v[i] * (v[i] - v[i - 1])
                        - 0.5 * a * beta * (u[i + 2] - 2.0 * u[i + 1] + 2.0 * u[i - 1] - u[i - 2]))
        new_v[inner] = (v[i] - 3.0 * alpha * u[i] * (v[i] - v[i - 1])
                        + 0.5 * beta * (v[i + 2] - 2.0 * v[i + 1] + 2.0 * v[i - 1] - v[i - 2]))
        if _exploded(new_u, new_v):
            logger.warning("KdV FD diverged at step {}", step)
            diverged_step = step
            break
        u, v = new_u, new_v
        recorder.record(step, u, v)
    return recorder.finish(diverged_step)


def fisher_initial(x: np.ndarray) -> np.ndarray:
    """
    Heaviside front: 1 left of the origin, 0 from the origin on.
    """
    return np.heaviside(-np.asarray(x, dtype=np.float64), 0.0)


def solve_fisher_fd(grid: Grid, params: FisherParams = FisherParams(), initial: Optional[np.ndarray] = None,
                    left: float = 1.0, right: float = 0.0, keep_history: bool = False,
                    snapshots: Optional[Iterable[float]] = None) -> FieldGrid:
    """
    Explicit scheme u += D dt/dx^2 (second difference) + r dt u (1 - u) on every interior
    node, with both end values pinned.
    """
    _check_dims(grid, 1, Consts.fisher)
    x = grid.spatial[0].coords()
    dx, dt = grid.spatial[0].spacing, grid.dt
    number = params.diffusivity * dt / dx ** 2
    _refuse(number, 0.5, 0.5 * dx ** 2 / params.diffusivity, Consts.fisher)
    u = fisher_initial(x) if initial is None else np.array(initial, dtype=np.float64)
    u[0], u[-1] = left, right

    recorder = _SliceRecorder(grid, ["u"], keep_history, snapshots)
    recorder.record(0, u)
    diverged_step = None
    for step in range(1, grid.time.count):
        new = u.copy()
        new[1:-1] = (u[1:-1] + number * (u[2:] - 2.0 * u[1:-1] + u[:-2])
                     + params.growth_rate * dt * u[1:-1] * (1.0 - u[1:-1]))
        if _exploded(new):
            logger.warning("Fisher FD diverged at step {}", step)
            diverged_step = step
            break
        u = new
        recorder.record(step, u)
    return recorder.finish(diverged_step)


def thomas_solve(lower: np.ndarray, diagonal: np.ndarray, upper: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """
    Solves a tridiagonal system in linear time.

    :param lower: sub-diagonal, length n-1,
    :param diagonal: main diagonal, length n,
    :param upper: super-diagonal, length n-1,
    :param rhs: right-hand side, length n.
    :return: the solution vector.
    """
    n = len(diagonal)
    if len(lower) != n - 1 or len(upper) != n - 1 or len(rhs) != n:
        raise pinn_exception.ShapeError("Tridiagonal bands do not match the system size")
    c_prime = np.zeros(max(n - 1, 0))
    d_prime = np.zeros(n)
    pivot = diagonal[0]
    if pivot == 0.0:
        raise pinn_exception.SingularityError("Zero pivot in tridiagonal solve")
    if n > 1:
        c_prime[0] = upper[0] / pivot
    d_prime[0] = rhs[0] / pivot
    for i in range(1, n):
        pivot = diagonal[i] - lower[i - 1] * c_prime[i - 1]
        if pivot == 0.0:
            raise pinn_exception.SingularityError(f"Zero pivot in tridiagonal solve at row {i}")
        if i < n - 1:
            c_prime[i] = upper[i] / pivot
        d_prime[i] = (rhs[i] - lower[i - 1] * d_prime[i - 1]) / pivot
    solution = np.zeros(n)
    solution[-1] = d_prime[-1]
    for i in range(n - 2, -1, -1):
        solution[i] = d_prime[i] - c_prime[i] * solution[i + 1]
    return solution


def turing1_pulse(x: np.ndarray, params: Turing1Params, lower: float, upper: float) -> np.ndarray:
    """
    Bacteria seed of height 0.01 b_i on the central 1/300 of [lower, upper].
    """
    center, half_width = 0.5 * (lower + upper), (upper - lower) / 600.0
    return 0.01 * params.b_i * ((x > center - half_width) & (x < center + half_width))


def solve_turing1_fd(grid: Grid, params: Turing1Params = Turing1Params.listing_fd(),
                     initial: Optional[tuple] = None, keep_history: bool = False,
                     snapshots: Optional[Iterable[float]] = None) -> FieldGrid:
    """
    Semi-implicit scheme: diffusion (and phagocyte death) implicit with zero-flux ends,
    reaction terms explicit from the previous step. Each step solves the bacteria system
    first and uses the new bacteria density as the phagocyte source.

    :param initial: (b0, c0) arrays, defaults to a central pulse and no phagocytes.
    """
    _check_dims(grid, 1, Consts.turing1)
    x = grid.spatial[0].coords()
    dx, dt = grid.spatial[0].spacing, grid.dt
    n = len(x)
    if initial is None:
        b, c = turing1_pulse(x, params, x[0], x[-1]), np.zeros(n)
    else:
        b, c = (np.array(field, dtype=np.float64) for field in initial)
    kb, kc = dt / dx ** 2 * params.d_b, dt / dx ** 2 * params.d_c

    b_diagonal = np.full(n, 1.0 + 2.0 * kb)
    b_diagonal[[0, -1]] = 1.0 + kb
    c_diagonal = np.full(n, 1.0 + 2.0 * kc + dt * params.r_c)
    c_diagonal[[0, -1]] = 1.0 + kc + dt * params.r_c
    b_band, c_band = np.full(n - 1, -kb), np.full(n - 1, -kc)

    recorder = _SliceRecorder(grid, ["b", "c"], keep_history, snapshots)
    recorder.record(0, b, c)
    diverged_step = None
    for step in range(1, grid.time.count):
        saturation = 1.0 - b / params.b_i
        rhs = (b + dt * params.f_e * c * saturation + dt * params.r_b * saturation * b
               - dt * params.alpha * b * c / (params.s_b + b))
        new_b = thomas_solve(b_band, b_diagonal, b_band, rhs)
        new_c = thomas_solve(c_band, c_diagonal, c_band, c + dt * params.f_b * new_b)
        if not (np.all(np.isfinite(new_b)) and np.all(np.isfinite(new_c))):
            logger.warning("Turing-1 FD produced non-finite values at step {}", step)
            diverged_step = step
            break
        b, c = new_b, new_c
        recorder.record(step, b, c)
    return recorder.finish(diverged_step)


def turing2_initial_field(seed: int, shape: tuple[int, ...]) -> np.ndarray:
    """
    Uniform [0, 1) fields U and V drawn from PCG64(seed), in that order.

    :return: array of shape (2, *shape).
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    return np.stack([rng.uniform(0.0, 1.0, size=shape), rng.uniform(0.0, 1.0, size=shape)])


def _neumann_copy(field: np.ndarray) -> None:
    field[0, :] = field[1, :]
    field[-1, :] = field[-2, :]
    field[:, 0] = field[:, 1]
    field[:, -1] = field[:, -2]


def solve_turing2_fd(grid: Grid, params: Turing2Params = Turing2Params(), seed: int = 0,
                     initial: Optional[np.ndarray] = None, keep_history: bool = False,
                     snapshots: Optional[Iterable[float]] = None) -> FieldGrid:
    """
    Explicit scheme for the cubic activator-inhibitor pair with zero-flux edges enforced by
    copying the neighbouring row or column after every step.

    :param seed: seed of the random initial field, ignored when ``initial`` is given,
    :param initial: array of shape (2, nx, ny).
    """
    _check_dims(grid, 2, Consts.turing2)
    dx, dy = (axis.spacing for axis in grid.spatial)
    dt = grid.dt
    inverse_area = 1.0 / dx ** 2 + 1.0 / dy ** 2
    fastest = max(params.a, params.b / params.tau)
    if fastest > 0.0:
        _refuse(fastest * dt * inverse_area, 0.5, 0.5 / (fastest * inverse_area), Consts.turing2)
    field = turing2_initial_field(seed, grid.spatial_shape) if initial is None else np.array(initial, dtype=np.float64)
    if field.shape != (2,) + grid.spatial_shape:
        raise pinn_exception.ShapeError(f"Initial field has shape {field.shape}, expected (2, *{grid.spatial_shape})")
    u, v = field[0].copy(), field[1].copy()

    def laplacian(z: np.ndarray) -> np.ndarray:
        return ((z[:-2, 1:-1] - 2.0 * z[1:-1, 1:-1] + z[2:, 1:-1]) / dx ** 2
                + (z[1:-1, :-2] - 2.0 * z[1:-1, 1:-1] + z[1:-1, 2:]) / dy ** 2)

    recorder = _SliceRecorder(grid, ["u", "v"], keep_history, snapshots)
    recorder.record(0, u, v)
    diverged_step = None
    for step in range(1, grid.time.count):
        delta_u, delta_v = laplacian(u), laplacian(v)
        uc, vc = u[1:-1, 1:-1].copy(), v[1:-1, 1:-1].copy()
        u[1:-1, 1:-1] = uc + dt * (params.a * delta_u + uc - uc ** 3 - vc + params.c)
        v[1:-1, 1:-1] = vc + dt * (params.b * delta_v + uc - vc) / params.tau
        _neumann_copy(u)
        _neumann_copy(v)
        if _exploded(u, v):
            logger.warning("Turing-2 FD diverged at step {}", step)
            diverged_step = step
            break
        recorder.record(step, u, v)
    logger.info("Turing-2 FD done on grid {} after {} steps", grid.spatial_shape, grid.time.count - 1)
    return recorder.finish(diverged_step)


def preset_grid(problem_id: str, variant: Optional[str] = None) -> Grid:
    """
    Grid of each problem's reference listing. Fisher ``stated`` runs to t = 10; Turing-1
    ``fd-listing`` is the long micrometre-scale run, the other Turing-1 variants use the
    trainable domain [0, 3e-3] x [0, 1500].
    """
    match problem_id:
        case Consts.toy:
            return Grid(spatial=[Axis.stepped("x", 0.0, 2.0, 0.1)], time=Axis.stepped("t", 0.0, 1.0, 0.01))
        case Consts.burgers:
            return Grid(spatial=[Axis(name="x", origin=0.0, spacing=0.01, count=100)],
                        time=Axis(name="t", origin=0.0, spacing=2.5e-5, count=4000))
        case Consts.heat2d:
            return Grid(spatial=[Axis.stepped("x", -10.0, 10.0, 0.1), Axis.stepped("y", -10.0, 10.0, 0.1)],
                        time=Axis.stepped("t", 0.0, 0.25, 1e-3))
        case Consts.kdv:
            return Grid(spatial=[Axis.stepped("x", -250.0, 250.0, 1.0, closed=False)],
                        time=Axis.stepped("t", 0.0, 10.0, 0.02, closed=False))
        case Consts.fisher:
            t_end = 10.0 if variant == "stated" else 1.0
            return Grid(spatial=[Axis.stepped("x", -50.0, 50.0, 0.1, closed=False)],
                        time=Axis.stepped("t", 0.0, t_end, 0.001, closed=False))
        case Consts.turing1:
            if variant == "fd-listing":
                return Grid(spatial=[Axis.spanning("x", 0.0, 3000.0, 3000)],
                            time=Axis.stepped("t", 0.0, 200000.0, 1.0))
            return Grid(spatial=[Axis.spanning("x", 0.0, 3e-3, 301)], time=Axis.stepped("t", 0.0, 1500.0, 1.0))
        case Consts.turing2:
            return Grid(spatial=[Axis(name="x", origin=-1.0, spacing=0.02, count=100),
                                 Axis(name="y", origin=-1.0, spacing=0.02, count=100)],
                        time=Axis.stepped("t", 0.0, 15.0, 0.001))
        case _:
            raise pinn_exception.ConfigurationError(f"No finite-difference scheme for problem {problem_id}")


def solve_fd(problem_id: str, params, grid: Optional[Grid] = None, variant: Optional[str] = None,
             keep_history: bool = False, snapshots: Optional[Iterable[float]] = None, seed: int = 0,
             initial=None) -> FieldGrid:
    """
    Runs the scheme of a problem on its preset grid (or ``grid``).

    :param initial: initial field(s) on the grid nodes, in the form the problem's solver
                    takes; toy and Burgers always start from their closed-form data.
    """
    grid = grid if grid is not None else preset_grid(problem_id, variant)
    logger.info("Solving {} by finite differences on {} spatial nodes and {} time nodes",
                problem_id, grid.spatial_shape, grid.time.count)
    options = {"keep_history": keep_history, "snapshots": snapshots}
    match problem_id:
        case Consts.toy:
            return solve_toy_fd(grid, params, **options)
        case Consts.burgers:
            return solve_burgers_fd(grid, params, **options)
        case Consts.heat2d:
            return solve_heat2d_fd(grid, params, initial=initial, **options)
        case Consts.kdv:
            return solve_kdv_fd(grid, params, initial=initial, **options)
        case Consts.fisher:
            return solve_fisher_fd(grid, params, initial=initial, **options)
        case Consts.turing1:
            return solve_turing1_fd(grid, params, initial=initial, **options)
        case Consts.turing2:
            return solve_turing2_fd(grid, params, seed=seed, initial=initial, **options)
        case _:
            raise pinn_exception.ConfigurationError(f"No finite-difference scheme for problem {problem_id}")
