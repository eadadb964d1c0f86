"""Fixed-point computation of the minimum interception time.

The capture time is the smallest root of g(t) = distance(t, target(t)) - ell.
Because g is (1 + v)-Lipschitz, the step (g / (1 + v)) can never jump over
the root, so the iteration t <- t + step converges to it monotonically from
below for every target path within the declared speed bound.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .core import CaptureSpec, PlanarPoint, SolveTrace, TargetTrajectory, Termination
from .plants import InterceptionPath, PlantModel


class ConvergenceError(RuntimeError):
    """Raised when an iteration cap is exhausted before convergence."""


class EstimatorKind(enum.Enum):
    SIMPLE = "simple"
    BEST = "best"


class SolveStatus(enum.Enum):
    INTERCEPTED = "intercepted"
    UNREACHABLE = "unreachable"
    BUDGET = "budget"


@dataclass(frozen=True)
class SolveResult:
    status: SolveStatus
    t_star: float
    trace: SolveTrace
    path: InterceptionPath | None


def simple_estimator(
    plant: PlantModel, t: float, y: PlanarPoint, v: float, ell: float
) -> float:
    """Distance-closing step: plant and target approach at combined speed 1 + v."""
    rho = plant.distance(t, y)
    if rho > ell:
        return t + (rho - ell) / (1.0 + v)
    return t


def best_estimator(
    plant: PlantModel,
    t: float,
    y: PlanarPoint,
    v: float,
    ell: float,
    *,
    force_iterative: bool = False,
    inner_tol: float = 1e-15,
    max_inner: int = 1_000_000,
) -> float:
    """Largest step that cannot overshoot the capture time of any valid target.

    Uses the plant's closed-form step when it has one; otherwise (or when
    ``force_iterative`` is set) finds the smallest s >= t with
    distance(s, y) = v*(s - t) + ell by the same safe-step iteration applied
    to the frozen point y against an inflating capture margin.
    """
    rho = plant.distance(t, y)
    if rho < ell:
        raise ValueError("estimator requires the point to be at least ell away")
    if rho == ell:
        return t
    if plant.has_closed_form_best_estimator and not force_iterative:
        return plant.best_step(t, y, v, ell)
    s = t
    for _ in range(max_inner):
        gap = plant.distance(s, y) - v * (s - t) - ell
        if gap <= 0.0:
            return s
        step = gap / (1.0 + v)
        s += step
        if step <= inner_tol * (1.0 + s):
            return s
    return s  # still a valid lower bound


def solve(
    plant: PlantModel,
    trajectory: TargetTrajectory,
    capture: CaptureSpec,
    estimator: EstimatorKind = EstimatorKind.BEST,
    max_iterations: int = 10_000,
    *,
    epsilon_abs: float = 1e-9,
    reconstruct_path: bool = True,
) -> SolveResult:
    """Iterate the chosen estimator from t = 0 until the target is captured.

    Stops when distance <= ell*(1 + epsilon), after ``max_iterations`` steps
    (status ``BUDGET``), or when the step stays below 1e-15*(1 + t) for ten
    consecutive iterations (status ``UNREACHABLE`` - a heuristic, since an
    infinite capture time cannot be certified in finite time). For ell = 0
    the relative threshold degenerates, so ``epsilon_abs`` is used instead.
    """
    v = trajectory.speed_bound
    if not math.isfinite(v):
        raise ValueError("trajectory speed bound must be finite")
    ell = capture.ell
    threshold = ell * (1.0 + capture.epsilon) if ell > 0 else epsilon_abs

    if estimator is EstimatorKind.SIMPLE:
        def step_fn(t: float, y: PlanarPoint) -> float:
            return simple_estimator(plant, t, y, v, ell)
    else:
        def step_fn(t: float, y: PlanarPoint) -> float:
            return best_estimator(plant, t, y, v, ell)

    t = 0.0
    y = trajectory.position(t)
    rho = plant.distance(t, y)
    iterates = [(t, rho)]
    underflow_run = 0
    termination = Termination.CAPTURED
    while rho > threshold:
        if len(iterates) - 1 >= max_iterations:
            termination = Termination.MAX_ITERATIONS
            break
        t_next = step_fn(t, y)
        if t_next - t < 1e-15 * (1.0 + t_next):
            underflow_run += 1
        else:
            underflow_run = 0
        t = t_next
        y = trajectory.position(t)
        rho = plant.distance(t, y)
        iterates.append((t, rho))
        if underflow_run >= 10:
            termination = Termination.STEP_UNDERFLOW
            break

    trace = SolveTrace(tuple(iterates), termination)
    if termination is Termination.CAPTURED:
        status = SolveStatus.INTERCEPTED
    elif termination is Termination.MAX_ITERATIONS:
        status = SolveStatus.BUDGET
    else:
        status = SolveStatus.UNREACHABLE

    path = None
    if (
        status is SolveStatus.INTERCEPTED
        and reconstruct_path
        and plant.has_path_reconstruction
        and rho <= ell + 1e-6
    ):
        path = plant.path(t, y, ell)
    return SolveResult(status, t, trace, path)


def refine_ground_truth(
    plant: PlantModel,
    trajectory: TargetTrajectory,
    ell: float,
    *,
    step_tol: float = 1e-14,
    max_iterations: int = 10_000_000,
) -> float:
    """Reference capture time: iterate the best step until it underflows.

    Replaces the relative stopping rule with a step-size tolerance of
    ``step_tol * (1 + t)`` so the returned time is accurate to near machine
    precision for transversal approaches.
    """
    v = trajectory.speed_bound
    t = 0.0
    for _ in range(max_iterations):
        y = trajectory.position(t)
        if plant.distance(t, y) <= ell:
            return t
        t_next = best_estimator(plant, t, y, v, ell)
        if t_next - t <= step_tol * (1.0 + t_next):
            return t_next
        t = t_next
    raise ConvergenceError(
        f"no convergence within {max_iterations} iterations (capture may be unreachable)"
    )


def grid_oracle(
    plant: PlantModel,
    trajectory: TargetTrajectory,
    ell: float,
    horizon: float,
    resolution: float,
) -> float | None:
    """Brute-force first crossing of distance(t, target(t)) = ell.

    Scans from t = 0 with the Lipschitz-safe step max(resolution, g/(1+v)),
    which provably cannot skip a crossing by more than ``resolution``, then
    bisects the bracketing interval down to ``resolution``. Returns None if
    no crossing is found up to the horizon.
    """
    if resolution <= 0:
        raise ValueError(f"resolution must be > 0, got {resolution}")
    if horizon <= 0:
        raise ValueError(f"horizon must be > 0, got {horizon}")
    v = trajectory.speed_bound

    def g(t: float) -> float:
        return plant.distance(t, trajectory.position(t)) - ell

    t = 0.0
    gt = g(t)
    if gt <= 0.0:
        return 0.0
    while t <= horizon:
        t_next = t + max(resolution, gt / (1.0 + v))
        g_next = g(t_next)
        if g_next <= 0.0:
            # bisect well below the requested width so the returned point
            # stays within `resolution` of the crossing with margin to spare
            lo, hi = t, t_next
            while hi - lo > 0.25 * resolution:
                mid = 0.5 * (lo + hi)
                if g(mid) <= 0.0:
                    hi = mid
                else:
                    lo = mid
            return hi
        t, gt = t_next, g_next
    return None
