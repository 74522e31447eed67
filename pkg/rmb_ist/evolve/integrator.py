"""
Method-of-lines integration of the reduced Maxwell-Bloch system: E_t = -s with (s, u, r) slaved to E through
a Bloch sweep in x at every Runge-Kutta stage.
"""
from dataclasses import dataclass, field
import logging
import numpy as np
import time
from tqdm import tqdm
from typing import Dict, List, Sequence, Tuple
from rmb_ist.base import BaseSolver, evolve_manifest_dict, NumericalError
from rmb_ist.core.types import Grid, SpatialField
from rmb_ist.evolve.bloch import bloch_sweep
from rmb_ist.utils.propagators import check_method

logger = logging.getLogger(__name__)

EDGE_WIDTH = 5.
SUPPORT_TOL = 1e-4
TOL_TIME = 1e-12


@dataclass(frozen=True)
class EvolveSpec:
    grid: Grid
    mu: float
    dt: float
    t_end: float
    record_times: Tuple[float, ...] = field(default_factory=tuple)
    method: str = 'magnus'

    def __post_init__(self):
        if not 0 < self.mu <= 1:
            raise ValueError('mu must lie in (0, 1]')
        if self.dt <= 0:
            raise ValueError('dt must be positive')
        if self.t_end < 0:
            raise ValueError('t_end must be non-negative')
        check_method(self.method)
        times = tuple(sorted(float(t) for t in self.record_times))
        if any(t < 0 or t > self.t_end + TOL_TIME for t in times):
            raise ValueError('record times must lie in [0, t_end]')
        object.__setattr__(self, 'record_times', times)
        if self.dt > self.grid.h:
            logger.warning('Time step dt={} exceeds the grid step h={:.4g}; the explicit scheme may be unstable.'
                           .format(self.dt, self.grid.h))

    def to_dict(self) -> Dict:
        return {'x_min': self.grid.x_min, 'x_max': self.grid.x_max, 'n_points': self.grid.n_points,
                'h': self.grid.h, 'mu': self.mu, 'dt': self.dt, 't_end': self.t_end, 'method': self.method}


@dataclass(frozen=True, eq=False)
class EvolveRun:
    snapshots: List[SpatialField]
    bloch_defect: float
    boundary_defect: float
    n_steps: int


def field_from_E(E: np.ndarray, grid: Grid, t: float, mu: float, method: str = 'magnus') -> SpatialField:
    s, u, r = bloch_sweep(E, mu, grid, method=method)
    return SpatialField(grid, E, s, u, r, t)


def step_time(state: SpatialField, dt: float, mu: float, method: str = 'magnus') -> SpatialField:
    """
    One classical RK4 step of E_t = -s[E], with s[E] from a Bloch sweep at each stage.

    Parameters
    ----------
    state
        Fields at time t.
    dt
        Time step.
    mu
        Resonance parameter.
    method
        Propagator of the Bloch sweeps.

    Returns
    -------
    Fields at time t + dt.
    """
    grid = state.grid

    def slope(E: np.ndarray) -> np.ndarray:
        if not np.all(np.isfinite(E)):
            raise NumericalError('blowup or instability')
        return -bloch_sweep(E, mu, grid, method=method)[0]

    with np.errstate(over='ignore', invalid='ignore'):
        k1 = -state.s
        k2 = slope(state.E + .5 * dt * k1)
        k3 = slope(state.E + .5 * dt * k2)
        k4 = slope(state.E + dt * k3)
        E = state.E + dt / 6. * (k1 + 2. * k2 + 2. * k3 + k4)
    if not np.all(np.isfinite(E)):
        raise NumericalError('blowup or instability')
    return field_from_E(E, grid, state.t + dt, mu, method=method)


def step_plan(dt: float, record_times: Sequence[float], t_end: float) -> List[Tuple[float, bool]]:
    """ Step sizes up to t_end, each step flagged when it lands on a record time. """
    plan, t = [], 0.
    for target in list(record_times) + [t_end]:
        while target - t > TOL_TIME:
            step = min(dt, target - t)
            t += step
            plan.append((step, False))
        if plan and target in record_times:
            plan[-1] = (plan[-1][0], True)
    return plan


def _near_boundary(field_: SpatialField) -> bool:
    x = field_.grid.x
    edges = (x < field_.grid.x_min + EDGE_WIDTH) | (x > field_.grid.x_max - EDGE_WIDTH)
    return bool(np.max(np.abs(field_.E[edges])) > SUPPORT_TOL)


def run_evolution(E0: np.ndarray, spec: EvolveSpec, verbose: bool = False, tol_bloch: float = 1e-8,
                  tol_bdy: float = 1e-6) -> EvolveRun:
    """
    Evolve E0 with snapshots at the record times and track the Bloch and boundary defects.

    Parameters
    ----------
    E0
        Initial field on spec.grid.
    spec
        Evolution settings.
    verbose
        Whether to show a progress bar.
    tol_bloch
        Bloch defect above which a warning is logged.
    tol_bdy
        Boundary defect above which a warning is logged.

    Returns
    -------
    EvolveRun with the snapshots and the largest defects seen.
    """
    E0 = np.asarray(E0, dtype=float)
    if E0.shape != (spec.grid.n_points,):
        raise ValueError('E0 must have length n_points={}'.format(spec.grid.n_points))
    state = field_from_E(E0, spec.grid, 0., spec.mu, method=spec.method)
    snapshots = [state] if spec.record_times and spec.record_times[0] <= TOL_TIME else []
    bloch, bdy = 0., state.boundary_defect()
    warned = _near_boundary(state)
    if warned:
        logger.warning('Initial field reaches within {} of a grid boundary.'.format(EDGE_WIDTH))
    plan = step_plan(spec.dt, spec.record_times, spec.t_end)
    p_bar = tqdm(plan, "Evolving") if verbose else plan
    for step, record in p_bar:
        state = step_time(state, step, spec.mu, method=spec.method)
        bloch = max(bloch, float(np.max(np.abs(state.s ** 2 + state.u ** 2 + state.r ** 2 - 1.))))
        bdy = max(bdy, state.boundary_defect())
        if not warned and _near_boundary(state):
            logger.warning('Field support within {} of a grid boundary at t={:.4g}.'.format(EDGE_WIDTH, state.t))
            warned = True
        if record:
            snapshots.append(state)
    if bloch > tol_bloch:
        logger.warning('Bloch defect {:.2e} exceeds {:.1e}.'.format(bloch, tol_bloch))
    if bdy > tol_bdy:
        logger.warning('Boundary defect {:.2e} exceeds {:.1e}.'.format(bdy, tol_bdy))
    return EvolveRun(snapshots=snapshots, bloch_defect=bloch, boundary_defect=bdy, n_steps=len(plan))


def evolve(E0: np.ndarray, spec: EvolveSpec, verbose: bool = False) -> List[SpatialField]:
    """ Snapshots of the evolution of E0 at spec.record_times. """
    return run_evolution(E0, spec, verbose=verbose).snapshots


class RMBEvolver(BaseSolver):

    def __init__(self, spec: EvolveSpec, verbose: bool = False, tol_bloch: float = 1e-8,
                 tol_bdy: float = 1e-6) -> None:
        """
        Direct integrator of the reduced Maxwell-Bloch system.

        Parameters
        ----------
        spec
            Evolution settings.
        verbose
            Whether to show a progress bar.
        tol_bloch
            Bloch defect tolerance.
        tol_bdy
            Boundary defect tolerance.
        """
        super().__init__()
        self.spec = spec
        self.verbose = verbose
        self.tol_bloch = tol_bloch
        self.tol_bdy = tol_bdy
        self.snapshots = []  # type: List[SpatialField]
        self.meta['mu'] = spec.mu

    def evolve(self, E0: np.ndarray) -> List[SpatialField]:
        return self._run(E0).snapshots

    def _run(self, E0: np.ndarray) -> EvolveRun:
        run = run_evolution(E0, self.spec, verbose=self.verbose, tol_bloch=self.tol_bloch, tol_bdy=self.tol_bdy)
        self.snapshots = run.snapshots
        return run

    def predict(self, E0: np.ndarray) -> Dict[Dict[str, str], Dict[str, np.ndarray]]:
        """
        Evolve E0 and summarize the run. The snapshots are kept on `self.snapshots`.

        Parameters
        ----------
        E0
            Initial field on the grid of the spec.

        Returns
        -------
        Dictionary containing 'meta' and 'data' dictionaries.
        'meta' has the solver's metadata.
        'data' contains the settings, the record times, the largest Bloch and boundary defects and the wall time.
        """
        start = time.perf_counter()
        run = self._run(E0)
        manifest = evolve_manifest_dict()
        manifest['meta'] = self.meta
        manifest['data'].update({
            'spec': self.spec.to_dict(),
            'record_times': np.array([s.t for s in run.snapshots]),
            'bloch_defect': run.bloch_defect,
            'boundary_defect': run.boundary_defect,
            'wall_time': time.perf_counter() - start
        })
        return manifest
