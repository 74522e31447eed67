import logging
import numpy as np
from typing import Optional, Tuple
from rmb_ist.base import NumericalError
from rmb_ist.core.types import Grid
from rmb_ist.utils.propagators import check_method, cumulative_product, expm_skew3, magnus4, node_values, \
    rk4_step_matrix

logger = logging.getLogger(__name__)

# (s, u, r) with every atom in the lower level
GROUND_STATE = np.array([0., -1., 0.])
# RK4 steps are not rotations and lose norm like n h^6
SWEEP_TOL = {'magnus': 1e-10, 'rk4': 1e-6}


def bloch_generator(E: np.ndarray, mu: float) -> np.ndarray:
    """
    Skew generator of (s, u, r)_x = B (s, u, r) with B = [[0, E, mu], [-E, 0, 0], [-mu, 0, 0]].

    Parameters
    ----------
    E
        Field values, any shape.
    mu
        Resonance parameter.

    Returns
    -------
    Array of shape E.shape + (3, 3).
    """
    E = np.asarray(E, dtype=float)
    B = np.zeros(E.shape + (3, 3))
    B[..., 0, 1] = E
    B[..., 1, 0] = -E
    B[..., 0, 2] = mu
    B[..., 2, 0] = -mu
    return B


def bloch_sweep(E: np.ndarray, mu: float, grid: Grid, method: str = 'magnus', tol: Optional[float] = None) \
        -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Integrate the Bloch equations in x from the ground state (s, u, r) = (0, -1, 0) at the left end of the grid.

    Parameters
    ----------
    E
        Field samples on the grid, decayed at the left end.
    mu
        Resonance parameter.
    grid
        Uniform grid.
    method
        'magnus' for exact rotations from a fourth-order Magnus exponent, 'rk4' for classical Runge-Kutta.
    tol
        Largest accepted deviation of s^2 + u^2 + r^2 from one. Defaults to SWEEP_TOL[method].

    Returns
    -------
    Tuple (s, u, r) of arrays of length n_points.
    """
    check_method(method)
    E = np.asarray(E, dtype=float)
    if E.shape != (grid.n_points,):
        raise ValueError('E must have length n_points={}'.format(grid.n_points))
    nodes = node_values(E, grid, method)
    h = grid.h
    if method == 'magnus':
        steps = expm_skew3(magnus4(bloch_generator(nodes[0], mu), bloch_generator(nodes[1], mu), h))
    else:
        steps = rk4_step_matrix(*(bloch_generator(n, mu) for n in nodes), h)
    with np.errstate(over='ignore', invalid='ignore'):
        y = cumulative_product(steps) @ GROUND_STATE
    defect = np.max(np.abs(np.sum(y ** 2, axis=-1) - 1.))
    tol = SWEEP_TOL[method] if tol is None else tol
    if not np.isfinite(defect) or defect > tol:
        raise NumericalError('sweep instability')
    return y[:, 0], y[:, 1], y[:, 2]
