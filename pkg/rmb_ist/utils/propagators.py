"""
Fourth-order one-step propagators for linear ODEs y' = A(x) y on uniform grids.

Two schemes are provided: a two-node Gauss Magnus exponential ('magnus') and the classical Runge-Kutta
method written as a step matrix ('rk4'). Step matrices are stacked along axis -3 so that a whole grid
can be chained with `cumulative_product`.
"""
import numpy as np
from scipy.interpolate import CubicSpline
from typing import Tuple
from rmb_ist.core.types import Grid

METHODS = ('magnus', 'rk4')
GAUSS_NODES = (.5 - np.sqrt(3.) / 6., .5 + np.sqrt(3.) / 6.)
MAGNUS_WEIGHT = np.sqrt(3.) / 12.


def check_method(method: str) -> None:
    if method not in METHODS:
        raise ValueError('method must be one of {}, got {}'.format(METHODS, method))


def node_values(E: np.ndarray, grid: Grid, method: str) -> Tuple[np.ndarray, ...]:
    """
    Values of the sampled field at the nodes each scheme needs inside every grid cell.

    Parameters
    ----------
    E
        Field samples on the grid.
    grid
        Uniform grid.
    method
        'magnus' (two Gauss nodes per cell) or 'rk4' (left end, midpoint, right end).

    Returns
    -------
    Tuple of arrays of length n_points - 1.
    """
    check_method(method)
    E = np.asarray(E, dtype=float)
    x, h = grid.x, grid.h
    spline = CubicSpline(x, E)
    if method == 'magnus':
        return spline(x[:-1] + GAUSS_NODES[0] * h), spline(x[:-1] + GAUSS_NODES[1] * h)
    return E[:-1], spline(x[:-1] + .5 * h), E[1:]


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def magnus4(A1: np.ndarray, A2: np.ndarray, h: float) -> np.ndarray:
    """ Fourth-order Magnus exponent from the generator at the two Gauss nodes. """
    return .5 * h * (A1 + A2) + MAGNUS_WEIGHT * h ** 2 * commutator(A2, A1)


def rk4_step_matrix(A0: np.ndarray, Am: np.ndarray, A1: np.ndarray, h: float) -> np.ndarray:
    """ Linear map y_n -> y_{n+1} of one classical RK4 step with generators at x_n, x_n + h/2, x_n + h. """
    eye = np.broadcast_to(np.eye(A0.shape[-1], dtype=A0.dtype), A0.shape)
    k1 = A0
    k2 = Am @ (eye + .5 * h * k1)
    k3 = Am @ (eye + .5 * h * k2)
    k4 = A1 @ (eye + h * k3)
    return eye + h / 6. * (k1 + 2. * k2 + 2. * k3 + k4)


def expm_traceless2(omega: np.ndarray) -> np.ndarray:
    """
    Batched exponential of traceless 2x2 matrices: exp(W) = cosh(w) I + sinh(w)/w W with w^2 = -det W.
    The determinant of the result is exactly one up to round-off.
    """
    w2 = omega[..., 0, 0] ** 2 + omega[..., 0, 1] * omega[..., 1, 0]
    w = np.sqrt(w2.astype(complex))
    small = np.abs(w) < 1e-6
    w_safe = np.where(small, 1., w)
    sinhc = np.where(small, 1. + w2 / 6., np.sinh(w_safe) / w_safe)
    cosh = np.where(small, 1. + w2 / 2., np.cosh(w_safe))
    out = sinhc[..., None, None] * omega
    out[..., 0, 0] += cosh
    out[..., 1, 1] += cosh
    return out


def expm_skew3(K: np.ndarray) -> np.ndarray:
    """ Batched exponential of real skew-symmetric 3x3 matrices (Rodrigues). """
    th2 = K[..., 0, 1] ** 2 + K[..., 0, 2] ** 2 + K[..., 1, 2] ** 2
    th = np.sqrt(th2)
    small = th < 1e-6
    th_safe = np.where(small, 1., th)
    a = np.where(small, 1. - th2 / 6., np.sin(th_safe) / th_safe)
    b = np.where(small, .5 - th2 / 24., (1. - np.cos(th_safe)) / th_safe ** 2)
    eye = np.broadcast_to(np.eye(3), K.shape)
    return eye + a[..., None, None] * K + b[..., None, None] * (K @ K)


def cumulative_product(steps: np.ndarray) -> np.ndarray:
    """
    Chain step matrices S_0, ..., S_{n-1} (stacked along axis -3) into P_0 = I, P_k = S_{k-1} ... S_0
    with a log-depth prefix scan.
    """
    q = np.array(steps, copy=True)
    n = q.shape[-3]
    k = 1
    while k < n:
        q[..., k:, :, :] = q[..., k:, :, :] @ q[..., :-k, :, :]
        k *= 2
    eye = np.broadcast_to(np.eye(q.shape[-1], dtype=q.dtype), q.shape[:-3] + (1,) + q.shape[-2:])
    return np.concatenate([eye, q], axis=-3)
