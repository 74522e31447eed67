from dataclasses import dataclass
import logging
import numpy as np
from typing import Optional, Sequence, Tuple, Union
from rmb_ist.base import NumericalError
from rmb_ist.core.types import Grid
from rmb_ist.utils.propagators import expm_traceless2, magnus4, node_values, rk4_step_matrix

logger = logging.getLogger(__name__)

SIDES = ('left', 'right')
# sign of sigma_3 on each column
COLUMN_SIGNS = np.array([1., -1.])


@dataclass(frozen=True, eq=False)
class JostSolution:
    """
    Normalized Jost function m = Phi exp(i z x sigma_3) on the grid.

    Columns that were not requested (outside their analyticity half-plane) hold NaN.
    """
    z: complex
    m: np.ndarray
    side: str
    columns: Tuple[int, ...]
    det_defect: float


def analytic_columns(z: complex, side: str) -> Tuple[int, ...]:
    """ Columns of m_left / m_right that extend analytically to the half-plane containing z. """
    if side not in SIDES:
        raise ValueError('side must be one of {}'.format(SIDES))
    im = np.imag(z)
    if im == 0:
        return 0, 1
    upper = im > 0
    if side == 'left':
        return (0,) if upper else (1,)
    return (1,) if upper else (0,)


def zs_generator(z: np.ndarray, E: Union[float, np.ndarray]) -> np.ndarray:
    """
    Generator -i z sigma_3 + Q_1(E) of the Zakharov-Shabat x-part, Q_1 = 1/2 [[0, -E], [E, 0]].

    Parameters
    ----------
    z
        Spectral parameters, shape (nz,).
    E
        Field value (scalar) shared by all z.

    Returns
    -------
    Array of shape (nz, 2, 2).
    """
    z = np.asarray(z, dtype=complex)
    A = np.zeros(z.shape + (2, 2), dtype=complex)
    A[..., 0, 0] = -1j * z
    A[..., 1, 1] = 1j * z
    A[..., 0, 1] = -.5 * E
    A[..., 1, 0] = .5 * E
    return A


def _step_matrix(z: np.ndarray, nodes: Tuple[np.ndarray, ...], n: int, h: float, method: str,
                 forward: bool) -> np.ndarray:
    """ Propagator of Phi across cell n, from x_n to x_{n+1} if forward else from x_{n+1} to x_n. """
    if method == 'magnus':
        omega = magnus4(zs_generator(z, nodes[0][n]), zs_generator(z, nodes[1][n]), h)
        return expm_traceless2(omega if forward else -omega)
    A0, Am, A1 = (zs_generator(z, nodes[i][n]) for i in range(3))
    if forward:
        return rk4_step_matrix(A0, Am, A1, h)
    return rk4_step_matrix(A1, Am, A0, -h)


def sweep_columns(E0: np.ndarray, grid: Grid, z: np.ndarray, side: str, columns: Sequence[int],
                  record: Optional[np.ndarray] = None, method: str = 'magnus') -> np.ndarray:
    """
    Integrate selected columns of the normalized Jost function for many spectral parameters at once.

    Parameters
    ----------
    E0
        Field samples on the grid.
    grid
        Uniform grid; the identity normalization is imposed at x_min (left) or x_max (right).
    z
        Spectral parameters, shape (nz,).
    side
        'left' or 'right'.
    columns
        Column indices to integrate.
    record
        Grid indices at which the columns are stored. All grid points when None.
    method
        Propagator, 'magnus' or 'rk4'.

    Returns
    -------
    Array of shape (len(record), nz, 2, len(columns)).
    """
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    columns = tuple(columns)
    n_points, h = grid.n_points, grid.h
    record = np.arange(n_points) if record is None else np.asarray(record, dtype=int)
    slot = {int(idx): k for k, idx in enumerate(record)}
    out = np.full((len(record), z.size, 2, len(columns)), np.nan, dtype=complex)
    nodes = node_values(E0, grid, method)

    m = np.zeros((z.size, 2, len(columns)), dtype=complex)
    for j, col in enumerate(columns):
        m[:, col, j] = 1.
    signs = COLUMN_SIGNS[list(columns)]
    forward = side == 'left'
    # m_{n+1} = U_n m_n exp(i z h sigma_3) column-wise; reversed for the right normalization
    phase = np.exp((1j if forward else -1j) * h * z[:, None] * signs[None, :])[:, None, :]
    start, cells = (0, range(n_points - 1)) if forward else (n_points - 1, range(n_points - 2, -1, -1))
    if start in slot:
        out[slot[start]] = m
    with np.errstate(over='ignore', invalid='ignore'):
        for n in cells:
            m = (_step_matrix(z, nodes, n, h, method, forward) @ m) * phase
            idx = n + 1 if forward else n
            if idx in slot:
                out[slot[idx]] = m
            if n % 256 == 0 and not np.all(np.isfinite(m)):
                raise NumericalError('integration overflow')
    if not np.all(np.isfinite(m)) or np.max(np.abs(m)) > 1e300:
        raise NumericalError('integration overflow')
    return out


def integrate_jost(E0: np.ndarray, grid: Grid, z: complex, side: str, columns: Optional[Sequence[int]] = None,
                   method: str = 'magnus', tol_det: float = 1e-10) -> JostSolution:
    """
    Normalized Jost solution m_left (m -> I at x_min) or m_right (m -> I at x_max) of
    m_x = -i z [sigma_3, m] + Q_1 m.

    Parameters
    ----------
    E0
        Field samples, decayed at both grid ends.
    grid
        Uniform grid.
    z
        Spectral parameter.
    side
        'left' or 'right'.
    columns
        Columns to integrate. Defaults to every column that is analytic at z.
    method
        Propagator, 'magnus' (default) or 'rk4'.
    tol_det
        Tolerance on |det m - 1| when both columns are available.

    Returns
    -------
    JostSolution with m of shape (n_points, 2, 2).
    """
    allowed = analytic_columns(z, side)
    if columns is None:
        columns = allowed
    columns = tuple(sorted(set(columns)))
    if any(c not in allowed for c in columns):
        raise ValueError('column not analytic here')
    values = sweep_columns(E0, grid, np.array([z]), side, columns, method=method)[:, 0]
    m = np.full((grid.n_points, 2, 2), np.nan, dtype=complex)
    for j, col in enumerate(columns):
        m[:, :, col] = values[:, :, j]
    det_defect = np.nan
    if len(columns) == 2:
        det_defect = float(np.max(np.abs(np.linalg.det(m) - 1.)))
        if det_defect > tol_det:
            logger.warning('Jost determinant defect {:.2e} exceeds {:.1e} at z={}.'.format(det_defect, tol_det, z))
    return JostSolution(z=complex(z), m=m, side=side, columns=columns, det_defect=det_defect)
