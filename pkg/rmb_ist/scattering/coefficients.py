import logging
import numpy as np
from typing import Optional, Tuple, Union
from rmb_ist.core.types import Grid
from rmb_ist.scattering.jost import sweep_columns

logger = logging.getLogger(__name__)


def check_points(grid: Grid, n_check: int = 5) -> np.ndarray:
    """ Grid indices used to verify x-independence of Wronskians, centred on the midpoint. """
    mid = grid.mid_index
    step = max(1, grid.n_points // (4 * n_check))
    offsets = (np.arange(n_check) - n_check // 2) * step
    return np.clip(mid + offsets, 0, grid.n_points - 1)


def wronskian(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a[..., 0] * b[..., 1] - a[..., 1] * b[..., 0]


def scattering_coefficients(E0: np.ndarray, grid: Grid, z: Union[complex, np.ndarray],
                            with_s21: Optional[bool] = None, method: str = 'magnus',
                            tol_wronskian: float = 1e-6) -> Tuple[np.ndarray, Optional[np.ndarray]]:
    """
    Scattering coefficients from Wronskians of the normalized Jost columns.

    Parameters
    ----------
    E0
        Field samples on the grid.
    grid
        Uniform grid.
    z
        Spectral parameter(s) with Im z >= 0.
    with_s21
        Whether to compute s21. Defaults to True when every z is real.
    method
        Propagator used for the Jost columns.
    tol_wronskian
        Allowed spread of the Wronskians over the check points before a warning is logged.

    Returns
    -------
    s11 = Wr(m_left_1, m_right_2) and s21 = -exp(-2izx) Wr(m_left_1, m_right_1), both taken at the
    grid midpoint. s21 is None when not requested.
    """
    scalar = np.ndim(z) == 0
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    if np.any(z.imag < 0):
        raise ValueError('scattering coefficients require Im z >= 0')
    real = bool(np.all(z.imag == 0))
    if with_s21 is None:
        with_s21 = real
    if with_s21 and not real:
        raise ValueError('s21 only on real axis')

    record = check_points(grid)
    x = grid.x[record]
    left = sweep_columns(E0, grid, z, 'left', (0,), record=record, method=method)[..., 0]
    right_cols = (0, 1) if with_s21 else (1,)
    right = sweep_columns(E0, grid, z, 'right', right_cols, record=record, method=method)
    s11_all = wronskian(left, right[..., -1])  # (n_check, nz)
    s21_all = None
    if with_s21:
        s21_all = -np.exp(-2j * z[None, :] * x[:, None]) * wronskian(left, right[..., 0])

    mid = len(record) // 2
    spread = np.max(np.abs(s11_all - s11_all[mid]))
    if s21_all is not None:
        spread = max(spread, np.max(np.abs(s21_all - s21_all[mid])))
    if spread > tol_wronskian:
        logger.warning('Wronskians vary by {:.2e} across the grid; refine the step or widen the grid.'
                       .format(spread))
    s11 = s11_all[mid]
    s21 = None if s21_all is None else s21_all[mid]
    if scalar:
        return s11[0], (None if s21 is None else s21[0])
    return s11, s21


def reflection_coefficient(E0: np.ndarray, grid: Grid, z_grid: np.ndarray, tol_zero: float = 1e-8,
                           method: str = 'magnus', return_coefficients: bool = False) \
        -> Union[np.ndarray, Tuple[np.ndarray, np.ndarray, np.ndarray]]:
    """
    Reflection coefficient r(z) = s21(z) / s11(z) on a real spectral grid.

    Parameters
    ----------
    E0
        Field samples on the grid.
    grid
        Uniform grid.
    z_grid
        Real spectral grid.
    tol_zero
        Smallest admissible |s11| on the grid.
    method
        Propagator used for the Jost columns.
    return_coefficients
        Whether to also return s11 and s21.

    Returns
    -------
    r on z_grid, optionally followed by s11 and s21.
    """
    z_grid = np.asarray(z_grid, dtype=float)
    s11, s21 = scattering_coefficients(E0, grid, z_grid, with_s21=True, method=method)
    if np.any(np.abs(s11) <= tol_zero):
        raise ValueError('spectral singularity suspected')
    r = s21 / s11
    if return_coefficients:
        return r, s11, s21
    return r
