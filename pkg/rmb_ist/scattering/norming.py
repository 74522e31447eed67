import logging
import numpy as np
from rmb_ist.core.types import Grid
from rmb_ist.scattering.jost import sweep_columns
from rmb_ist.scattering.spectrum import _s11_imaginary_axis

logger = logging.getLogger(__name__)


def _proportionality(a: np.ndarray, b: np.ndarray):
    """ Least-squares ratio a ~ k b over both components and the relative residual. """
    k = np.sum(a * np.conj(b), axis=-1) / np.sum(np.abs(b) ** 2, axis=-1)
    residual = np.linalg.norm(a - k[..., None] * b, axis=-1) / np.linalg.norm(a, axis=-1)
    return k, residual


def norming_constants(E0: np.ndarray, grid: Grid, z_k: complex, method: str = 'magnus',
                      tol_ratio: float = 1e-6, tol_imag: float = 1e-4) -> complex:
    """
    Norming constant of the bound state at z_k = i eta_k, ready for the residue conditions.

    The bound-state columns satisfy phi_left_1 = b_k phi_right_2 with b_k real. The constant
    returned is c_k = b_k / s11'(z_k), which lies on the imaginary axis.

    Parameters
    ----------
    E0
        Field samples on the grid.
    grid
        Uniform grid.
    z_k
        Simple zero of s11 on the positive imaginary axis.
    method
        Propagator used for the Jost columns.
    tol_ratio
        Relative tolerance of the proportionality and of its x-independence.
    tol_imag
        Largest admissible |Re c_k| / |c_k|.

    Returns
    -------
    Purely imaginary norming constant.
    """
    eta = float(np.imag(z_k))
    if eta <= 0 or abs(np.real(z_k)) > 1e-12:
        raise ValueError('z_k must lie on the positive imaginary axis')
    z = np.array([1j * eta])
    left = sweep_columns(E0, grid, z, 'left', (0,), method=method)[:, 0, :, 0]
    right = sweep_columns(E0, grid, z, 'right', (1,), method=method)[:, 0, :, 0]

    ref = grid.mid_index
    step = max(1, int(round(.25 / (eta * grid.h))))
    idx = np.clip(ref + step * np.arange(-2, 3), 0, grid.n_points - 1)
    x = grid.x[idx]

    ratio_m, residual = _proportionality(left[idx], right[idx])
    # phi_left_1 / phi_right_2 = (m_left_1 / m_right_2) exp(-2 i z x) and -2 i z x = 2 eta x
    b = (ratio_m * np.exp(2. * eta * x)).real
    spread = np.max(np.abs(b - b[2])) / abs(b[2])
    if np.max(residual) > tol_ratio or spread > tol_ratio:
        raise ValueError('proportionality failure')

    d_eta = 1e-5 * max(eta, 1.)
    sp, sm = _s11_imaginary_axis(E0, grid, np.array([eta + d_eta, eta - d_eta]), method)
    ds_deta = (sp - sm) / (2. * d_eta)
    # d/dz = -i d/deta on the imaginary axis
    c = b[2] / (-1j * ds_deta)
    if abs(c.real) > tol_imag * abs(c):
        raise ValueError('norming constant not purely imaginary (violates Assumption 1)')
    logger.debug('Norming constant at i*{:.6f}: b={:.6e}, c={:.6e}i'.format(eta, b[2], c.imag))
    return complex(0., c.imag)
