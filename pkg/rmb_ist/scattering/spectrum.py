import logging
import numpy as np
from scipy.integrate import trapezoid
from scipy.optimize import brentq
from typing import List, Optional
from rmb_ist.core.types import Grid
from rmb_ist.scattering.jost import sweep_columns

logger = logging.getLogger(__name__)


def default_eta_max(E0: np.ndarray, grid: Grid) -> float:
    """ Area heuristic 1/4 * int |E0| dx + 1 for the height of the eigenvalue scan. """
    return .25 * float(trapezoid(np.abs(E0), grid.x)) + 1.


def _s11_imaginary_axis(E0: np.ndarray, grid: Grid, etas: np.ndarray, method: str) -> np.ndarray:
    """ s11(i eta) at the grid midpoint. """
    z = 1j * np.asarray(etas, dtype=float)
    record = np.array([grid.mid_index])
    left = sweep_columns(E0, grid, z, 'left', (0,), record=record, method=method)[0, :, :, 0]
    right = sweep_columns(E0, grid, z, 'right', (1,), record=record, method=method)[0, :, :, 0]
    return left[:, 0] * right[:, 1] - left[:, 1] * right[:, 0]


def discrete_spectrum(E0: np.ndarray, grid: Grid, eta_max: Optional[float] = None, n_scan: int = 400,
                      method: str = 'magnus', tol_real: float = 1e-9, tol_simple: float = 1e-8) -> List[complex]:
    """
    Purely imaginary zeros z_k = i eta_k of s11 in the upper half-plane.

    Parameters
    ----------
    E0
        Field samples on the grid.
    grid
        Uniform grid.
    eta_max
        Upper end of the scan on the imaginary axis. Defaults to `default_eta_max`.
    n_scan
        Number of uniform scan samples on (0, eta_max].
    method
        Propagator used for the Jost columns.
    tol_real
        Tolerance on Im s11(i eta) along the scan.
    tol_simple
        Smallest admissible |d s11(i eta) / d eta| at a zero.

    Returns
    -------
    Eigenvalues sorted by increasing Im z.
    """
    if eta_max is None:
        eta_max = default_eta_max(E0, grid)
    if eta_max <= 0 or n_scan < 2:
        raise ValueError('eta_max must be positive and n_scan at least 2')
    etas = np.linspace(eta_max / n_scan, eta_max, n_scan)
    s11 = _s11_imaginary_axis(E0, grid, etas, method)
    imag_defect = np.max(np.abs(s11.imag))
    if imag_defect > tol_real:
        raise ValueError('s11 not real on the imaginary axis (defect {:.2e})'.format(imag_defect))
    f = s11.real
    if f[-1] <= 0:
        raise ValueError('increase eta_max')

    def s11_at(eta: float) -> float:
        return float(_s11_imaginary_axis(E0, grid, np.array([eta]), method)[0].real)

    zeros = []
    brackets = np.where(np.sign(f[:-1]) * np.sign(f[1:]) <= 0)[0]
    for i in brackets:
        a, b = etas[i], etas[i + 1]
        if f[i] == 0:
            eta_k = a
        elif f[i + 1] == 0:
            continue  # picked up as the left end of the next bracket
        else:
            eta_k = brentq(s11_at, a, b, xtol=1e-14, rtol=4 * np.finfo(float).eps, maxiter=200)
        d_eta = 1e-5 * max(eta_k, 1.)
        fp, fm = _s11_imaginary_axis(E0, grid, np.array([eta_k + d_eta, eta_k - d_eta]), method).real
        slope = (fp - fm) / (2. * d_eta)
        if abs(slope) < tol_simple:
            raise ValueError('non-simple zero (violates Assumption 1)')
        residual = abs(s11_at(eta_k))
        if residual > 1e-10:
            logger.warning('|s11| = {:.2e} at refined eigenvalue i*{:.10f}.'.format(residual, eta_k))
        zeros.append(1j * eta_k)
    logger.info('Found {} eigenvalue(s) below eta_max={:.4f}.'.format(len(zeros), eta_max))
    return sorted(zeros, key=lambda z: z.imag)
