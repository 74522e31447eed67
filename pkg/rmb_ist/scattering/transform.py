import logging
import numpy as np
from typing import Dict, Optional, Tuple, Union
from rmb_ist.base import scattering_diagnostics_dict
from rmb_ist.core.norms import sobolev_norm_h11
from rmb_ist.core.types import Grid, ScatteringData, SpectralPair
from rmb_ist.scattering.coefficients import reflection_coefficient
from rmb_ist.scattering.jost import integrate_jost
from rmb_ist.scattering.norming import norming_constants
from rmb_ist.scattering.spectrum import discrete_spectrum

logger = logging.getLogger(__name__)

DEFAULT_Z_GRID = np.linspace(-8., 8., 801)
TOL_TAIL = 1e-12


def direct_transform(E0: np.ndarray, grid: Grid, z_grid: Optional[np.ndarray] = None,
                     eta_max: Optional[float] = None, n_scan: int = 400, method: str = 'magnus',
                     tol_zero: float = 1e-8, return_diagnostics: bool = False) \
        -> Union[ScatteringData, Tuple[ScatteringData, Dict]]:
    """
    Map an initial field to its scattering data.

    Parameters
    ----------
    E0
        Initial field samples, decayed below 1e-12 at both grid ends.
    grid
        Uniform grid.
    z_grid
        Real spectral grid. Defaults to 801 points on [-8, 8].
    eta_max
        Height of the eigenvalue scan on the imaginary axis.
    n_scan
        Number of eigenvalue scan samples.
    method
        Propagator used for the Jost columns.
    tol_zero
        Smallest admissible |s11| on the real grid.
    return_diagnostics
        Whether to return a diagnostics dict (unitarity, determinant and symmetry defects).

    Returns
    -------
    ScatteringData, optionally with the diagnostics dict.
    """
    E0 = np.asarray(E0, dtype=float)
    if E0.shape != (grid.n_points,):
        raise ValueError('E0 must have length n_points={}'.format(grid.n_points))
    norm = sobolev_norm_h11(E0, grid)
    if not np.isfinite(norm):
        raise ValueError('initial datum is not in H^{1,1}')
    tail = max(abs(E0[0]), abs(E0[-1]))
    if tail > TOL_TAIL:
        logger.warning('|E0| = {:.1e} at the grid ends; widen the grid for accurate scattering data.'.format(tail))
    z_grid = DEFAULT_Z_GRID if z_grid is None else np.asarray(z_grid, dtype=float)

    r, s11, s21 = reflection_coefficient(E0, grid, z_grid, tol_zero=tol_zero, method=method,
                                         return_coefficients=True)
    eigenvalues = discrete_spectrum(E0, grid, eta_max=eta_max, n_scan=n_scan, method=method)
    pairs = tuple(SpectralPair(z_k, norming_constants(E0, grid, z_k, method=method)) for z_k in eigenvalues)
    data = ScatteringData(z_grid=z_grid, r_samples=r, discrete=pairs)
    logger.info('Direct transform: {} discrete pair(s), max |r| = {:.3e}.'.format(len(pairs), np.max(np.abs(r))))
    if not return_diagnostics:
        return data

    diagnostics = scattering_diagnostics_dict()
    diagnostics['meta']['name'] = 'direct_transform'
    unitarity = np.abs(np.abs(s11) ** 2 + np.abs(s21) ** 2 - 1.)
    z_check = z_grid[[0, len(z_grid) // 2, -1]]
    det = [integrate_jost(E0, grid, z, side, method=method).det_defect for z in z_check for side in ('left', 'right')]
    diagnostics['data'].update({
        'z_grid': z_grid,
        'unitarity_defect': unitarity,
        'det_defect': float(np.max(det)),
        'symmetry_defect': data.symmetry_defect(),
        'n_discrete': len(pairs),
        'sobolev_norm': norm
    })
    return data, diagnostics
