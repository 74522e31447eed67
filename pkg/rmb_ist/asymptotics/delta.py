import logging
import numpy as np
from scipy.integrate import quad
from scipy.interpolate import CubicSpline

logger = logging.getLogger(__name__)

NU_CUTOFF = 1e-14


def nu_of(r_samples: np.ndarray) -> np.ndarray:
    """ nu = -log(1 + |r|^2) / (2 pi). """
    return -np.log1p(np.abs(np.asarray(r_samples)) ** 2) / (2. * np.pi)


def nu_spline(z_grid: np.ndarray, r_samples: np.ndarray) -> CubicSpline:
    return CubicSpline(np.asarray(z_grid, dtype=float), nu_of(r_samples))


def check_range(z_grid: np.ndarray, z: float) -> None:
    if z < z_grid[0] or z > z_grid[-1]:
        raise ValueError('extrapolation refused')


def nu_at(z_grid: np.ndarray, r_samples: np.ndarray, z: float) -> float:
    """ nu interpolated at a real point inside the sampled range. """
    z_grid = np.asarray(z_grid, dtype=float)
    check_range(z_grid, z)
    return float(min(nu_spline(z_grid, r_samples)(z), 0.))


def truncation_point(z_grid: np.ndarray, nu: np.ndarray, zeta0: float) -> float:
    """ Largest |s| on the symmetric part of the grid where |nu| is above the cutoff. """
    z_grid = np.asarray(z_grid, dtype=float)
    reach = min(-z_grid[0], z_grid[-1])
    active = (np.abs(nu) >= NU_CUTOFF) & (np.abs(z_grid) <= reach)
    if not np.any(active):
        return zeta0
    return float(min(np.max(np.abs(z_grid[active])), reach))


def delta_at(z_grid: np.ndarray, r_samples: np.ndarray, zeta0: float, z: complex, tol: float = 1e-8) -> complex:
    """
    delta(z) = exp(i int_{|s| > zeta0} nu(s) / (s - z) ds).

    Parameters
    ----------
    z_grid
        Real spectral grid, symmetric enough to cover [-Z, Z] where nu is not negligible.
    r_samples
        Reflection coefficient on z_grid.
    zeta0
        Real stationary point.
    z
        Evaluation point off R \\ [-zeta0, zeta0].
    tol
        Absolute quadrature tolerance.

    Returns
    -------
    delta(z); real and >= 1 on the imaginary axis.
    """
    z = complex(z)
    if z.imag == 0 and abs(z.real) >= zeta0:
        raise ValueError('on jump contour')
    z_grid = np.asarray(z_grid, dtype=float)
    spline = nu_spline(z_grid, r_samples)
    Z = truncation_point(z_grid, spline(z_grid), zeta0)
    if Z <= zeta0:
        return 1. + 0j

    def integrand(s: float) -> complex:
        return spline(s) / (s - z) + spline(-s) / (-s - z)

    kwargs = dict(epsabs=tol, epsrel=tol, limit=400)
    re = quad(lambda s: integrand(s).real, zeta0, Z, **kwargs)[0]
    im = quad(lambda s: integrand(s).imag, zeta0, Z, **kwargs)[0]
    return complex(np.exp(1j * (re + 1j * im)))
