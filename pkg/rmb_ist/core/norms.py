import numpy as np
from scipy.integrate import trapezoid
from rmb_ist.core.types import Grid, SpatialField


def sobolev_norm_h11(f: np.ndarray, grid: Grid) -> float:
    """
    Discrete weighted Sobolev norm (||f||^2 + ||f'||^2 + ||x f||^2)^(1/2).

    Parameters
    ----------
    f
        Real or complex samples on the grid.
    grid
        Uniform grid the samples live on.

    Returns
    -------
    The H^{1,1} norm with f' from central differences and trapezoid quadrature.
    """
    f = np.asarray(f)
    if f.shape[0] < 3 or f.shape[0] != grid.n_points:
        raise ValueError('insufficient samples')
    x = grid.x
    df = np.gradient(f, grid.h)
    total = trapezoid(np.abs(f) ** 2, x) + trapezoid(np.abs(df) ** 2, x) + trapezoid(np.abs(x * f) ** 2, x)
    return float(np.sqrt(total))


def bloch_norm_defect(state: SpatialField) -> float:
    """ Largest pointwise violation of r^2 + s^2 + u^2 = 1. """
    return float(np.max(np.abs(state.r ** 2 + state.s ** 2 + state.u ** 2 - 1.)))
