import logging
import numpy as np
from typing import Iterable, Optional, Sequence, Tuple
from rmb_ist.base import NumericalError
from rmb_ist.core.norms import bloch_norm_defect
from rmb_ist.core.types import Grid, SpatialField
from rmb_ist.soliton.residue import (as_spectral_pairs, assemble_M, default_triangle_mask, Pole, PoleSolution,
                                     recover_b, residue_system, SIGMA_3)

logger = logging.getLogger(__name__)

TOL_REAL = 1e-10


def _rho(P: np.ndarray, Q: np.ndarray, a: np.ndarray, b: np.ndarray, z0: float) -> np.ndarray:
    M = assemble_M(P, Q, a, b, z0)
    return M @ SIGMA_3 @ np.linalg.inv(M)


def fields_from_residues(P: np.ndarray, Q: np.ndarray, a: np.ndarray, b: np.ndarray, mu: float) \
        -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """
    E from the 1/z coefficient of M and (s, u, r) from rho = M sigma_3 M^-1 at +-mu/2, batched over
    leading axes.

    Returns
    -------
    Complex E, s, u, r (mean of the two evaluation points) and the largest disagreement between them.
    """
    E = -4j * np.sum(b[..., 0], axis=-1)
    values = []
    for sign in (1., -1.):
        rho = _rho(P, Q, a, b, sign * mu / 2.)
        u = -rho[..., 0, 0]
        s = -.5 * (rho[..., 0, 1] + rho[..., 1, 0])
        r = -sign * (rho[..., 0, 1] - rho[..., 1, 0]) / 2j
        values.append(np.stack([s, u, r], axis=-1))
    defect = np.max(np.abs(values[0] - values[1]), axis=-1)
    s, u, r = np.moveaxis(.5 * (values[0] + values[1]), -1, 0)
    return E, s, u, r, defect


def reconstruct_fields(sol: PoleSolution, tol: float = 1e-9) -> Tuple[float, float, float, float]:
    """
    Fields (E, s, u, r) at the point (x, t) of a solved residue problem.

    Parameters
    ----------
    sol
        Solved reflectionless problem.
    tol
        Allowed disagreement between the evaluations at +mu/2 and -mu/2.

    Returns
    -------
    Real E, s, u, r.
    """
    E, s, u, r, defect = fields_from_residues(sol.P, sol.Q, sol.a, sol.b, sol.mu)
    if defect > tol:
        raise NumericalError('reconstruction inconsistency')
    out = np.array([E, s, u, r])
    if np.max(np.abs(out.imag)) > TOL_REAL:
        logger.warning('Reconstructed fields carry imaginary parts up to {:.2e}.'.format(np.max(np.abs(out.imag))))
    return tuple(float(v) for v in out.real)


def nsoliton_field(poles: Sequence[Pole], triangle: Optional[Iterable[int]], grid: Grid, t: float, mu: float,
                   tol: float = 1e-9) -> SpatialField:
    """
    Reflectionless N-soliton fields on a grid.

    Parameters
    ----------
    poles
        Spectral pairs (z_k, c_k).
    triangle
        Gauge index set used at every grid point. When None, each point uses the well-conditioned set
        {k : x + t / (4 eta_k^2 + mu^2) < 0}.
    grid
        Spatial grid.
    t
        Time.
    mu
        Resonance parameter.
    tol
        Allowed disagreement between the +-mu/2 evaluations.

    Returns
    -------
    SpatialField at time t.
    """
    pairs = as_spectral_pairs(poles)
    if not pairs:
        return SpatialField.ground_state(grid, t)
    x = grid.x
    z = np.array([p.z for p in pairs])
    c = np.array([p.c for p in pairs])
    tri = default_triangle_mask(pairs, x, t, mu, triangle)
    P, Q, g, h, A, rhs = residue_system(z, c, tri, x, t, mu)
    try:
        a = np.linalg.solve(A, rhs)
    except np.linalg.LinAlgError:
        raise NumericalError('degenerate pole configuration')
    b = recover_b(P, Q, h, a)
    E, s, u, r, defect = fields_from_residues(P, Q, a, b, mu)
    if np.max(defect) > tol:
        raise NumericalError('reconstruction inconsistency')
    field = SpatialField(grid, E.real, s.real, u.real, r.real, t)
    bloch = bloch_norm_defect(field)
    if bloch > 1e-10:
        logger.warning('Bloch defect {:.2e} in the {}-soliton field at t={}.'.format(bloch, len(pairs), t))
    return field
