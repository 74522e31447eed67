"""
Reflectionless Riemann-Hilbert problem with simple poles at z_k = i eta_k and conj(z_k).

The solution is written as partial fractions,

    M(z) = I + [ sum_p a_p / (z - p) | sum_q b_q / (z - q) ],

where the first column has poles P = {z_k : k not in T} + {conj z_k : k in T} and the second column
has poles Q = {conj z_k : k not in T} + {z_k : k in T}. T is the gauge index set (`triangle`).
The residue conditions a_p = g_p M[:, 1](p) and b_q = h_q M[:, 0](q) are solved for a after
eliminating b.
"""
from dataclasses import dataclass
import logging
import numpy as np
from scipy import linalg
from typing import Iterable, Optional, Sequence, Tuple, Union
from rmb_ist.base import NumericalError
from rmb_ist.core.types import SpectralPair

logger = logging.getLogger(__name__)

LOG_CLAMP = 700.
COND_MAX = 1e12
SIGMA_2 = np.array([[0., -1j], [1j, 0.]])
SIGMA_3 = np.diag([1., -1.]).astype(complex)

Pole = Union[SpectralPair, Tuple[complex, complex]]


def phase_phi(z: Union[complex, np.ndarray], x: Union[float, np.ndarray], t: float, mu: float) \
        -> Union[complex, np.ndarray]:
    """
    Phase phi(z; x, t) = z t / (4 z^2 - mu^2) - z x.

    Parameters
    ----------
    z
        Spectral parameter(s), away from +-mu/2.
    x
        Position(s); broadcast against z.
    t
        Time.
    mu
        Resonance parameter.

    Returns
    -------
    Phase with the broadcast shape of z and x.
    """
    z = np.asarray(z, dtype=complex)
    denom = 4. * z ** 2 - mu ** 2
    if np.any(np.abs(denom) < 1e-14 * max(mu ** 2, 1.)):
        raise ValueError('phase singular at ±μ/2')
    phi = z * t / denom - z * x
    return phi[()] if phi.ndim == 0 else phi


def as_spectral_pairs(poles: Iterable[Pole]) -> Tuple[SpectralPair, ...]:
    pairs = tuple(p if isinstance(p, SpectralPair) else SpectralPair(*p) for p in poles)
    etas = [p.eta for p in pairs]
    if len(set(etas)) != len(etas):
        raise ValueError('pole locations must be distinct')
    return pairs


def check_triangle(triangle: Iterable[int], n: int) -> Tuple[int, ...]:
    triangle = tuple(sorted(set(int(k) for k in triangle)))
    if any(k < 0 or k >= n for k in triangle):
        raise ValueError('triangle indices must lie in [0, {})'.format(n))
    return triangle


def well_conditioned_triangle(poles: Iterable[Pole], x: float, t: float, mu: float) -> Tuple[int, ...]:
    """
    Gauge set {k : x + t / (4 eta_k^2 + mu^2) < 0} for which every trigger factor stays bounded.
    For t > 0 this is the set of solitons with G(0, eta_k) < 0 on the ray v = x / t.
    """
    pairs = as_spectral_pairs(poles)
    return tuple(k for k, p in enumerate(pairs) if x + t / (4. * p.eta ** 2 + mu ** 2) < 0)


def _clamp(log_values: np.ndarray) -> np.ndarray:
    return np.clip(log_values.real, -LOG_CLAMP, LOG_CLAMP) + 1j * log_values.imag


def _log_blaschke(u: np.ndarray, z: np.ndarray) -> np.ndarray:
    """ log((u_k - conj z_j) / (u_k - z_j)) with the diagonal set to zero. """
    with np.errstate(divide='ignore', invalid='ignore'):
        L = np.log((u[:, None] - np.conj(z)[None, :]) / (u[:, None] - z[None, :]))
    np.fill_diagonal(L, 0.)
    return L


def residue_system(z: np.ndarray, c: np.ndarray, tri: np.ndarray, x: np.ndarray, t: float, mu: float):
    """
    Pole locations, trigger factors and the eliminated linear system, batched over positions.

    Parameters
    ----------
    z
        Eigenvalues, shape (N,).
    c
        Norming constants, shape (N,).
    tri
        Boolean gauge mask, shape (nx, N).
    x
        Positions, shape (nx,).
    t
        Time.
    mu
        Resonance parameter.

    Returns
    -------
    P, Q, g, h of shape (nx, N), the system matrix (nx, N, N) and right-hand side (nx, N, 2).
    """
    zb, cb = np.conj(z), np.conj(c)
    L = _log_blaschke(z, z)
    Lb = _log_blaschke(zb, z)
    S = np.sum(tri[:, None, :] * L[None], axis=-1)
    Sb = np.sum(tri[:, None, :] * Lb[None], axis=-1)
    xx = x[:, None]
    phi, phib = phase_phi(z[None, :], xx, t, mu), phase_phi(zb[None, :], xx, t, mu)
    log_dz, log_dzb = np.log(z - zb), np.log(zb - z)

    log_g = np.where(tri, -np.log(-cb) + 2. * log_dzb - 2. * Sb - 2j * phib,
                     np.log(c) - 2. * S - 2j * phi)
    log_h = np.where(tri, -np.log(c) + 2. * log_dz + 2. * S + 2j * phi,
                     np.log(-cb) + 2. * Sb + 2j * phib)
    g, h = np.exp(_clamp(log_g)), np.exp(_clamp(log_h))
    P = np.where(tri, zb[None, :], z[None, :])
    Q = np.where(tri, z[None, :], zb[None, :])

    D_pq = 1. / (P[:, :, None] - Q[:, None, :])
    D_qp = 1. / (Q[:, :, None] - P[:, None, :])
    K = g[:, :, None] * ((D_pq * h[:, None, :]) @ D_qp)
    A = np.eye(len(z))[None] - K
    rhs = np.stack([g * np.einsum('xpq,xq->xp', D_pq, h), g], axis=-1)
    return P, Q, g, h, A, rhs


def recover_b(P: np.ndarray, Q: np.ndarray, h: np.ndarray, a: np.ndarray) -> np.ndarray:
    """ b_q = h_q (e1 + sum_p a_p / (q - p)). """
    D_qp = 1. / (Q[..., :, None] - P[..., None, :])
    col1 = D_qp @ a
    col1[..., 0] += 1.
    return h[..., None] * col1


def assemble_M(P: np.ndarray, Q: np.ndarray, a: np.ndarray, b: np.ndarray, z0: complex) -> np.ndarray:
    """ M(z0) from partial-fraction coefficients, batched over leading axes. """
    M = np.zeros(P.shape[:-1] + (2, 2), dtype=complex)
    M[..., :, 0] = np.sum(a / (z0 - P)[..., None], axis=-2)
    M[..., :, 1] = np.sum(b / (z0 - Q)[..., None], axis=-2)
    M[..., 0, 0] += 1.
    M[..., 1, 1] += 1.
    return M


@dataclass(frozen=True, eq=False)
class PoleSolution:
    """
    Solved reflectionless problem at one space-time point.

    `a` and `b` are the residues of the first and second columns of M at the poles `P` and `Q`.
    `M1` is the coefficient of 1/z in the expansion of M at infinity.
    """
    x: float
    t: float
    mu: float
    triangle: Tuple[int, ...]
    poles: Tuple[SpectralPair, ...]
    P: np.ndarray
    Q: np.ndarray
    g: np.ndarray
    h: np.ndarray
    a: np.ndarray
    b: np.ndarray
    M1: np.ndarray
    condition: float

    @property
    def coeffs(self) -> np.ndarray:
        return np.concatenate([self.a, self.b], axis=0)

    def residue_defect(self) -> float:
        """ Largest relative mismatch of the residue conditions. """
        if not self.poles:
            return 0.
        col2_at_P = np.sum(self.b[None] / (self.P[:, None] - self.Q[None, :])[..., None], axis=1)
        col2_at_P[:, 1] += 1.
        col1_at_Q = np.sum(self.a[None] / (self.Q[:, None] - self.P[None, :])[..., None], axis=1)
        col1_at_Q[:, 0] += 1.
        res_a = np.abs(self.a - self.g[:, None] * col2_at_P) / np.maximum(1., np.abs(self.a))
        res_b = np.abs(self.b - self.h[:, None] * col1_at_Q) / np.maximum(1., np.abs(self.b))
        return float(max(res_a.max(), res_b.max()))

    def symmetry_defect(self, z: complex) -> float:
        """ max |M(z) - sigma_2 conj(M(conj z)) sigma_2|. """
        M = evaluate_M(self, z)
        M_mirror = SIGMA_2 @ np.conj(evaluate_M(self, np.conj(z))) @ SIGMA_2
        return float(np.max(np.abs(M - M_mirror)))


def solve_reflectionless(poles: Sequence[Pole], triangle: Iterable[int] = (), x: float = 0., t: float = 0.,
                         mu: float = 1.) -> PoleSolution:
    """
    Solve the residue problem of a reflectionless datum at (x, t).

    Parameters
    ----------
    poles
        Spectral pairs (z_k, c_k) with z_k on the positive imaginary axis and c_k on the imaginary axis.
    triangle
        Indices of poles whose residue conditions are gauged by F(z) = prod_{k in T} (z - conj z_k) / (z - z_k).
        The reconstructed fields do not depend on it; well chosen sets keep the system well conditioned.
    x
        Position.
    t
        Time.
    mu
        Resonance parameter.

    Returns
    -------
    PoleSolution with the residues and M1.
    """
    pairs = as_spectral_pairs(poles)
    triangle = check_triangle(triangle, len(pairs))
    if not pairs:
        empty = np.zeros(0, dtype=complex)
        return PoleSolution(x=x, t=t, mu=mu, triangle=triangle, poles=pairs, P=empty, Q=empty, g=empty, h=empty,
                            a=np.zeros((0, 2), dtype=complex), b=np.zeros((0, 2), dtype=complex),
                            M1=np.zeros((2, 2), dtype=complex), condition=1.)
    z = np.array([p.z for p in pairs])
    c = np.array([p.c for p in pairs])
    tri = np.zeros((1, len(pairs)), dtype=bool)
    tri[0, list(triangle)] = True
    P, Q, g, h, A, rhs = residue_system(z, c, tri, np.array([float(x)]), t, mu)
    condition = float(np.linalg.cond(A[0]))
    if condition > COND_MAX:
        logger.warning('Residue system at x={}, t={} has condition number {:.2e}.'.format(x, t, condition))
    try:
        a = linalg.solve(A[0], rhs[0])
    except linalg.LinAlgError:
        raise NumericalError('degenerate pole configuration')
    b = recover_b(P[0], Q[0], h[0], a)
    M1 = np.stack([a.sum(axis=0), b.sum(axis=0)], axis=-1)
    return PoleSolution(x=x, t=t, mu=mu, triangle=triangle, poles=pairs, P=P[0], Q=Q[0], g=g[0], h=h[0],
                        a=a, b=b, M1=M1, condition=condition)


def evaluate_M(sol: PoleSolution, z: complex) -> np.ndarray:
    """ M(z) = I + partial fractions at a point z away from the poles. """
    z = complex(z)
    poles = np.concatenate([sol.P, sol.Q])
    if poles.size and np.min(np.abs(z - poles)) < 1e-12 * max(1., abs(z)):
        raise ValueError('evaluation at pole')
    return assemble_M(sol.P, sol.Q, sol.a, sol.b, z)


def default_triangle_mask(pairs: Sequence[SpectralPair], x: np.ndarray, t: float, mu: float,
                          triangle: Optional[Iterable[int]] = None) -> np.ndarray:
    """ Gauge mask of shape (nx, N): the given set everywhere, or the well-conditioned set per point. """
    etas = np.array([p.eta for p in pairs])
    if triangle is None:
        return x[:, None] + t / (4. * etas[None, :] ** 2 + mu ** 2) < 0
    tri = np.zeros((x.size, len(pairs)), dtype=bool)
    tri[:, list(check_triangle(triangle, len(pairs)))] = True
    return tri
