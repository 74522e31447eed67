"""
Closed-form single soliton of the RMB system and the kinematics of multi-soliton collisions.
"""
import numpy as np
from typing import Dict, Sequence, Tuple, Union

ArrayLike = Union[float, np.ndarray]


def _check(eta: float, mu: float) -> None:
    if eta <= 0:
        raise ValueError('eta must be positive')
    if not 0 < mu <= 1:
        raise ValueError('mu must lie in (0, 1]')


def soliton_velocity(eta: float, mu: float) -> float:
    _check(eta, mu)
    return -1. / (4. * eta ** 2 + mu ** 2)


def soliton_center(eta: float, c: float, mu: float, t: float) -> float:
    """ Position of the peak of |E| at time t. """
    _check(eta, mu)
    if c == 0:
        raise ValueError('c must be nonzero')
    return soliton_velocity(eta, mu) * t - np.log(2. * eta / abs(c)) / (2. * eta)


def soliton_extrema(eta: float, mu: float) -> Dict[str, float]:
    """ Largest values of E, s, u and r along a soliton with positive norming constant. """
    _check(eta, mu)
    d = 4. * eta ** 2 + mu ** 2
    return {
        'E': 4. * eta,
        's': 4. * eta ** 2 / d,
        'u': (4. * eta ** 2 - mu ** 2) / d,
        'r': 4. * eta * mu / d
    }


def one_soliton_exact(eta: float, c: float, mu: float, x: ArrayLike, t: float) \
        -> Tuple[ArrayLike, ArrayLike, ArrayLike, ArrayLike]:
    """
    Exact single soliton with eigenvalue i*eta and real norming constant c (residue constant i*c).

    Parameters
    ----------
    eta
        Imaginary part of the eigenvalue.
    c
        Real nonzero norming constant; its sign flips E, s and r.
    mu
        Resonance parameter.
    x
        Position(s).
    t
        Time.

    Returns
    -------
    E, s, u, r at (x, t).
    """
    _check(eta, mu)
    if c == 0:
        raise ValueError('c must be nonzero')
    sign = np.sign(c)
    d = 4. * eta ** 2 + mu ** 2
    lam = 2. * eta * (t / d + np.asarray(x, dtype=float))
    theta = lam + np.log(2. * eta / abs(c))
    # sech and tanh written to stay finite for large |theta|
    sech = 1. / np.cosh(np.clip(theta, -700., 700.))
    tanh = np.tanh(theta)
    E = 4. * eta * sign * sech
    # 8 eta^2 sinh / (d cosh^2) = 8 eta^2 tanh sech / d
    s = sign * 8. * eta ** 2 * tanh * sech / d
    u = -1. + 8. * eta ** 2 * sech ** 2 / d
    r = sign * 4. * eta * mu * sech / d
    return E, s, u, r


def collision_shifts(etas: Sequence[float]) -> np.ndarray:
    """
    Net displacement of each soliton between t -> -inf and t -> +inf caused by the others.

    The faster soliton of a pair (smaller eta, more negative velocity) is pushed ahead and the slower one
    is held back. The shifts satisfy sum_k eta_k dx_k = 0.
    """
    etas = np.asarray(etas, dtype=float)
    if np.any(etas <= 0):
        raise ValueError('eta must be positive')
    if len(np.unique(etas)) != len(etas):
        raise ValueError('eigenvalues must be distinct')
    shifts = np.zeros(len(etas))
    for k, ek in enumerate(etas):
        for j, ej in enumerate(etas):
            if j == k:
                continue
            L = np.log((ek + ej) / abs(ek - ej))
            shifts[k] += L if ej < ek else -L
        shifts[k] /= ek
    return shifts
