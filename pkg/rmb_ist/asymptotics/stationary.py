"""
Stationary phase points and the signature function of the phase theta(z) = z / (4 z^2 - mu^2) - z v.
"""
import numpy as np
from typing import Tuple


def check_soliton_region(mu: float, v: float) -> None:
    if not 0 < mu <= 1:
        raise ValueError('mu must lie in (0, 1]')
    if not -1. / mu ** 2 < v < 0:
        raise ValueError('outside soliton region')


def stationary_points(mu: float, v: float) -> Tuple[float, complex]:
    """
    Real stationary point zeta0 and imaginary stationary point zeta1 of theta on the ray x = v t.

    Parameters
    ----------
    mu
        Resonance parameter, 0 < mu <= 1.
    v
        Ray velocity x / t, -1/mu^2 < v < 0.

    Returns
    -------
    zeta0 > sqrt(3) mu / 2 and zeta1 = i |zeta1| with |zeta1| < mu / 2. Both solve
    (4 z^2 - mu^2)^2 v + 4 z^2 + mu^2 = 0.
    """
    check_soliton_region(mu, v)
    root = np.sqrt(1. - 8. * mu ** 2 * v)
    zeta0_sq = mu ** 2 / 4. - (1. + root) / (8. * v)
    zeta1_sq = mu ** 2 / 4. + (root - 1.) / (8. * v)
    return float(np.sqrt(zeta0_sq)), complex(0., np.sqrt(-zeta1_sq))


def stationary_quartic(z: complex, mu: float, v: float) -> complex:
    """ (4 z^2 - mu^2)^2 v + 4 z^2 + mu^2, zero exactly at the stationary points. """
    return (4. * z ** 2 - mu ** 2) ** 2 * v + 4. * z ** 2 + mu ** 2


def stationary_beta(mu: float, v: float) -> float:
    """ Local scale beta = (4 zeta0^2 - mu^2)^3 / (4 zeta0^3 + 3 mu^2 zeta0) at the real stationary point. """
    zeta0, _ = stationary_points(mu, v)
    return (4. * zeta0 ** 2 - mu ** 2) ** 3 / (4. * zeta0 ** 3 + 3. * mu ** 2 * zeta0)


def theta(z: complex, mu: float, v: float) -> complex:
    """ Phase per unit time on the ray x = v t. """
    return z / (4. * z ** 2 - mu ** 2) - z * v


def signature_G(a: float, b: float, mu: float, v: float) -> float:
    """
    G(a, b) with Re[i theta(a + i b)] = b G(a, b).

    Parameters
    ----------
    a
        Real part of z.
    b
        Imaginary part of z.
    mu
        Resonance parameter.
    v
        Ray velocity.

    Returns
    -------
    (4 (a^2 + b^2) + mu^2) / (((2a + mu)^2 + 4 b^2) ((2a - mu)^2 + 4 b^2)) + v
    """
    denom = ((2. * a + mu) ** 2 + 4. * b ** 2) * ((2. * a - mu) ** 2 + 4. * b ** 2)
    if denom == 0:
        raise ValueError('signature singular at ±μ/2')
    return (4. * (a ** 2 + b ** 2) + mu ** 2) / denom + v
