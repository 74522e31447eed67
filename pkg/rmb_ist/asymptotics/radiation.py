"""
Constants of the t^(-1/2) radiation term produced by the stationary points +-zeta0.
"""
import logging
import numpy as np
from scipy.integrate import quad
from scipy.interpolate import CubicSpline
from scipy.special import loggamma
from typing import Sequence
from rmb_ist.core.types import PhaseConstants, SpectralPair
from rmb_ist.asymptotics.delta import check_range, nu_of, truncation_point
from rmb_ist.asymptotics.stationary import stationary_beta, stationary_points

logger = logging.getLogger(__name__)

TOL_REFLECTIONLESS = 1e-12
TOL_GAMMA_ROUTE = 1e-8


def reflection_at(z_grid: np.ndarray, r_samples: np.ndarray, z: float) -> complex:
    z_grid = np.asarray(z_grid, dtype=float)
    check_range(z_grid, z)
    r_samples = np.asarray(r_samples, dtype=complex)
    return complex(CubicSpline(z_grid, r_samples.real)(z) + 1j * CubicSpline(z_grid, r_samples.imag)(z))


def gamma_route_modulus(r_abs: float, nu: float) -> float:
    """ |beta_12| = sqrt(2 pi) exp(-pi nu / 2) / (|r| |Gamma(i nu)|), equal to sqrt(|nu|) when nu = nu(r). """
    return float(np.sqrt(2. * np.pi) * np.exp(-np.pi * nu / 2. - loggamma(1j * nu).real) / r_abs)


def log_endpoint_integral(z_grid: np.ndarray, r_samples: np.ndarray, zeta0: float, tol: float = 1e-8) -> float:
    """
    int_{zeta0}^inf log((s + zeta0) / (s - zeta0)) dnu(s), with nu' from central differences and the
    log(s - zeta0) endpoint singularity integrated against an algebraic-logarithmic weight.
    """
    z_grid = np.asarray(z_grid, dtype=float)
    nu = nu_of(r_samples)
    Z = truncation_point(z_grid, nu, zeta0)
    if Z <= zeta0:
        return 0.
    dnu = CubicSpline(z_grid, np.gradient(nu, z_grid))
    regular = quad(lambda s: np.log(s + zeta0) * dnu(s), zeta0, Z, epsabs=tol, epsrel=tol, limit=400)[0]
    singular = quad(dnu, zeta0, Z, weight='alg-loga', wvar=(0., 0.), epsabs=tol, epsrel=tol, limit=400)[0]
    return float(regular - singular)


def delta0A_phase(z_grid: np.ndarray, r_samples: np.ndarray, zeta0: float, beta: float, t: float, nu0: float,
                  triangle_poles: Sequence[SpectralPair], mu: float, tol: float = 1e-8) -> float:
    """ Argument of the unit-modulus factor delta_0^A. """
    phase = -2. * nu0 * np.log(np.sqrt(beta) / (8. * zeta0 * np.sqrt(t)))
    phase += 4. * sum(np.angle(zeta0 - p.z) for p in triangle_poles)
    phase += 2. * log_endpoint_integral(z_grid, r_samples, zeta0, tol=tol)
    phase += 16. * t * zeta0 ** 3 / (4. * zeta0 ** 2 - mu ** 2) ** 2
    return float(phase)


def beta12_delta0A(z_grid: np.ndarray, r_samples: np.ndarray, zeta0: float, t: float,
                   triangle_poles: Sequence[SpectralPair], mu: float, v: float, tol: float = 1e-8) -> complex:
    """
    Coefficient beta_12 delta_0^A of the parabolic-cylinder model at zeta0.

    Parameters
    ----------
    z_grid
        Real spectral grid.
    r_samples
        Reflection coefficient on z_grid.
    zeta0
        Real stationary point of the ray.
    t
        Time, t > 0.
    triangle_poles
        Discrete pairs moving faster than the ray.
    mu
        Resonance parameter.
    v
        Ray velocity.
    tol
        Quadrature tolerance.

    Returns
    -------
    Complex coefficient with modulus sqrt(|nu(zeta0)|).
    """
    if t <= 0:
        raise ValueError('t must be positive')
    r0 = reflection_at(z_grid, r_samples, zeta0)
    if abs(r0) < TOL_REFLECTIONLESS:
        raise ValueError('radiation term undefined for reflectionless data')
    nu0 = float(nu_of(r0))
    beta = stationary_beta(mu, v)
    modulus = np.sqrt(abs(nu0))
    gamma_modulus = gamma_route_modulus(abs(r0), nu0)
    if abs(gamma_modulus - modulus) > TOL_GAMMA_ROUTE:
        logger.warning('Gamma-route modulus {:.10f} differs from sqrt|nu| = {:.10f}.'.format(gamma_modulus, modulus))
    arg_beta12 = -np.pi / 4. - np.angle(r0) - loggamma(1j * nu0).imag
    arg = arg_beta12 + delta0A_phase(z_grid, r_samples, zeta0, beta, t, nu0, triangle_poles, mu, tol=tol)
    return complex(modulus * np.exp(1j * arg))


def phase_constants(z_grid: np.ndarray, r_samples: np.ndarray, mu: float, v: float, t: float,
                    triangle_poles: Sequence[SpectralPair] = (), tol: float = 1e-8) -> PhaseConstants:
    """ Stationary points, beta, nu(zeta0) and delta_0^A on the ray v at time t. """
    zeta0, zeta1 = stationary_points(mu, v)
    beta = stationary_beta(mu, v)
    nu0 = float(nu_of(reflection_at(z_grid, r_samples, zeta0)))
    phase = delta0A_phase(z_grid, r_samples, zeta0, beta, t, nu0, triangle_poles, mu, tol=tol)
    return PhaseConstants(zeta0=zeta0, zeta1=zeta1, beta=beta, nu0=nu0, delta0A=complex(np.exp(1j * phase)))


def radiation_correction(M_plus: np.ndarray, M_minus: np.ndarray, b: complex, beta: float, t: float,
                         tol_real: float = 1e-9) -> float:
    """
    t^(-1/2) sqrt(beta) (f1 + f2) with f1 = (M(zeta0) [[0, b], [conj b, 0]] M(zeta0)^-1)_12 and f2 the
    mirrored expression at -zeta0.
    """
    bc = np.conj(b)
    f1 = (M_plus @ np.array([[0., b], [bc, 0.]]) @ np.linalg.inv(M_plus))[0, 1]
    f2 = (M_minus @ np.array([[0., bc], [b, 0.]]) @ np.linalg.inv(M_minus))[0, 1]
    value = np.sqrt(beta / t) * (f1 + f2)
    if abs(value.imag) > tol_real * max(1., abs(value)):
        logger.warning('Radiation correction has imaginary part {:.2e}.'.format(value.imag))
    return float(value.real)
