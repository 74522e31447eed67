from dataclasses import dataclass
import numpy as np
from scipy.interpolate import CubicSpline
from typing import Dict


@dataclass(frozen=True, eq=False)
class ContourSamples:
    """
    Samples of the modified reflection coefficient on the real line minus two small discs around +-mu/2,
    joined by the upper semicircular arcs. `segment` labels every point with 'real', 'arc+' or 'arc-'.
    """
    z: np.ndarray
    values: np.ndarray
    segment: np.ndarray
    alpha: np.ndarray

    def arc(self, side: str) -> Dict[str, np.ndarray]:
        mask = self.segment == side
        return {'z': self.z[mask], 'values': self.values[mask], 'alpha': self.alpha[mask]}


def evolution_factor(z: np.ndarray, mu: float, t: float) -> np.ndarray:
    """ exp(-2 i z t / (4 z^2 - mu^2)). """
    z = np.asarray(z, dtype=complex)
    return np.exp(-2j * z * t / (4. * z ** 2 - mu ** 2))


def arc_decay_exponent(mu: float, kappa: float, alpha: np.ndarray, t: float, side: int = 1) -> np.ndarray:
    """
    Exponent q with |r~| = |r(Re z)| exp(-q) on the arc z = side * mu / 2 + kappa exp(i alpha).
    """
    alpha = np.asarray(alpha, dtype=float)
    return t * np.sin(alpha) / (4. * kappa) * \
        (1. + kappa ** 2 / (kappa ** 2 + side * 2. * mu * kappa * np.cos(alpha) + mu ** 2))


def modified_reflection(z_grid: np.ndarray, r_samples: np.ndarray, mu: float, kappa: float, t: float,
                        n_arc: int = 64) -> ContourSamples:
    """
    Time-evolved reflection coefficient r~(z, t) = r(Re z) exp(-2 i z t / (4 z^2 - mu^2)) on a contour
    that avoids the essential singularities at z = +-mu/2 through upper arcs of radius kappa.

    Parameters
    ----------
    z_grid
        Real spectral grid of the samples; must cover [-mu/2 - kappa, mu/2 + kappa].
    r_samples
        Reflection coefficient on z_grid.
    mu
        Resonance parameter.
    kappa
        Arc radius, 0 < kappa < mu.
    t
        Time, t >= 0.
    n_arc
        Number of points per arc; arc angles are interior midpoints of (0, pi).

    Returns
    -------
    ContourSamples ordered as real-line samples followed by the arc about +mu/2 and the arc about -mu/2.
    """
    if not 0 < mu <= 1:
        raise ValueError('mu must lie in (0, 1]')
    if kappa <= 0:
        raise ValueError('kappa must be positive')
    if kappa >= mu:
        raise ValueError('contour touches second singularity')
    if t < 0:
        raise ValueError('t must be non-negative')
    z_grid = np.asarray(z_grid, dtype=float)
    r_samples = np.asarray(r_samples, dtype=complex)
    if z_grid[0] > -mu / 2 - kappa or z_grid[-1] < mu / 2 + kappa:
        raise ValueError('z_grid does not cover the arcs')
    spline_re, spline_im = CubicSpline(z_grid, r_samples.real), CubicSpline(z_grid, r_samples.imag)

    keep = (np.abs(z_grid - mu / 2) >= kappa) & (np.abs(z_grid + mu / 2) >= kappa)
    alpha = np.pi * (np.arange(n_arc) + .5) / n_arc
    arc_p = mu / 2 + kappa * np.exp(1j * alpha)
    arc_m = -mu / 2 + kappa * np.exp(1j * alpha)
    z = np.concatenate([z_grid[keep].astype(complex), arc_p, arc_m])
    segment = np.array(['real'] * int(keep.sum()) + ['arc+'] * n_arc + ['arc-'] * n_arc)
    alphas = np.concatenate([np.full(int(keep.sum()), np.nan), alpha, alpha])

    base = np.concatenate([r_samples[keep], spline_re(z[keep.sum():].real) + 1j * spline_im(z[keep.sum():].real)])
    values = base if t == 0 else base * evolution_factor(z, mu, t)
    return ContourSamples(z=z, values=values, segment=segment, alpha=alphas)


def modified_reflection_arc_max(samples: ContourSamples) -> Dict[str, float]:
    """ Largest |r~| on each arc, the quantity controlled by the H^{1,1} bound as kappa shrinks. """
    return {side: float(np.max(np.abs(samples.arc(side)['values']))) for side in ('arc+', 'arc-')}
