from dataclasses import dataclass
import logging
import numpy as np
from typing import Optional, Sequence, Tuple
from rmb_ist.core.types import ConeSpec, ScatteringData, SpectralPair
from rmb_ist.asymptotics.stationary import signature_G

logger = logging.getLogger(__name__)

TOL_EDGE = 1e-12


@dataclass(frozen=True)
class ConeSpectrum:
    """
    Discrete spectrum seen from a ray inside a cone.

    `selected` holds the pairs whose velocity lies in the cone, `triangle_J` indexes the selected pairs
    moving faster than the ray and `outside_triangle` holds the dropped pairs moving faster than the ray.
    """
    interval: Tuple[float, float]
    selected: Tuple[SpectralPair, ...]
    triangle_J: Tuple[int, ...]
    outside_triangle: Tuple[SpectralPair, ...]
    v: float


def _eta_bound(mu: float, v: float, power: float) -> float:
    arg = -1. / v - mu ** power
    return float(np.sqrt(arg) / 2.) if arg >= 0 else np.nan


def cone_interval(mu: float, v1: float, v2: float) -> Tuple[float, float]:
    """
    Closed eta interval [eta_min, eta_max] of the solitons whose velocity -1 / (4 eta^2 + mu^2) lies in [v1, v2].
    """
    ConeSpec(0., 0., v1, v2, mu)
    interval = (_eta_bound(mu, v1, 2.), _eta_bound(mu, v2, 2.))
    # the same interval written with mu^-2 does not invert the velocity map unless mu = 1
    variant = (_eta_bound(mu, v1, -2.), _eta_bound(mu, v2, -2.))
    if not np.allclose(interval, variant, equal_nan=False):
        logger.warning('Cone interval with mu^-2 would be {}, using {} which inverts the soliton velocity.'
                       .format(variant, interval))
    return interval


def in_triangle(eta: float, mu: float, v: float) -> bool:
    """ Whether a soliton at i*eta moves faster than the ray, i.e. G(0, eta) < 0. """
    return signature_G(0., eta, mu, v) < 0


def select_cone_spectrum(data: ScatteringData, cone: ConeSpec, v: Optional[float] = None) -> ConeSpectrum:
    """
    Split the discrete spectrum into the pairs that stay inside the cone and the rest.

    Parameters
    ----------
    data
        Scattering data.
    cone
        Space-time cone.
    v
        Ray used for the gauge sets. Defaults to the mid velocity of the cone.

    Returns
    -------
    ConeSpectrum.
    """
    v = cone.v_mid if v is None else v
    eta_min, eta_max = cone_interval(cone.mu, cone.v1, cone.v2)
    selected, outside = [], []
    for pair in data.discrete:
        if eta_min - TOL_EDGE <= pair.eta <= eta_max + TOL_EDGE:
            selected.append(pair)
        elif in_triangle(pair.eta, cone.mu, v):
            outside.append(pair)
    triangle_J = tuple(k for k, p in enumerate(selected) if in_triangle(p.eta, cone.mu, v))
    return ConeSpectrum(interval=(eta_min, eta_max), selected=tuple(selected), triangle_J=triangle_J,
                        outside_triangle=tuple(outside), v=v)


def fold_outside_triangle(selected: Sequence[SpectralPair], outside: Sequence[SpectralPair]) \
        -> Tuple[SpectralPair, ...]:
    """
    Absorb dropped faster solitons into the retained norming constants, c_k -> c_k F(z_k)^-2 with
    F(z) = prod_j (z - conj z_j) / (z - z_j) over the dropped pairs.
    """
    folded = []
    for pair in selected:
        factor = 1.
        for other in outside:
            factor *= ((pair.eta + other.eta) / (pair.eta - other.eta)) ** -2
        folded.append(SpectralPair(pair.z, pair.c * factor))
    return tuple(folded)


def modified_norming(pairs: Sequence[SpectralPair], delta_values: Sequence[complex]) -> Tuple[SpectralPair, ...]:
    """ c_k -> c_k delta(z_k)^-2. """
    if len(pairs) != len(delta_values):
        raise ValueError('one delta value per pair is required')
    modified = []
    for pair, d in zip(pairs, delta_values):
        if d == 0:
            raise ValueError('delta vanishes at {}'.format(pair.z))
        modified.append(SpectralPair(pair.z, pair.c * complex(d) ** -2))
    return tuple(modified)


def cone_decay_rate(data: ScatteringData, cone: ConeSpec) -> float:
    """
    Rate kappa <= 0 such that the solitons outside the cone contribute O(exp(2 kappa t)) inside it.
    Returns -inf when every soliton is inside.
    """
    eta_min, eta_max = cone_interval(cone.mu, cone.v1, cone.v2)
    rates = []
    for pair in data.discrete:
        eta = pair.eta
        speed = 1. / (4. * eta ** 2 + cone.mu ** 2)
        if eta < eta_min - TOL_EDGE:
            rates.append(-eta * (speed + cone.v1))
        elif eta > eta_max + TOL_EDGE:
            rates.append(eta * (speed + cone.v2))
    return max(rates) if rates else -np.inf
