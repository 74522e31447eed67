from dataclasses import dataclass, field
import logging
import numpy as np
from typing import Dict, Sequence, Tuple, Union
from rmb_ist.base import BaseSolver, prediction_dict
from rmb_ist.core.types import ConeSpec, ScatteringData, SpectralPair
from rmb_ist.asymptotics.cone import (ConeSpectrum, fold_outside_triangle, in_triangle, modified_norming,
                                      select_cone_spectrum)
from rmb_ist.asymptotics.delta import delta_at, nu_of
from rmb_ist.asymptotics.radiation import (beta12_delta0A, radiation_correction, reflection_at,
                                           TOL_REFLECTIONLESS)
from rmb_ist.asymptotics.stationary import stationary_beta, stationary_points
from rmb_ist.soliton.reconstruct import reconstruct_fields
from rmb_ist.soliton.residue import evaluate_M, solve_reflectionless

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AsymptoticPrediction:
    """
    Long-time prediction at one point of a cone: the soliton ensemble (E, s, u, r) of the cone and the
    t^(-1/2) radiation correction of E. `order_estimate` is the residual decay exponent when it has been
    measured.
    """
    leading: Tuple[float, float, float, float]
    radiation: float
    order_estimate: float = np.nan
    constants: Dict = field(default_factory=dict)


@dataclass(frozen=True)
class RayData:
    """ Everything on a ray x = v t that does not depend on t. """
    v: float
    spectrum: ConeSpectrum
    zeta0: float
    zeta1: complex
    beta: float
    pairs: Tuple[SpectralPair, ...]
    triangle_poles: Tuple[SpectralPair, ...]


def ray_data(data: ScatteringData, cone: ConeSpec, v: float, tol: float = 1e-8) -> RayData:
    spectrum = select_cone_spectrum(data, cone, v)
    zeta0, zeta1 = stationary_points(cone.mu, v)
    beta = stationary_beta(cone.mu, v)
    if data.is_reflectionless:
        deltas = [1.] * len(spectrum.selected)
    else:
        deltas = [delta_at(data.z_grid, data.r_samples, zeta0, p.z, tol=tol) for p in spectrum.selected]
    pairs = modified_norming(fold_outside_triangle(spectrum.selected, spectrum.outside_triangle), deltas)
    triangle_poles = tuple(p for p in data.discrete if in_triangle(p.eta, cone.mu, v))
    return RayData(v=v, spectrum=spectrum, zeta0=zeta0, zeta1=zeta1, beta=beta, pairs=pairs,
                   triangle_poles=triangle_poles)


def _predict(data: ScatteringData, cone: ConeSpec, ray: RayData, x: float, t: float, tol: float) \
        -> AsymptoticPrediction:
    sol = solve_reflectionless(ray.pairs, ray.spectrum.triangle_J, x, t, cone.mu)
    leading = reconstruct_fields(sol)
    constants = {'zeta0': ray.zeta0, 'zeta1': ray.zeta1, 'beta': ray.beta, 'nu0': 0., 'arg_b': np.nan,
                 'n_cone': len(ray.pairs), 'v': ray.v}
    radiation = 0.
    in_range = data.z_grid[0] <= ray.zeta0 <= data.z_grid[-1]
    r0 = reflection_at(data.z_grid, data.r_samples, ray.zeta0) if in_range else 0j
    if abs(r0) >= TOL_REFLECTIONLESS:
        b = beta12_delta0A(data.z_grid, data.r_samples, ray.zeta0, t, ray.triangle_poles, cone.mu, ray.v, tol=tol)
        M_plus, M_minus = evaluate_M(sol, ray.zeta0), evaluate_M(sol, -ray.zeta0)
        radiation = radiation_correction(M_plus, M_minus, b, ray.beta, t)
        constants.update({'nu0': float(nu_of(r0)), 'arg_b': float(np.angle(b))})
    elif not in_range and not data.is_reflectionless:
        logger.warning('zeta0 = {:.4f} lies outside the spectral grid; radiation term dropped.'.format(ray.zeta0))
    return AsymptoticPrediction(leading=leading, radiation=radiation, constants=constants)


def asymptotic_fields(data: ScatteringData, cone: ConeSpec, x: float, t: float, tol: float = 1e-8) \
        -> AsymptoticPrediction:
    """
    Soliton-resolution prediction at a point of a cone.

    Parameters
    ----------
    data
        Scattering data of the initial field.
    cone
        Space-time cone containing (x, t).
    x
        Position.
    t
        Time, t > 0.
    tol
        Quadrature tolerance for delta and the radiation phase.

    Returns
    -------
    AsymptoticPrediction with the cone soliton ensemble for E, s, u, r and the radiation correction of E.
    """
    if not cone.contains(x, t):
        raise ValueError('({}, {}) is not inside the cone'.format(x, t))
    return _predict(data, cone, ray_data(data, cone, x / t, tol=tol), x, t, tol)


def fit_decay_slope(times: Sequence[float], residuals: Sequence[float]) -> float:
    """ Least-squares slope of log(residual) against log(t). """
    times, residuals = np.asarray(times, dtype=float), np.asarray(residuals, dtype=float)
    keep = (times > 0) & (residuals > 0) & np.isfinite(residuals)
    if keep.sum() < 2:
        raise ValueError('at least two positive residuals are needed to fit a slope')
    return float(np.polyfit(np.log(times[keep]), np.log(residuals[keep]), 1)[0])


class ConeAsymptotics(BaseSolver):

    def __init__(self, data: ScatteringData, cone: ConeSpec, tol: float = 1e-8) -> None:
        """
        Long-time predictor inside a space-time cone.

        Parameters
        ----------
        data
            Scattering data of the initial field.
        cone
            Space-time cone.
        tol
            Quadrature tolerance.
        """
        super().__init__()
        self.data = data
        self.cone = cone
        self.tol = tol
        self._rays = {}  # type: Dict[float, RayData]
        self.meta['mu'] = cone.mu
        self.meta['cone'] = {'x1': cone.x1, 'x2': cone.x2, 'v1': cone.v1, 'v2': cone.v2}

    def ray(self, v: float) -> RayData:
        key = round(v, 12)
        if key not in self._rays:
            self._rays[key] = ray_data(self.data, self.cone, v, tol=self.tol)
        return self._rays[key]

    def prediction_at(self, x: float, t: float) -> AsymptoticPrediction:
        if not self.cone.contains(x, t):
            raise ValueError('({}, {}) is not inside the cone'.format(x, t))
        return _predict(self.data, self.cone, self.ray(x / t), x, t, self.tol)

    def predict(self, x: Union[float, np.ndarray], t: float) -> Dict[Dict[str, str], Dict[str, np.ndarray]]:
        """
        Predict the fields at positions x inside the cone at time t.

        Parameters
        ----------
        x
            Position(s) inside the cone.
        t
            Time, t > 0.

        Returns
        -------
        Dictionary containing 'meta' and 'data' dictionaries.
        'meta' has the solver's metadata.
        'data' contains the positions, the leading fields, the radiation correction of E and the
        constants of the first ray.
        """
        x = np.atleast_1d(np.asarray(x, dtype=float))
        preds = [self.prediction_at(xi, t) for xi in x]
        leading = np.array([p.leading for p in preds]).reshape(-1, 4)
        pred = prediction_dict()
        pred['meta'] = self.meta
        pred['data'].update({
            'x': x,
            't': t,
            'E_lead': leading[:, 0],
            'E_rad': np.array([p.radiation for p in preds]),
            's': leading[:, 1],
            'u': leading[:, 2],
            'r': leading[:, 3],
            'constants': preds[0].constants if preds else {}
        })
        return pred
