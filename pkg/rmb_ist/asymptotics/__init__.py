from .cone import (cone_decay_rate, cone_interval, ConeSpectrum, fold_outside_triangle, modified_norming,
                   select_cone_spectrum)
from .delta import delta_at, nu_at, nu_of
from .prediction import AsymptoticPrediction, asymptotic_fields, ConeAsymptotics, fit_decay_slope
from .radiation import beta12_delta0A, gamma_route_modulus, phase_constants, radiation_correction
from .stationary import signature_G, stationary_beta, stationary_points

__all__ = [
    "cone_decay_rate",
    "cone_interval",
    "ConeSpectrum",
    "fold_outside_triangle",
    "modified_norming",
    "select_cone_spectrum",
    "delta_at",
    "nu_at",
    "nu_of",
    "AsymptoticPrediction",
    "asymptotic_fields",
    "ConeAsymptotics",
    "fit_decay_slope",
    "beta12_delta0A",
    "gamma_route_modulus",
    "phase_constants",
    "radiation_correction",
    "signature_G",
    "stationary_beta",
    "stationary_points"
]
