from rmb_ist.core.types import SpectralPair
from .coefficients import reflection_coefficient, scattering_coefficients
from .contour import arc_decay_exponent, ContourSamples, modified_reflection, modified_reflection_arc_max
from .jost import integrate_jost, JostSolution
from .norming import norming_constants
from .spectrum import default_eta_max, discrete_spectrum
from .transform import direct_transform

__all__ = [
    "SpectralPair",
    "reflection_coefficient",
    "scattering_coefficients",
    "arc_decay_exponent",
    "ContourSamples",
    "modified_reflection",
    "modified_reflection_arc_max",
    "integrate_jost",
    "JostSolution",
    "norming_constants",
    "default_eta_max",
    "discrete_spectrum",
    "direct_transform"
]
