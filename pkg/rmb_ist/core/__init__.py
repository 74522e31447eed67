from .config import Config, DEFAULT_CONFIG, load_config
from .norms import bloch_norm_defect, sobolev_norm_h11
from .types import ConeSpec, Grid, PhaseConstants, ScatteringData, SpatialField, SpectralPair

__all__ = [
    "Config",
    "DEFAULT_CONFIG",
    "load_config",
    "bloch_norm_defect",
    "sobolev_norm_h11",
    "ConeSpec",
    "Grid",
    "PhaseConstants",
    "ScatteringData",
    "SpatialField",
    "SpectralPair"
]
