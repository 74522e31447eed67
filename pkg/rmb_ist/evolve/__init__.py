from .bloch import bloch_sweep
from .integrator import evolve, EvolveSpec, RMBEvolver, run_evolution, step_time

__all__ = [
    "bloch_sweep",
    "evolve",
    "EvolveSpec",
    "RMBEvolver",
    "run_evolution",
    "step_time"
]
