from .exact import collision_shifts, one_soliton_exact, soliton_center, soliton_extrema, soliton_velocity
from .reconstruct import nsoliton_field, reconstruct_fields
from .residue import evaluate_M, phase_phi, PoleSolution, solve_reflectionless, well_conditioned_triangle

__all__ = [
    "collision_shifts",
    "one_soliton_exact",
    "soliton_center",
    "soliton_extrema",
    "soliton_velocity",
    "nsoliton_field",
    "reconstruct_fields",
    "evaluate_M",
    "phase_phi",
    "PoleSolution",
    "solve_reflectionless",
    "well_conditioned_triangle"
]
