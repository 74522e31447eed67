from . import asymptotics, core, evolve, scattering, soliton, utils
from .version import __version__  # noqa F401

__all__ = ["asymptotics", "core", "evolve", "scattering", "soliton", "utils"]
