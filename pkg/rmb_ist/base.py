from abc import ABC, abstractmethod
import copy
import json
import numpy as np
from typing import Dict
from rmb_ist.version import __version__

DEFAULT_META = {
    "name": None,
    "version": __version__,
    "mu": None  # resonance parameter of the medium
}  # type: Dict


class NumericalError(RuntimeError):
    """ Raised when an integration, linear solve or reconstruction fails numerically. """


def scattering_diagnostics_dict():
    data = {
        'unitarity_defect': None,
        'det_defect': None,
        'symmetry_defect': None,
        'n_discrete': None
    }
    return copy.deepcopy({"data": data, "meta": DEFAULT_META})


def prediction_dict():
    data = {
        'x': None,
        't': None,
        'E_lead': None,
        'E_rad': None,
        's': None,
        'u': None,
        'r': None,
        'constants': None
    }
    return copy.deepcopy({"data": data, "meta": DEFAULT_META})


def evolve_manifest_dict():
    data = {
        'spec': None,
        'record_times': None,
        'bloch_defect': None,
        'boundary_defect': None,
        'wall_time': None
    }
    return copy.deepcopy({"data": data, "meta": DEFAULT_META})


def compare_report_dict():
    data = {
        'times': None,
        'residual_lead': None,
        'residual_rad': None,
        'slope_lead': None,
        'slope_rad': None,
        'rad_steeper': None
    }
    return copy.deepcopy({"data": data, "meta": DEFAULT_META})


class BaseSolver(ABC):
    """ Base class for the stateful solvers of the toolkit. """

    def __init__(self):
        self.meta = copy.deepcopy(DEFAULT_META)
        self.meta['name'] = self.__class__.__name__

    def __repr__(self):
        return self.__class__.__name__

    @property
    def meta(self) -> Dict:
        return self._meta

    @meta.setter
    def meta(self, value: Dict):
        if not isinstance(value, dict):
            raise TypeError('meta must be a dictionary')
        self._meta = value

    @abstractmethod
    def predict(self, *args, **kwargs):
        pass


class NumpyEncoder(json.JSONEncoder):
    def default(self, obj):
        if isinstance(obj, np.integer):
            return int(obj)
        elif isinstance(obj, np.floating):
            return float(obj)
        elif isinstance(obj, np.bool_):
            return bool(obj)
        elif isinstance(obj, (complex, np.complexfloating)):
            return [float(obj.real), float(obj.imag)]
        elif isinstance(obj, (np.ndarray,)):
            if np.iscomplexobj(obj):
                return np.stack([obj.real, obj.imag], axis=-1).tolist()
            return obj.tolist()
        return json.JSONEncoder.default(self, obj)
