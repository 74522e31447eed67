"""
Builtin initial fields for the direct transform and the RMB integrator.

A datum is described by a short spec string such as ``"sech amplitude=2 width=1 center=0"``,
``"zero"`` or ``"sech amplitude=2 width=1 + sech amplitude=4 width=0.5 center=10"`` (terms are summed).
"""
import logging
import numpy as np
import shlex
from typing import Callable, Dict, Tuple
from rmb_ist.core.types import Grid

logger = logging.getLogger(__name__)


def sech_datum(x: np.ndarray, amplitude: float = 2., width: float = 1., center: float = 0.) -> np.ndarray:
    """ amplitude * sech((x - center) / width), evaluated without overflow. """
    y = np.abs((np.asarray(x, dtype=float) - center) / width)
    return amplitude * 2. * np.exp(-y) / (1. + np.exp(-2. * y))


def gaussian_datum(x: np.ndarray, amplitude: float = 1., width: float = 1., center: float = 0.) -> np.ndarray:
    return amplitude * np.exp(-((np.asarray(x, dtype=float) - center) / width) ** 2)


def zero_datum(x: np.ndarray) -> np.ndarray:
    return np.zeros_like(np.asarray(x, dtype=float))


DATUM_FAMILIES = {
    'sech': sech_datum,
    'gaussian': gaussian_datum,
    'zero': zero_datum
}  # type: Dict[str, Callable]


def _parse_term(term: str) -> Tuple[Callable, Dict[str, float]]:
    tokens = shlex.split(term)
    if not tokens:
        raise ValueError('empty datum term')
    name, args = tokens[0], tokens[1:]
    if name not in DATUM_FAMILIES:
        raise ValueError('unknown datum family {}; choose from {}'.format(name, list(DATUM_FAMILIES)))
    kwargs = {}
    for arg in args:
        if '=' not in arg:
            raise ValueError('datum parameter {!r} must be key=value'.format(arg))
        key, value = arg.split('=', 1)
        try:
            kwargs[key] = float(value)
        except ValueError:
            raise ValueError('datum parameter {} has non-numeric value {!r}'.format(key, value))
    return DATUM_FAMILIES[name], kwargs


def datum_from_spec(spec: str) -> Callable[[np.ndarray], np.ndarray]:
    """
    Turn a datum spec string into a function of x.

    Parameters
    ----------
    spec
        One or more family terms joined by '+', e.g. ``"sech amplitude=1.7"``.

    Returns
    -------
    Callable evaluating the summed field on an array of positions.
    """
    terms = [_parse_term(t) for t in spec.split('+')]

    def field(x: np.ndarray) -> np.ndarray:
        total = np.zeros_like(np.asarray(x, dtype=float))
        for fn, kwargs in terms:
            try:
                total = total + fn(x, **kwargs)
            except TypeError as e:
                raise ValueError('invalid datum parameters {}: {}'.format(kwargs, e))
        return total

    return field


def sample_datum(spec: str, grid: Grid) -> np.ndarray:
    return datum_from_spec(spec)(grid.x)
