"""
Flat key=value configuration with section prefixes, e.g. ``grid.h = 0.01`` or ``cone.v1 = -0.55``.
"""
from dataclasses import dataclass, fields, replace
import logging
import numpy as np
import os
from typing import Dict, Iterable, Optional, Tuple
from rmb_ist.core.types import ConeSpec, Grid

logger = logging.getLogger(__name__)

DEFAULT_CONFIG = {
    # spatial truncation used by direct scattering
    'grid.x_min': -30.,
    'grid.x_max': 30.,
    'grid.h': 0.01,
    # spectral grid
    'zgrid.min': -8.,
    'zgrid.max': 8.,
    'zgrid.n': 801,
    'medium.mu': 1.,
    # builtin datum spec or 'samples' (then datum.path is read)
    'datum': 'sech amplitude=2 width=1',
    'datum.path': '',
    'scatter.eta_max': 0.,  # 0 selects 1/4 * int |E0| + 1
    'scatter.n_scan': 400,
    'ode.method': 'magnus',
    'tol.bloch': 1e-8,
    'tol.bdy': 1e-6,
    'tol.det': 1e-10,
    'tol.zero': 1e-8,
    'tol.quad': 1e-8,
    'evolve.x_min': -60.,
    'evolve.x_max': 30.,
    'evolve.h': 0.02,
    'evolve.dt': 0.01,
    'evolve.t_end': 10.,
    'evolve.record_times': (10.,),
    'cone.x1': -1.,
    'cone.x2': 1.,
    'cone.v1': -0.55,
    'cone.v2': -0.45,
    'contour.kappa': 0.1,
    'contour.t': 1.,
    'contour.n_arc': 64,
    'solitons.times': (0.,),
    'asymptotics.times': (25., 50., 100., 200.),
    'compare.times': (25., 50., 100., 200.),
    'out.dir': 'out'
}  # type: Dict

ODE_METHODS = ('magnus', 'rk4')


def _attr(key: str) -> str:
    return key.replace('.', '_')


@dataclass(frozen=True)
class Config:
    grid_x_min: float = DEFAULT_CONFIG['grid.x_min']
    grid_x_max: float = DEFAULT_CONFIG['grid.x_max']
    grid_h: float = DEFAULT_CONFIG['grid.h']
    zgrid_min: float = DEFAULT_CONFIG['zgrid.min']
    zgrid_max: float = DEFAULT_CONFIG['zgrid.max']
    zgrid_n: int = DEFAULT_CONFIG['zgrid.n']
    medium_mu: float = DEFAULT_CONFIG['medium.mu']
    datum: str = DEFAULT_CONFIG['datum']
    datum_path: str = DEFAULT_CONFIG['datum.path']
    scatter_eta_max: float = DEFAULT_CONFIG['scatter.eta_max']
    scatter_n_scan: int = DEFAULT_CONFIG['scatter.n_scan']
    ode_method: str = DEFAULT_CONFIG['ode.method']
    tol_bloch: float = DEFAULT_CONFIG['tol.bloch']
    tol_bdy: float = DEFAULT_CONFIG['tol.bdy']
    tol_det: float = DEFAULT_CONFIG['tol.det']
    tol_zero: float = DEFAULT_CONFIG['tol.zero']
    tol_quad: float = DEFAULT_CONFIG['tol.quad']
    evolve_x_min: float = DEFAULT_CONFIG['evolve.x_min']
    evolve_x_max: float = DEFAULT_CONFIG['evolve.x_max']
    evolve_h: float = DEFAULT_CONFIG['evolve.h']
    evolve_dt: float = DEFAULT_CONFIG['evolve.dt']
    evolve_t_end: float = DEFAULT_CONFIG['evolve.t_end']
    evolve_record_times: Tuple[float, ...] = DEFAULT_CONFIG['evolve.record_times']
    cone_x1: float = DEFAULT_CONFIG['cone.x1']
    cone_x2: float = DEFAULT_CONFIG['cone.x2']
    cone_v1: float = DEFAULT_CONFIG['cone.v1']
    cone_v2: float = DEFAULT_CONFIG['cone.v2']
    contour_kappa: float = DEFAULT_CONFIG['contour.kappa']
    contour_t: float = DEFAULT_CONFIG['contour.t']
    contour_n_arc: int = DEFAULT_CONFIG['contour.n_arc']
    solitons_times: Tuple[float, ...] = DEFAULT_CONFIG['solitons.times']
    asymptotics_times: Tuple[float, ...] = DEFAULT_CONFIG['asymptotics.times']
    compare_times: Tuple[float, ...] = DEFAULT_CONFIG['compare.times']
    out_dir: str = DEFAULT_CONFIG['out.dir']

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if f.name.startswith('tol_') and not value > 0:
                raise ValueError('tolerance {} must be positive'.format(f.name))
        for name in ('grid_h', 'evolve_h', 'evolve_dt', 'contour_t', 'contour_kappa'):
            if not getattr(self, name) > 0:
                raise ValueError('step size {} must be positive'.format(name))
        if not 0 < self.medium_mu <= 1:
            raise ValueError('medium.mu must lie in (0, 1]')
        if self.zgrid_n < 3 or self.contour_n_arc < 2 or self.scatter_n_scan < 2:
            raise ValueError('zgrid.n, contour.n_arc and scatter.n_scan are too small')
        if self.ode_method not in ODE_METHODS:
            raise ValueError('ode.method must be one of {}'.format(ODE_METHODS))
        if self.scatter_eta_max < 0 or self.evolve_t_end < 0:
            raise ValueError('scatter.eta_max and evolve.t_end must be non-negative')

    def scattering_grid(self) -> Grid:
        return Grid.from_step(self.grid_x_min, self.grid_x_max, self.grid_h)

    def evolve_grid(self) -> Grid:
        return Grid.from_step(self.evolve_x_min, self.evolve_x_max, self.evolve_h)

    def z_grid(self) -> np.ndarray:
        return np.linspace(self.zgrid_min, self.zgrid_max, self.zgrid_n)

    def cone(self) -> ConeSpec:
        return ConeSpec(self.cone_x1, self.cone_x2, self.cone_v1, self.cone_v2, self.medium_mu)

    @property
    def eta_max(self) -> Optional[float]:
        return self.scatter_eta_max if self.scatter_eta_max > 0 else None


_FIELD_TYPES = {f.name: f.type for f in fields(Config)}


def _convert(key: str, raw: str):
    name = _attr(key)
    if name not in _FIELD_TYPES:
        raise KeyError('unknown config key {}'.format(key))
    kind = _FIELD_TYPES[name]
    try:
        if kind is float:
            return float(raw)
        if kind is int:
            return int(raw)
        if kind is str:
            return raw
        return tuple(float(v) for v in raw.split(',') if v.strip())
    except ValueError:
        raise ValueError('invalid value {!r} for config key {}'.format(raw, key))


def parse_config_lines(lines: Iterable[str]) -> Dict[str, str]:
    """ Parse ``key = value`` lines; '#' starts a comment and blank lines are skipped. """
    entries = {}
    for n, line in enumerate(lines, start=1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        if '=' not in line:
            raise ValueError('line {}: expected key=value, got {!r}'.format(n, line))
        key, value = line.split('=', 1)
        entries[key.strip()] = value.strip()
    return entries


def load_config(filepath: Optional[str] = None, overrides: Iterable[str] = ()) -> Config:
    """
    Build a Config from an optional key=value file and a list of ``key=value`` overrides.

    Parameters
    ----------
    filepath
        Path to the config file. Defaults apply when None.
    overrides
        Strings of the form ``key=value`` applied after the file.

    Returns
    -------
    Validated configuration.
    """
    entries = {}
    if filepath is not None:
        if not os.path.isfile(filepath):
            raise FileNotFoundError('config file {} does not exist'.format(filepath))
        with open(filepath) as f:
            entries.update(parse_config_lines(f))
    entries.update(parse_config_lines(overrides))
    values = {_attr(k): _convert(k, v) for k, v in entries.items()}
    logger.debug('Config overrides: {}'.format(values))
    return replace(Config(), **values)
