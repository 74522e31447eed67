import json
import logging
import numpy as np
import os
import pandas as pd
from typing import Dict, List, Sequence, Tuple, Union
from rmb_ist.base import NumpyEncoder
from rmb_ist.core.types import Grid, ScatteringData, SpatialField, SpectralPair

logger = logging.getLogger(__name__)

FIELD_COLUMNS = ['x', 'E', 's', 'u', 'r']
FLOAT_FORMAT = '%.17g'
TOL_UNIFORM = 1e-9


def _prepare_dir(filepath: str) -> None:
    dirpath = os.path.dirname(filepath)
    if dirpath and not os.path.isdir(dirpath):
        logger.warning('Directory {} does not exist and is now created.'.format(dirpath))
        os.makedirs(dirpath)


def save_json(obj: Dict, filepath: str) -> None:
    """ Write a dict with numpy content to JSON. Complex numbers become [re, im] pairs. """
    _prepare_dir(filepath)
    with open(filepath, 'w') as f:
        json.dump(obj, f, cls=NumpyEncoder, indent=2)


def save_scattering_data(data: ScatteringData, filepath: str, diagnostics: Dict = None) -> None:
    """
    Save scattering data to JSON as {"z_grid", "r_re", "r_im", "discrete": [{"eta", "c_im"}]}.

    Parameters
    ----------
    data
        Reflection samples and discrete spectrum.
    filepath
        JSON file.
    diagnostics
        Optional diagnostics dict stored next to the data.
    """
    obj = {
        'z_grid': data.z_grid,
        'r_re': data.r_samples.real,
        'r_im': data.r_samples.imag,
        'discrete': [{'eta': p.eta, 'c_im': p.c.imag} for p in data.discrete]
    }
    if diagnostics is not None:
        obj['diagnostics'] = diagnostics
    save_json(obj, filepath)


def load_scattering_data(filepath: str) -> ScatteringData:
    with open(filepath, 'r') as f:
        obj = json.load(f)
    missing = {'z_grid', 'r_re', 'r_im'} - set(obj)
    if missing:
        raise ValueError('scattering data file lacks {}'.format(sorted(missing)))
    discrete = tuple(SpectralPair(1j * float(p['eta']), 1j * float(p['c_im'])) for p in obj.get('discrete', []))
    r_samples = np.asarray(obj['r_re'], dtype=float) + 1j * np.asarray(obj['r_im'], dtype=float)
    return ScatteringData(np.asarray(obj['z_grid'], dtype=float), r_samples, discrete)


def save_field(field: SpatialField, filepath: str, mu: float) -> None:
    """ Write the fields as CSV columns x,E,s,u,r below a '# t=..., mu=...' header. """
    _prepare_dir(filepath)
    df = pd.DataFrame({'x': field.grid.x, 'E': field.E, 's': field.s, 'u': field.u, 'r': field.r},
                      columns=FIELD_COLUMNS)
    with open(filepath, 'w') as f:
        f.write('# t={!r}, mu={!r}\n'.format(float(field.t), float(mu)))
        df.to_csv(f, index=False, float_format=FLOAT_FORMAT)


def _parse_header(line: str) -> Dict[str, float]:
    if not line.startswith('#'):
        raise ValueError('missing "# t=..., mu=..." header')
    header = {}
    for item in line.lstrip('#').split(','):
        key, _, value = item.strip().partition('=')
        header[key] = float(value)
    if set(header) != {'t', 'mu'}:
        raise ValueError('header must hold t and mu, got {}'.format(sorted(header)))
    return header


def uniform_grid(x: np.ndarray) -> Grid:
    """ Grid matching uniformly spaced samples x. """
    x = np.asarray(x, dtype=float)
    if x.size < 3:
        raise ValueError('at least 3 samples are required')
    grid = Grid(float(x[0]), float(x[-1]), x.size)
    if np.max(np.abs(x - grid.x)) > TOL_UNIFORM * max(1., np.max(np.abs(x))):
        raise ValueError('samples must lie on a uniform grid')
    return grid


def load_field(filepath: str) -> Tuple[SpatialField, float]:
    """
    Read a field written by `save_field`.

    Returns
    -------
    The field and the resonance parameter mu.
    """
    with open(filepath, 'r') as f:
        header = _parse_header(f.readline())
        df = pd.read_csv(f)
    missing = [c for c in FIELD_COLUMNS if c not in df.columns]
    if missing:
        raise ValueError('missing columns {}'.format(missing))
    grid = uniform_grid(df['x'].values)
    field = SpatialField(grid, df['E'].values, df['s'].values, df['u'].values, df['r'].values, header['t'])
    return field, header['mu']


def save_prediction_rows(rows: Union[Dict, List[Dict], pd.DataFrame], filepath: str,
                         columns: Sequence[str] = None) -> None:
    _prepare_dir(filepath)
    df = rows if isinstance(rows, pd.DataFrame) else pd.DataFrame(rows, columns=columns)
    df.to_csv(filepath, index=False, float_format=FLOAT_FORMAT)


def load_samples(filepath: str) -> Tuple[Grid, np.ndarray]:
    """
    Read an initial field from a CSV with columns x,E on a uniform grid.

    Parameters
    ----------
    filepath
        CSV file. Lines starting with '#' are skipped.

    Returns
    -------
    The grid of the samples and the field values.
    """
    df = pd.read_csv(filepath, comment='#', dtype=str, skipinitialspace=True)
    df.columns = [c.strip() for c in df.columns]
    missing = [c for c in ('x', 'E') if c not in df.columns]
    if missing:
        raise ValueError('missing columns {}'.format(missing))
    values = df[['x', 'E']].apply(pd.to_numeric, errors='coerce')
    bad = np.flatnonzero(values.isna().any(axis=1).values)
    if bad.size:
        row = int(bad[0])
        raise ValueError('row {}: non-numeric or missing value {}'.format(row + 1, df.iloc[row].tolist()))
    grid = uniform_grid(values['x'].values)
    return grid, values['E'].values.astype(float)
