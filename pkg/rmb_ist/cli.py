"""
Command-line front end: ``rmb-ist <verb> [--config PATH] [--out DIR] [--set key=value ...] [--verbose]``.

Every verb is backed by a ``run_<verb>(config)`` function returning a dict, so the pipeline can be driven
without a process. Exit codes: 0 on success, 2 on invalid input and 3 on numerical failure.
"""
import argparse
from dataclasses import replace
import logging
import numpy as np
from numpy.linalg import LinAlgError
import os
import sys
from typing import Callable, Dict, List, Optional, Sequence, Tuple
from rmb_ist.asymptotics import ConeAsymptotics, fit_decay_slope, gamma_route_modulus, nu_of, stationary_beta, \
    stationary_points
from rmb_ist.asymptotics.stationary import stationary_quartic
from rmb_ist.base import compare_report_dict, NumericalError
from rmb_ist.core.config import Config, load_config
from rmb_ist.core.types import ConeSpec, Grid, SpatialField, SpectralPair
from rmb_ist.datasets import sample_datum, sech_datum
from rmb_ist.evolve import bloch_sweep, EvolveSpec, RMBEvolver
from rmb_ist.evolve.integrator import EDGE_WIDTH
from rmb_ist.scattering import (arc_decay_exponent, direct_transform, discrete_spectrum, modified_reflection,
                                modified_reflection_arc_max, norming_constants)
from rmb_ist.soliton import nsoliton_field, one_soliton_exact
from rmb_ist.utils import load_samples, save_field, save_json, save_prediction_rows, save_scattering_data

logger = logging.getLogger(__name__)

VERBS = ('scatter', 'solitons', 'asymptotics', 'evolve', 'compare', 'selfcheck')
MAX_CONE_POINTS = 201
# residuals below this are at the level of the PDE scheme and carry no decay rate
SCHEME_LEVEL = 2e-3
PREDICTION_COLUMNS = ['x', 't', 'E_lead', 'E_rad', 's', 'u', 'r']


def _out(config: Config, name: str) -> str:
    return os.path.join(config.out_dir, name)


def _time_label(t: float) -> str:
    return 'field_t={:g}.csv'.format(t)


def datum_on_grid(config: Config, grid: Optional[Grid] = None) -> Tuple[Grid, np.ndarray]:
    """
    Initial field of the config. Samples files keep their own grid unless a grid is given, in which case
    they are interpolated onto it and extended by zero.
    """
    if config.datum.strip() == 'samples':
        if not config.datum_path:
            raise ValueError('datum = samples requires datum.path')
        samples_grid, E = load_samples(config.datum_path)
        if grid is None:
            return samples_grid, E
        return grid, np.interp(grid.x, samples_grid.x, E, left=0., right=0.)
    grid = config.scattering_grid() if grid is None else grid
    return grid, sample_datum(config.datum, grid)


def _scattering_data(config: Config, return_diagnostics: bool = False):
    grid, E0 = datum_on_grid(config)
    return direct_transform(E0, grid, z_grid=config.z_grid(), eta_max=config.eta_max, n_scan=config.scatter_n_scan,
                            method=config.ode_method, tol_zero=config.tol_zero, return_diagnostics=return_diagnostics)


def _check_times(times: Sequence[float], name: str) -> List[float]:
    times = sorted(float(t) for t in times)
    if not times or times[0] <= 0:
        raise ValueError('{} must hold positive times'.format(name))
    return times


def run_scatter(config: Config, verbose: bool = False) -> Dict:
    """
    Direct transform of the configured datum. Writes scattering.json, diagnostics.csv and contour.csv with the
    time-evolved reflection coefficient on the deformed contour at contour.t.
    """
    data, diagnostics = _scattering_data(config, return_diagnostics=True)
    diagnostics['meta']['mu'] = config.medium_mu
    save_scattering_data(data, _out(config, 'scattering.json'), diagnostics=diagnostics)
    d = diagnostics['data']
    save_prediction_rows({'z': data.z_grid, 'abs_r': np.abs(data.r_samples),
                          'unitarity_defect': d['unitarity_defect'],
                          'det_defect': np.full(data.z_grid.shape, d['det_defect'])},
                         _out(config, 'diagnostics.csv'), columns=['z', 'abs_r', 'unitarity_defect', 'det_defect'])
    mu, kappa = config.medium_mu, config.contour_kappa
    contour = None
    if data.z_grid[0] <= -mu / 2 - kappa and data.z_grid[-1] >= mu / 2 + kappa and kappa < mu:
        contour = modified_reflection(data.z_grid, data.r_samples, mu, kappa, config.contour_t, config.contour_n_arc)
        save_prediction_rows({'z_re': contour.z.real, 'z_im': contour.z.imag, 'segment': contour.segment,
                              'abs_r_tilde': np.abs(contour.values)}, _out(config, 'contour.csv'),
                             columns=['z_re', 'z_im', 'segment', 'abs_r_tilde'])
    else:
        logger.warning('Spectral grid does not cover the arcs of radius {} around +-{}; contour.csv skipped.'
                       .format(kappa, mu / 2))
    return {'data': data, 'diagnostics': diagnostics, 'contour': contour}


def run_solitons(config: Config, verbose: bool = False) -> Dict:
    """ N-soliton fields built from the discrete spectrum of the datum, one CSV per time in solitons.times. """
    grid, E0 = datum_on_grid(config)
    eigenvalues = discrete_spectrum(E0, grid, eta_max=config.eta_max, n_scan=config.scatter_n_scan,
                                    method=config.ode_method)
    pairs = tuple(SpectralPair(z, norming_constants(E0, grid, z, method=config.ode_method)) for z in eigenvalues)
    logger.info('Building the {}-soliton part of the datum; its radiation is ignored.'.format(len(pairs)))
    field_grid = config.evolve_grid()
    fields = []
    for t in sorted(config.solitons_times):
        field = nsoliton_field(pairs, None, field_grid, t, config.medium_mu)
        save_field(field, _out(config, _time_label(t)), config.medium_mu)
        fields.append(field)
    return {'pairs': pairs, 'fields': fields}


def cone_points(cone: ConeSpec, grid: Grid, t: float, max_points: int = MAX_CONE_POINTS) -> np.ndarray:
    """ Indices of grid points inside the cone at time t, evenly thinned to at most max_points. """
    x = grid.x
    idx = np.flatnonzero((x >= cone.x1 + cone.v1 * t) & (x <= cone.x2 + cone.v2 * t))
    if idx.size > max_points:
        idx = idx[np.unique(np.linspace(0, idx.size - 1, max_points).round().astype(int))]
    return idx


def run_asymptotics(config: Config, verbose: bool = False) -> Dict:
    """ Leading and radiation terms inside the cone at asymptotics.times; prediction.csv plus a constants file. """
    data = _scattering_data(config)
    cone = config.cone()
    model = ConeAsymptotics(data, cone, tol=config.tol_quad)
    rows, constants = [], []
    for t in _check_times(config.asymptotics_times, 'asymptotics.times'):
        x = np.unique(np.linspace(cone.x1 + cone.v1 * t, cone.x2 + cone.v2 * t, MAX_CONE_POINTS))
        pred = model.predict(x, t)['data']
        for k in range(x.size):
            rows.append({'x': pred['x'][k], 't': t, 'E_lead': pred['E_lead'][k], 'E_rad': pred['E_rad'][k],
                         's': pred['s'][k], 'u': pred['u'][k], 'r': pred['r'][k]})
        constants.append(dict(pred['constants'], t=t))
    save_prediction_rows(rows, _out(config, 'prediction.csv'), columns=PREDICTION_COLUMNS)
    sidecar = {'meta': model.meta, 'data': {'constants': constants, 'n_discrete': len(data.discrete)}}
    save_json(sidecar, _out(config, 'prediction.json'))
    return {'rows': rows, 'constants': constants}


def _evolver(config: Config, record_times: Sequence[float], t_end: float, verbose: bool) -> RMBEvolver:
    spec = EvolveSpec(config.evolve_grid(), config.medium_mu, config.evolve_dt, t_end, tuple(record_times),
                      method=config.ode_method)
    return RMBEvolver(spec, verbose=verbose, tol_bloch=config.tol_bloch, tol_bdy=config.tol_bdy)


def run_evolve(config: Config, verbose: bool = False) -> Dict:
    """ Direct integration of the datum; one CSV per record time and manifest.json. """
    evolver = _evolver(config, config.evolve_record_times, config.evolve_t_end, verbose)
    _, E0 = datum_on_grid(config, evolver.spec.grid)
    manifest = evolver.predict(E0)
    for snap in evolver.snapshots:
        save_field(snap, _out(config, _time_label(snap.t)), config.medium_mu)
    save_json(manifest, _out(config, 'manifest.json'))
    return dict(manifest, snapshots=evolver.snapshots)


def check_cone_in_domain(cone: ConeSpec, grid: Grid, t_max: float) -> None:
    left, right = cone.x1 + cone.v1 * t_max, cone.x2
    if left < grid.x_min + EDGE_WIDTH or right > grid.x_max - EDGE_WIDTH:
        raise ValueError('cone outside simulated domain')


def _slope(times: List[float], residuals: List[float]) -> float:
    if len(times) < 2 or max(residuals) <= SCHEME_LEVEL:
        logger.info('Residuals at scheme level; slope fit skipped.')
        return np.nan
    return fit_decay_slope(times, residuals)


def run_compare(config: Config, verbose: bool = False) -> Dict:
    """
    Compare the direct simulation with the asymptotic prediction inside the cone over compare.times and fit
    the decay slopes of the residuals without and with the radiation term. Writes compare.json.
    """
    times = _check_times(config.compare_times, 'compare.times')
    cone = config.cone()
    grid = config.evolve_grid()
    check_cone_in_domain(cone, grid, times[-1])
    data = _scattering_data(config)
    model = ConeAsymptotics(data, cone, tol=config.tol_quad)
    evolver = _evolver(config, times, times[-1], verbose)
    _, E0 = datum_on_grid(config, grid)
    snapshots = evolver.evolve(E0)

    res_lead, res_rad = [], []
    for snap in snapshots:
        idx = cone_points(cone, grid, snap.t)
        if idx.size == 0:
            raise ValueError('cone outside simulated domain')
        pred = model.predict(grid.x[idx], snap.t)['data']
        E_sim = snap.E[idx]
        res_lead.append(float(np.max(np.abs(E_sim - pred['E_lead']))))
        res_rad.append(float(np.max(np.abs(E_sim - pred['E_lead'] - pred['E_rad']))))
        logger.info('t={:g}: residual {:.3e}, with radiation {:.3e}.'.format(snap.t, res_lead[-1], res_rad[-1]))

    slope_lead, slope_rad = _slope(times, res_lead), _slope(times, res_rad)
    report = compare_report_dict()
    report['meta'].update({'name': 'compare', 'mu': config.medium_mu})
    report['data'].update({
        'times': np.array(times),
        'residual_lead': np.array(res_lead),
        'residual_rad': np.array(res_rad),
        'slope_lead': slope_lead,
        'slope_rad': slope_rad,
        'rad_steeper': bool(slope_rad < slope_lead) if np.isfinite(slope_lead) and np.isfinite(slope_rad) else None
    })
    save_json(report, _out(config, 'compare.json'))
    return report


def _check(value: float, limit: float) -> Dict:
    return {'value': float(value), 'limit': limit, 'passed': bool(np.isfinite(value) and value <= limit)}


def run_selfcheck(config: Config, verbose: bool = False) -> Dict:
    """
    Desk-scale identity checks: scattering unitarity and determinant, the 2 sech x spectrum, the
    reflectionless round trip, Bloch sweeps, stationary-point identities, the Gamma-route modulus and the
    decay of the modified reflection coefficient on the arcs. Writes selfcheck.json.
    """
    checks = {}
    grid = Grid.from_step(-25., 25., .02)
    E0 = sech_datum(grid.x, amplitude=2.)
    data, diag = direct_transform(E0, grid, z_grid=np.linspace(-8., 8., 201), return_diagnostics=True)
    checks['unitarity'] = _check(np.max(diag['data']['unitarity_defect']), 1e-8)
    checks['determinant'] = _check(diag['data']['det_defect'], 1e-10)
    if len(data.discrete) == 1:
        pair = data.discrete[0]
        checks['spectrum'] = _check(max(abs(pair.z - .5j), abs(pair.c - 1j)), 1e-3)
    else:
        checks['spectrum'] = _check(np.inf, 1e-3)

    # round trip with the measured spectral values substituted into the closed form
    field_grid = Grid.from_step(-30., 20., .02)
    t = 5.
    eta, c = (data.discrete[0].eta, data.discrete[0].c.imag) if data.discrete else (.5, 1.)
    E_exact, s_exact, u_exact, r_exact = one_soliton_exact(eta, c, 1., field_grid.x, t)
    field = nsoliton_field(data.discrete, None, field_grid, t, 1.) if data.discrete \
        else SpatialField.ground_state(field_grid, t)
    checks['round_trip'] = _check(np.max(np.abs(field.E - E_exact)), 1e-6)
    s, u, r = bloch_sweep(E_exact, 1., field_grid)
    checks['bloch_sweep'] = _check(max(np.max(np.abs(s - s_exact)), np.max(np.abs(r - r_exact))), 1e-5)

    rng = np.random.RandomState(0)
    worst = 0.
    for mu, w in zip(rng.uniform(.1, 1., 50), rng.uniform(.05, .95, 50)):
        v = -w / mu ** 2
        zeta0, zeta1 = stationary_points(mu, v)
        scale = 16. * max(abs(zeta0), abs(zeta1)) ** 4 * abs(v) + 4. * abs(zeta0) ** 2 + mu ** 2
        residual = max(abs(stationary_quartic(zeta0, mu, v)), abs(stationary_quartic(zeta1, mu, v)))
        worst = max(worst, residual / scale)
        if not (zeta0 > np.sqrt(3.) * mu / 2 and abs(zeta1) < mu / 2 and stationary_beta(mu, v) > 0):
            worst = np.inf
    checks['stationary_points'] = _check(worst, 1e-12)

    gamma = [abs(gamma_route_modulus(a, float(nu_of(a))) - np.sqrt(abs(float(nu_of(a)))))
             for a in np.linspace(.1, 3., 20)]
    checks['gamma_route'] = _check(max(gamma), 1e-8)

    z_grid = np.linspace(-2., 2., 401)
    r_one = np.ones_like(z_grid, dtype=complex)
    arc_max, arc_err = [], 0.
    for kappa in (.2, .1, .05):
        samples = modified_reflection(z_grid, r_one, 1., kappa, 1.)
        arc_max.append(modified_reflection_arc_max(samples)['arc+'])
        arc = samples.arc('arc+')
        arc_err = max(arc_err, np.max(np.abs(np.abs(arc['values']) -
                                             np.exp(-arc_decay_exponent(1., kappa, arc['alpha'], 1.)))))
    checks['arc_decay'] = _check(arc_err if np.all(np.diff(arc_max) < 0) else np.inf, 1e-6)

    report = {'checks': checks, 'passed': all(c['passed'] for c in checks.values())}
    for name, c in checks.items():
        logger.info('{}: {} ({:.3e} <= {:.0e})'.format(name, 'ok' if c['passed'] else 'FAILED', c['value'],
                                                       c['limit']))
    save_json(report, _out(config, 'selfcheck.json'))
    return report


RUNNERS = {
    'scatter': run_scatter,
    'solitons': run_solitons,
    'asymptotics': run_asymptotics,
    'evolve': run_evolve,
    'compare': run_compare,
    'selfcheck': run_selfcheck
}  # type: Dict[str, Callable[..., Dict]]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='rmb-ist',
                                     description='Inverse scattering toolkit for the reduced Maxwell-Bloch equations.')
    parser.add_argument('verb', choices=VERBS)
    parser.add_argument('--config', default=None, help='key = value configuration file')
    parser.add_argument('--out', default=None, help='output directory, overrides out.dir')
    parser.add_argument('--set', action='append', default=[], metavar='KEY=VALUE',
                        help='configuration override, may be repeated')
    parser.add_argument('--verbose', action='store_true', help='log progress and show progress bars')
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format='%(asctime)s %(levelname)s %(name)s: %(message)s')
    try:
        config = load_config(args.config, args.set)
        if args.out is not None:
            config = replace(config, out_dir=args.out)
        result = RUNNERS[args.verb](config, verbose=args.verbose)
    except (NumericalError, FloatingPointError, LinAlgError) as e:
        logger.error('Numerical failure: {}'.format(e))
        return 3
    except (ValueError, TypeError, KeyError, FileNotFoundError) as e:
        logger.error('Invalid input: {}'.format(e))
        return 2
    if args.verb == 'selfcheck' and not result['passed']:
        return 3
    return 0


if __name__ == '__main__':
    sys.exit(main())
