from itertools import product
import numpy as np
import pytest
from rmb_ist.base import NumericalError
from rmb_ist.core import Grid
from rmb_ist.datasets import sech_datum
from rmb_ist.scattering import integrate_jost, scattering_coefficients
from rmb_ist.scattering.jost import analytic_columns

grid = Grid.from_step(-30., 30., .01)
E_sech = sech_datum(grid.x, amplitude=2.)

sides = ['left', 'right']
z_real = [-3., .7, 5.]
methods = ['magnus', 'rk4']
tests_free = list(product(sides, z_real, methods))
n_tests_free = len(tests_free)


@pytest.fixture
def free_params(request):
    return tests_free[request.param]


@pytest.mark.parametrize('free_params', list(range(n_tests_free)), indirect=True)
def test_jost_free(free_params):
    side, z, method = free_params
    small = Grid.from_step(-5., 5., .05)
    sol = integrate_jost(np.zeros(small.n_points), small, z, side, method=method)
    assert sol.columns == (0, 1)
    assert np.allclose(sol.m, np.eye(2)[None], atol=1e-10)


def test_jost_det():
    for side in sides:
        sol = integrate_jost(E_sech, grid, .7, side)
        assert sol.det_defect <= 1e-10
        end = 0 if side == 'left' else -1
        assert np.allclose(sol.m[end], np.eye(2), atol=1e-12)


def bound_state(x: np.ndarray) -> np.ndarray:
    """ m_left column 1 of E0 = 2 sech(x) at z = i/2. """
    d = 1. + np.exp(2. * x)
    return np.stack([1. / d, np.exp(x) / d], axis=-1)


def test_jost_bound_state():
    sol = integrate_jost(E_sech, grid, .5j, 'left')
    assert sol.columns == (0,)
    assert np.all(np.isnan(sol.m[:, :, 1]))
    inside = np.abs(grid.x) <= 10.
    err = np.max(np.abs(sol.m[inside, :, 0] - bound_state(grid.x[inside])))
    assert err < 1e-6
    # second component decays like exp(-x) on the right
    assert abs(sol.m[-1, 1, 0]) < 1e-10


def test_jost_order():
    errors = []
    for h in [.04, .02]:
        g = Grid.from_step(-20., 20., h)
        sol = integrate_jost(sech_datum(g.x, amplitude=2.), g, .5j, 'left')
        inside = np.abs(g.x) <= 5.
        errors.append(np.max(np.abs(sol.m[inside, :, 0] - bound_state(g.x[inside]))))
    assert errors[0] / errors[1] > 8.


def test_analytic_columns():
    assert analytic_columns(1., 'left') == (0, 1)
    assert analytic_columns(1j, 'left') == (0,)
    assert analytic_columns(1j, 'right') == (1,)
    assert analytic_columns(-1j, 'left') == (1,)
    with pytest.raises(ValueError, match='column not analytic here'):
        integrate_jost(E_sech, grid, .5j, 'left', columns=(1,))
    with pytest.raises(ValueError):
        integrate_jost(E_sech, grid, .5j, 'middle')


def test_jost_overflow():
    # classical RK4 is unstable for |z| h beyond its stability interval
    g = Grid.from_step(-40., 40., .1)
    with pytest.raises(NumericalError, match='integration overflow'):
        integrate_jost(sech_datum(g.x, amplitude=2.), g, 100., 'left', method='rk4')


def test_scattering_coefficients_free():
    small = Grid.from_step(-5., 5., .05)
    z = np.linspace(-4., 4., 9)
    s11, s21 = scattering_coefficients(np.zeros(small.n_points), small, z)
    assert np.allclose(s11, 1., atol=1e-12)
    assert np.allclose(s21, 0., atol=1e-12)


def test_scattering_coefficients_sech():
    z = np.linspace(-8., 8., 801)
    s11, s21 = scattering_coefficients(E_sech, grid, z)
    assert np.max(np.abs(np.abs(s11) ** 2 + np.abs(s21) ** 2 - 1.)) <= 1e-8
    s11_half, s21_half = scattering_coefficients(E_sech, grid, .5)
    assert abs(s21_half) <= 1e-6
    # s11 -> 1 along the real axis
    s11_far, _ = scattering_coefficients(E_sech, grid, np.array([-20., 20.]))
    assert np.all(np.abs(s11_far - 1.) <= .02)
    # s11(i eta) = (eta - 1/2) / (eta + 1/2) for the sech datum
    s11_im, s21_im = scattering_coefficients(E_sech, grid, 1.5j)
    assert s21_im is None
    assert abs(s11_im - .5) < 1e-6
    with pytest.raises(ValueError, match='s21 only on real axis'):
        scattering_coefficients(E_sech, grid, 1.5j, with_s21=True)
