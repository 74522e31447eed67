from itertools import product
import numpy as np
import pytest
from rmb_ist.core import Grid
from rmb_ist.datasets import sech_datum, zero_datum
from rmb_ist.scattering import default_eta_max, discrete_spectrum, norming_constants

grid = Grid.from_step(-30., 30., .01)

# (amplitude, width) -> (eta, norming constant)
wells = [((2., 1.), (.5, 1j)), ((4., .5), (1., 2j)), ((-2., 1.), (.5, -1j))]
methods = ['magnus', 'rk4']
tests_wells = list(product(wells, methods))
n_tests_wells = len(tests_wells)


@pytest.fixture
def well_params(request):
    return tests_wells[request.param]


@pytest.mark.parametrize('well_params', list(range(n_tests_wells)), indirect=True)
def test_sech_spectrum(well_params):
    ((amplitude, width), (eta, c)), method = well_params
    E0 = sech_datum(grid.x, amplitude=amplitude, width=width)
    zeros = discrete_spectrum(E0, grid, method=method)
    assert len(zeros) == 1
    assert abs(zeros[0] - 1j * eta) < 1e-4
    c_k = norming_constants(E0, grid, zeros[0], method=method)
    assert c_k.real == 0.
    assert abs(c_k - c) < 1e-3


def test_zero_spectrum():
    assert discrete_spectrum(zero_datum(grid.x), grid) == []


def test_default_eta_max():
    E0 = sech_datum(grid.x, amplitude=2.)
    # int 2 sech = 2 pi
    assert default_eta_max(E0, grid) == pytest.approx(np.pi / 2 + 1., rel=1e-6)


def test_increase_eta_max():
    E0 = sech_datum(grid.x, amplitude=2.)
    with pytest.raises(ValueError, match='increase eta_max'):
        discrete_spectrum(E0, grid, eta_max=.3)


def test_two_wells():
    g = Grid.from_step(-30., 40., .01)
    E0 = sech_datum(g.x, amplitude=2.) + sech_datum(g.x, amplitude=4., width=.5, center=10.)
    zeros = discrete_spectrum(E0, g)
    assert len(zeros) == 2
    assert np.allclose(np.array(zeros), [.5j, 1j], atol=1e-3)
    for z_k in zeros:
        c_k = norming_constants(E0, g, z_k)
        assert c_k.imag != 0. and c_k.real == 0.


def test_norming_constant_off_axis():
    E0 = sech_datum(grid.x, amplitude=2.)
    with pytest.raises(ValueError, match='positive imaginary axis'):
        norming_constants(E0, grid, .5 + .5j)


def test_norming_proportionality_failure():
    # i/4 is not an eigenvalue, so the decaying columns are not proportional
    E0 = sech_datum(grid.x, amplitude=2.)
    with pytest.raises(ValueError, match='proportionality failure'):
        norming_constants(E0, grid, .25j)


def test_norming_constant_off_center():
    # a soliton centred at x0 has |c| = 2 eta exp(2 eta x0)
    E0 = sech_datum(grid.x, amplitude=2., center=3.)
    c_k = norming_constants(E0, grid, .5j)
    assert c_k.imag == pytest.approx(np.exp(3.), rel=1e-3)
