from itertools import product
import numpy as np
import pytest
from rmb_ist.core import (bloch_norm_defect, ConeSpec, Grid, PhaseConstants, ScatteringData, SpatialField,
                          SpectralPair, sobolev_norm_h11)


def test_grid():
    grid = Grid.from_step(-1., 1., .25)
    assert grid.n_points == 9
    assert grid.h == pytest.approx(.25)
    assert np.all(np.diff(grid.x) > 0)
    with pytest.raises(ValueError):
        Grid(1., -1., 10)
    with pytest.raises(ValueError):
        Grid(-1., 1., 2)


x_ranges = [(-10., 10.), (-5., 7.)]
steps = [.1, .05]
tests_zero = list(product(x_ranges, steps))
n_tests_zero = len(tests_zero)


@pytest.fixture
def zero_params(request):
    return tests_zero[request.param]


@pytest.mark.parametrize('zero_params', list(range(n_tests_zero)), indirect=True)
def test_sobolev_norm_zero(zero_params):
    (x_min, x_max), h = zero_params
    grid = Grid.from_step(x_min, x_max, h)
    assert sobolev_norm_h11(np.zeros(grid.n_points), grid) == 0.


def test_sobolev_norm_gaussian():
    grid = Grid.from_step(-10., 10., .01)
    f = np.exp(-grid.x ** 2)
    # ||f||^2 = ||f'||^2 = sqrt(pi/2), ||x f||^2 = sqrt(pi/2) / 4
    expected = np.sqrt(np.sqrt(np.pi / 2) * 2.25)
    assert abs(sobolev_norm_h11(f, grid) - expected) < 1e-3


def test_sobolev_norm_single_sample():
    grid = Grid(-1., 1., 5)
    f = np.zeros(5)
    f[2] = 1.
    norm = sobolev_norm_h11(f, grid)
    assert np.isfinite(norm) and norm > 0


def test_sobolev_norm_insufficient():
    grid = Grid(-1., 1., 3)
    with pytest.raises(ValueError, match='insufficient samples'):
        sobolev_norm_h11(np.zeros(2), grid)


def test_bloch_norm_defect():
    grid = Grid(-1., 1., 3)
    ground = SpatialField.ground_state(grid)
    assert bloch_norm_defect(ground) == 0.
    ground.check_invariants()
    state = SpatialField(grid, np.zeros(3), s=[0., .8, 0.], u=[-1., .1, -1.], r=[0., .6, 0.])
    assert bloch_norm_defect(state) == pytest.approx(.01, abs=1e-14)
    with pytest.raises(ValueError):
        state.check_invariants(tol_bloch=1e-3)


def test_spectral_pair():
    pair = SpectralPair(.5j, 1j)
    assert pair.eta == .5
    with pytest.raises(ValueError):
        SpectralPair(-.5j, 1j)
    with pytest.raises(ValueError):
        SpectralPair(.5j, 1.)
    with pytest.raises(ValueError):
        SpectralPair(.5j, 0j)


def test_scattering_data():
    z = np.linspace(-2., 2., 41)
    r = .1 * np.exp(-z ** 2) * (1. + 1j * z)
    data = ScatteringData(z, r, (SpectralPair(.5j, 1j),))
    assert data.symmetry_defect() < 1e-15
    assert not data.is_reflectionless
    with pytest.raises(ValueError):
        ScatteringData(z, r[:-1])
    with pytest.raises(ValueError):
        ScatteringData(z, r, (SpectralPair(.5j, 1j), SpectralPair(.5j, 2j)))


cones = [
    ((-1., 1., -.5, -1. / 3, 1.), True),
    ((1., -1., -.5, -.4, 1.), False),
    ((-1., 1., -1.5, -.4, 1.), False),
    ((-1., 1., -.4, -.5, 1.), False),
    ((-1., 1., -.5, 0., 1.), False),
    ((-1., 1., -.5, -.4, 1.5), False)
]
n_cones = len(cones)


@pytest.fixture
def cone_params(request):
    return cones[request.param]


@pytest.mark.parametrize('cone_params', list(range(n_cones)), indirect=True)
def test_cone_spec(cone_params):
    args, valid = cone_params
    if valid:
        cone = ConeSpec(*args)
        assert cone.contains(-5., 10.)
        assert not cone.contains(0., 10.)
    else:
        with pytest.raises(ValueError):
            ConeSpec(*args)


def test_phase_constants():
    PhaseConstants(1.6, .4j, 2., -.1, np.exp(.3j))
    with pytest.raises(ValueError):
        PhaseConstants(1.6, .4j, 2., -.1, 1.1)
    with pytest.raises(ValueError):
        PhaseConstants(1.6, .4j, 2., .1, 1.)
