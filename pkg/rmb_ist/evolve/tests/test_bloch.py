from itertools import product
import numpy as np
import pytest
from rmb_ist.base import NumericalError
from rmb_ist.core.types import Grid
from rmb_ist.evolve import bloch_sweep
from rmb_ist.soliton import one_soliton_exact

grid = Grid.from_step(-40., 30., .02)
methods = ['magnus', 'rk4']
times = [0., 3.]
tests_sweep = list(product(methods, times))
n_tests = len(tests_sweep)


@pytest.fixture
def sweep_params(request):
    return tests_sweep[request.param]


@pytest.mark.parametrize('sweep_params', list(range(n_tests)), indirect=True)
def test_sweep_soliton(sweep_params):
    method, t = sweep_params
    E, s, u, r = one_soliton_exact(.5, 1., 1., grid.x, t)
    s_num, u_num, r_num = bloch_sweep(E, 1., grid, method=method)
    for num, exact in ((s_num, s), (u_num, u), (r_num, r)):
        assert np.max(np.abs(num - exact)) <= 1e-6
    defect = np.max(np.abs(s_num ** 2 + u_num ** 2 + r_num ** 2 - 1.))
    assert defect <= (1e-10 if method == 'magnus' else 1e-6)


@pytest.mark.parametrize('method', methods)
@pytest.mark.parametrize('h', [.02, .5])
def test_sweep_ground_state(method, h):
    g = Grid.from_step(-5., 5., h)
    s, u, r = bloch_sweep(np.zeros(g.n_points), .7, g, method=method)
    np.testing.assert_allclose(s, 0., atol=1e-12)
    np.testing.assert_allclose(u, -1., atol=1e-12)
    np.testing.assert_allclose(r, 0., atol=1e-12)


def test_sweep_rotation():
    np.random.seed(0)
    g = Grid.from_step(-20., 20., .05)
    E = 3. * np.random.randn(g.n_points) * np.exp(-g.x ** 2 / 50.)
    s, u, r = bloch_sweep(E, .5, g)
    assert np.max(np.abs(s ** 2 + u ** 2 + r ** 2 - 1.)) <= 1e-10


def test_sweep_errors():
    with pytest.raises(ValueError):
        bloch_sweep(np.zeros(5), 1., grid)
    with pytest.raises(ValueError):
        bloch_sweep(np.zeros(grid.n_points), 1., grid, method='euler')
    with pytest.raises(NumericalError, match='sweep instability'):
        bloch_sweep(np.full(grid.n_points, 1e200), 1., grid)
