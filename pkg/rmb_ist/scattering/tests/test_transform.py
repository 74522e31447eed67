import numpy as np
import pytest
from rmb_ist.core import Grid
from rmb_ist.datasets import sample_datum, sech_datum
from rmb_ist.scattering import direct_transform, reflection_coefficient

grid = Grid.from_step(-30., 30., .01)


def exact_sech_reflection(z: np.ndarray, a: float) -> np.ndarray:
    """ |r(z)| of E0 = 2 a sech(x) for a < 1/2 (no bound state). """
    s = np.sin(np.pi * a)
    return s / np.sqrt(np.cosh(np.pi * z) ** 2 - s ** 2)


def test_transform_zero():
    data = direct_transform(np.zeros(grid.n_points), grid, z_grid=np.linspace(-4., 4., 81))
    assert data.discrete == ()
    assert np.allclose(data.r_samples, 0., atol=1e-12)


def test_transform_sech():
    z_grid = np.linspace(-5., 5., 201)
    data, diagnostics = direct_transform(sech_datum(grid.x, amplitude=2.), grid, z_grid=z_grid,
                                         return_diagnostics=True)
    assert len(data.discrete) == 1
    assert abs(data.discrete[0].z - .5j) < 1e-4
    assert abs(data.discrete[0].c - 1j) < 1e-3
    assert np.max(np.abs(data.r_samples)) < 1e-6
    d = diagnostics['data']
    assert d['n_discrete'] == 1
    assert np.max(d['unitarity_defect']) <= 1e-8
    assert d['det_defect'] <= 1e-10
    assert d['symmetry_defect'] <= 1e-8
    assert diagnostics['meta']['name'] == 'direct_transform'


def test_reflection_sech_nonsoliton():
    z_grid = np.linspace(-3., 3., 121)
    E0 = sech_datum(grid.x, amplitude=.4)
    r = reflection_coefficient(E0, grid, z_grid)
    assert np.max(np.abs(np.abs(r) - exact_sech_reflection(z_grid, .2))) < 1e-6
    assert abs(abs(r[60]) - np.tan(.2 * np.pi)) < 1e-6
    data = direct_transform(E0, grid, z_grid=z_grid)
    assert data.discrete == ()
    assert data.symmetry_defect() < 1e-8


def test_reflection_reflective_soliton():
    # 1.7 sech carries one soliton at i * 0.35 and radiation
    z_grid = np.linspace(-3., 3., 121)
    data = direct_transform(sample_datum('sech amplitude=1.7', grid), grid, z_grid=z_grid)
    assert len(data.discrete) == 1
    assert abs(data.discrete[0].eta - .35) < 1e-4
    assert abs(abs(data.r_samples[60]) - np.tan(.15 * np.pi)) < 1e-6


def test_two_well_transform():
    g = Grid.from_step(-30., 40., .01)
    E0 = sample_datum('sech amplitude=2 + sech amplitude=4 width=0.5 center=10', g)
    data = direct_transform(E0, g, z_grid=np.linspace(-4., 4., 41))
    assert [round(p.eta, 3) for p in data.discrete] == [.5, 1.]


def test_spectral_singularity():
    # 1.0 sech sits on the threshold where s11 vanishes at z = 0
    with pytest.raises(ValueError, match='spectral singularity suspected'):
        reflection_coefficient(sech_datum(grid.x, amplitude=1.), grid, np.linspace(-1., 1., 21), tol_zero=1e-4)


def test_transform_bad_length():
    with pytest.raises(ValueError):
        direct_transform(np.zeros(10), grid)
