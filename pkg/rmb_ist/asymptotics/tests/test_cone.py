import logging
import numpy as np
import pytest
from rmb_ist.asymptotics import (cone_decay_rate, cone_interval, fold_outside_triangle, modified_norming,
                                 select_cone_spectrum)
from rmb_ist.core.types import ConeSpec, ScatteringData, SpectralPair

z_grid = np.linspace(-8., 8., 161)
two_solitons = ScatteringData(z_grid, np.zeros_like(z_grid), (SpectralPair(.5j, 1j), SpectralPair(1j, 2j)))
cone_half = ConeSpec(-1., 1., -.55, -.45, 1.)


def test_cone_interval():
    eta_min, eta_max = cone_interval(1., -.5, -1. / 3.)
    assert eta_min == pytest.approx(.5)
    assert eta_max == pytest.approx(np.sqrt(.5), abs=1e-5)
    for mu, v in [(.6, -1.), (1., -.3)]:
        eta, eta_same = cone_interval(mu, v, v)
        assert eta == eta_same
        assert -1. / (4. * eta ** 2 + mu ** 2) == pytest.approx(v)
    with pytest.raises(ValueError):
        cone_interval(1., -.3, -.5)
    with pytest.raises(ValueError):
        cone_interval(1., -1.5, -.5)


def test_cone_interval_variant_logged(caplog):
    with caplog.at_level(logging.WARNING):
        cone_interval(.8, -1., -.5)
    assert 'mu^-2' in caplog.text


@pytest.mark.parametrize('v, triangle_J, n_outside', [(-.47, (), 1), (-.53, (0,), 1), (-.15, (), 0)])
def test_select_cone_spectrum(v, triangle_J, n_outside):
    spectrum = select_cone_spectrum(two_solitons, cone_half, v)
    assert spectrum.selected == (SpectralPair(.5j, 1j),)
    assert spectrum.triangle_J == triangle_J
    assert len(spectrum.outside_triangle) == n_outside
    assert spectrum.v == v


def test_select_all_and_none():
    everything = select_cone_spectrum(two_solitons, ConeSpec(0., 0., -.6, -.15, 1.))
    assert len(everything.selected) == 2 and everything.outside_triangle == ()
    empty = ScatteringData(z_grid, np.zeros_like(z_grid))
    nothing = select_cone_spectrum(empty, cone_half)
    assert nothing.selected == () and nothing.triangle_J == ()


def test_fold_outside_triangle():
    folded = fold_outside_triangle([SpectralPair(.5j, 1j)], [SpectralPair(1j, 2j)])
    assert folded[0].z == .5j
    assert folded[0].c == pytest.approx(1j / 9.)
    assert fold_outside_triangle([SpectralPair(.5j, 1j)], []) == (SpectralPair(.5j, 1j),)


def test_modified_norming():
    pairs = [SpectralPair(.5j, 1j), SpectralPair(1j, -2j)]
    assert modified_norming(pairs, [1., 1.]) == tuple(pairs)
    modified = modified_norming(pairs, [2., 1.])
    assert modified[0].c == pytest.approx(.25j)
    with pytest.raises(ValueError):
        modified_norming(pairs, [1.])
    with pytest.raises(ValueError, match='delta vanishes'):
        modified_norming(pairs, [0., 1.])


def test_cone_decay_rate():
    # the eta = 1 soliton travels at -1/5 and leaves the cone at rate 1 * (1/5 - 0.45)
    assert cone_decay_rate(two_solitons, cone_half) == pytest.approx(-.25)
    assert cone_decay_rate(two_solitons, ConeSpec(0., 0., -.6, -.15, 1.)) == -np.inf
