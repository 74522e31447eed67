import numpy as np
import pytest
from rmb_ist.asymptotics import (beta12_delta0A, gamma_route_modulus, nu_of, phase_constants,
                                 radiation_correction, stationary_beta, stationary_points)
from rmb_ist.soliton.residue import evaluate_M, solve_reflectionless

z_grid = np.linspace(-8., 8., 801)
r_unit = np.ones_like(z_grid, dtype=complex)
r_gauss = .3 * np.exp(-z_grid ** 2 / 4.) * np.exp(.5j * z_grid)


@pytest.mark.parametrize('r_abs', list(np.linspace(.1, 3., 20)))
def test_gamma_route(r_abs):
    nu = float(nu_of(np.array([r_abs]))[0])
    assert abs(gamma_route_modulus(r_abs, nu) - np.sqrt(abs(nu))) <= 1e-8


def test_beta12_modulus():
    mu, v = 1., -.5
    zeta0, _ = stationary_points(mu, v)
    b = beta12_delta0A(z_grid, r_unit, zeta0, 50., (), mu, v)
    assert abs(b) == pytest.approx(np.sqrt(np.log(2.) / (2. * np.pi)), abs=1e-10)
    assert abs(b) == pytest.approx(.33214, abs=1e-5)
    b_gauss = beta12_delta0A(z_grid, r_gauss, zeta0, 50., (), mu, v)
    r0 = .3 * np.exp(-zeta0 ** 2 / 4.)
    assert abs(b_gauss) == pytest.approx(np.sqrt(np.log1p(r0 ** 2) / (2. * np.pi)), abs=1e-8)


def test_beta12_errors():
    mu, v = 1., -.5
    zeta0, _ = stationary_points(mu, v)
    with pytest.raises(ValueError, match='reflectionless'):
        beta12_delta0A(z_grid, np.zeros_like(z_grid), zeta0, 50., (), mu, v)
    with pytest.raises(ValueError):
        beta12_delta0A(z_grid, r_unit, zeta0, 0., (), mu, v)


def test_phase_constants():
    pc = phase_constants(z_grid, r_gauss, .8, -1., 30.)
    assert abs(abs(pc.delta0A) - 1.) <= 1e-12
    assert pc.beta == pytest.approx(stationary_beta(.8, -1.))
    assert pc.nu0 == pytest.approx(-np.log1p((.3 * np.exp(-pc.zeta0 ** 2 / 4.)) ** 2) / (2. * np.pi), abs=1e-8)


def test_radiation_correction_identity():
    b, beta = .2 - .1j, 1.7
    for t in (10., 40.):
        value = radiation_correction(np.eye(2), np.eye(2), b, beta, t)
        assert value == pytest.approx(2. * np.sqrt(beta / t) * b.real)
    assert radiation_correction(np.eye(2), np.eye(2), 0j, beta, 10.) == 0.


def test_radiation_correction_soliton():
    mu, v, t = 1., -.5, 20.
    zeta0, _ = stationary_points(mu, v)
    sol = solve_reflectionless([(.5j, 1j)], (), v * t + .3, t, mu)
    M_plus, M_minus = evaluate_M(sol, zeta0), evaluate_M(sol, -zeta0)
    b = .25 * np.exp(.7j)
    f1 = (M_plus @ np.array([[0., b], [np.conj(b), 0.]]) @ np.linalg.inv(M_plus))[0, 1]
    f2 = (M_minus @ np.array([[0., np.conj(b)], [b, 0.]]) @ np.linalg.inv(M_minus))[0, 1]
    assert abs((f1 + f2).imag) <= 1e-9
    value = radiation_correction(M_plus, M_minus, b, 1., t)
    assert value == pytest.approx((f1 + f2).real / np.sqrt(t))
