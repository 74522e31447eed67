import logging
import numpy as np
import pytest
from rmb_ist.base import NumericalError
from rmb_ist.core.types import Grid, SpatialField
from rmb_ist.datasets import sech_datum
from rmb_ist.evolve import evolve, EvolveSpec, RMBEvolver, run_evolution, step_time
from rmb_ist.evolve.integrator import field_from_E, step_plan
from rmb_ist.soliton import one_soliton_exact

grid = Grid.from_step(-30., 20., .05)


def test_evolve_spec():
    spec = EvolveSpec(grid, 1., .025, 10., (10., 0., 5.))
    assert spec.record_times == (0., 5., 10.)
    with pytest.raises(ValueError):
        EvolveSpec(grid, 1., 0., 10., (10.,))
    with pytest.raises(ValueError):
        EvolveSpec(grid, 1., .025, -1., ())
    with pytest.raises(ValueError):
        EvolveSpec(grid, 1.5, .025, 10., ())
    with pytest.raises(ValueError):
        EvolveSpec(grid, 1., .025, 10., (11.,))


def test_evolve_spec_large_step(caplog):
    with caplog.at_level(logging.WARNING):
        EvolveSpec(grid, 1., .1, 1., (1.,))
    assert 'exceeds the grid step' in caplog.text


def test_step_plan():
    plan = step_plan(.3, (0., .5, 1.), 1.)
    steps = [s for s, _ in plan]
    assert np.sum(steps) == pytest.approx(1.)
    assert max(steps) <= .3
    assert [flag for _, flag in plan].count(True) == 2
    assert plan[-1][1]
    assert step_plan(.1, (0.,), 0.) == []


def test_step_plan_runs_to_t_end():
    plan = step_plan(.25, (.5,), 2.)
    assert np.sum([s for s, _ in plan]) == pytest.approx(2.)
    assert [flag for _, flag in plan] == [False, True] + [False] * 6
    assert np.sum([s for s, _ in step_plan(.3, (), 1.)]) == pytest.approx(1.)


def test_ground_state_is_stationary():
    state = SpatialField.ground_state(grid)
    new = step_time(state, .025, 1.)
    np.testing.assert_allclose(new.E, 0., atol=1e-14)
    assert new.t == pytest.approx(.025)
    snapshots = evolve(np.zeros(grid.n_points), EvolveSpec(grid, 1., .025, .5, (0., .5)))
    assert len(snapshots) == 2
    for snap in snapshots:
        np.testing.assert_allclose(snap.E, 0., atol=1e-12)
        np.testing.assert_allclose(snap.s, 0., atol=1e-12)
        np.testing.assert_allclose(snap.u, -1., atol=1e-12)
        np.testing.assert_allclose(snap.r, 0., atol=1e-12)
    assert run_evolution(np.zeros(grid.n_points), EvolveSpec(grid, 1., .025, .5, (.25,))).n_steps == 20


def test_step_order():
    g = Grid.from_step(-20., 20., .05)
    state = field_from_E(sech_datum(g.x, amplitude=2.), g, 0., 1.)
    errors = []
    for dt in (.1, .05):
        ref = state
        for _ in range(16):
            ref = step_time(ref, dt / 16., 1.)
        errors.append(np.max(np.abs(step_time(state, dt, 1.).E - ref.E)))
    assert errors[0] / errors[1] > 16.


def test_step_blowup():
    state = field_from_E(sech_datum(grid.x, amplitude=2.), grid, 0., 1.)
    nan_state = SpatialField(grid, state.E, np.full(grid.n_points, np.nan), state.u, state.r)
    with pytest.raises(NumericalError, match='blowup or instability'):
        step_time(nan_state, .025, 1.)


def test_evolve_soliton():
    spec = EvolveSpec(grid, 1., .025, 10., (0., 5., 10.))
    snapshots = evolve(sech_datum(grid.x, amplitude=2.), spec)
    assert [s.t for s in snapshots] == pytest.approx([0., 5., 10.])
    for snap in snapshots:
        E, s, u, r = one_soliton_exact(.5, 1., 1., grid.x, snap.t)
        assert np.max(np.abs(snap.E - E)) <= 2e-3
        assert np.max(np.abs(snap.s ** 2 + snap.u ** 2 + snap.r ** 2 - 1.)) <= 1e-8
        assert snap.boundary_defect() <= 1e-6
    assert abs(grid.x[np.argmax(snapshots[-1].E)] + 5.) <= .1


def test_boundary_warning(caplog):
    spec = EvolveSpec(grid, 1., .025, .05, (.05,))
    with caplog.at_level(logging.WARNING):
        evolve(sech_datum(grid.x, amplitude=2., center=17.), spec)
    assert 'boundary' in caplog.text


def test_rmb_evolver():
    spec = EvolveSpec(grid, 1., .025, .5, (.25, .5))
    evolver = RMBEvolver(spec)
    assert evolver.meta['name'] == 'RMBEvolver'
    manifest = evolver.predict(sech_datum(grid.x, amplitude=2.))
    assert set(manifest.keys()) == {'meta', 'data'}
    data = manifest['data']
    np.testing.assert_allclose(data['record_times'], [.25, .5])
    assert data['spec']['n_points'] == grid.n_points
    assert data['bloch_defect'] <= 1e-8
    assert data['boundary_defect'] <= 1e-6
    assert data['wall_time'] > 0
    assert len(evolver.snapshots) == 2


def _soliton_error(h: float, dt: float, t_end: float) -> float:
    g = Grid.from_step(-20., 15., h)
    spec = EvolveSpec(g, 1., dt, t_end, (t_end,))
    snap = evolve(one_soliton_exact(.5, 1., 1., g.x, 0.)[0], spec)[-1]
    return float(np.max(np.abs(snap.E - one_soliton_exact(.5, 1., 1., g.x, t_end)[0])))


def test_order_under_grid_and_step_refinement():
    errors = [_soliton_error(h, .5 * h, 2.) for h in (.2, .1)]
    assert errors[1] < errors[0]
    assert np.log2(errors[0] / errors[1]) >= 3.


def test_time_reversal():
    g = Grid.from_step(-20., 15., .1)
    E0 = one_soliton_exact(.5, 1., 1., g.x, 0.)[0]
    n_steps, dt = 40, .05
    state = field_from_E(E0, g, 0., 1.)
    for _ in range(n_steps):
        state = step_time(state, dt, 1.)
    forward_error = np.max(np.abs(state.E - one_soliton_exact(.5, 1., 1., g.x, n_steps * dt)[0]))
    for _ in range(n_steps):
        state = step_time(state, -dt, 1.)
    assert state.t == pytest.approx(0., abs=1e-12)
    assert np.max(np.abs(state.E - E0)) <= 10. * forward_error
