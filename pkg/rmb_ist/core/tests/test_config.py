import numpy as np
import pytest
from rmb_ist.core import Config, DEFAULT_CONFIG, load_config


def test_defaults():
    cfg = Config()
    assert cfg.medium_mu == DEFAULT_CONFIG['medium.mu']
    assert cfg.z_grid().shape == (801,)
    assert np.isclose(cfg.z_grid(), 0.).any()
    assert cfg.scattering_grid().h == pytest.approx(.01)
    assert cfg.eta_max is None
    assert cfg.cone().v_mid == pytest.approx(-.5)


def test_load_config(tmp_path):
    path = tmp_path / 'run.cfg'
    path.write_text('# comment\n\ngrid.h = 0.02  # coarser\nmedium.mu=0.8\n'
                    'compare.times = 25, 50\ndatum = sech amplitude=1.7 width=1\n')
    cfg = load_config(str(path), overrides=['evolve.dt=0.005', 'grid.h=0.05'])
    assert cfg.grid_h == .05
    assert cfg.medium_mu == .8
    assert cfg.compare_times == (25., 50.)
    assert cfg.evolve_dt == .005
    assert cfg.datum == 'sech amplitude=1.7 width=1'
    assert np.isclose(cfg.scattering_grid().h, .05)


def test_load_config_errors(tmp_path):
    with pytest.raises(KeyError):
        load_config(overrides=['grid.nonsense=1'])
    with pytest.raises(ValueError):
        load_config(overrides=['grid.h=abc'])
    with pytest.raises(ValueError):
        load_config(overrides=['tol.bloch=0'])
    with pytest.raises(ValueError):
        load_config(overrides=['ode.method=euler'])
    with pytest.raises(ValueError):
        load_config(overrides=['missing equals sign'])
    with pytest.raises(FileNotFoundError):
        load_config(str(tmp_path / 'absent.cfg'))
