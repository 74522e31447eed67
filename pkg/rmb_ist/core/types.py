"""
Value types shared by the scattering, soliton, asymptotics and evolution modules.
"""
from dataclasses import dataclass, field
import numpy as np
from typing import Tuple


@dataclass(frozen=True)
class Grid:
    """
    Uniform grid on [x_min, x_max] with n_points samples.
    """
    x_min: float
    x_max: float
    n_points: int

    def __post_init__(self):
        if not self.x_min < self.x_max:
            raise ValueError('x_min must be smaller than x_max')
        if int(self.n_points) != self.n_points or self.n_points < 3:
            raise ValueError('n_points must be an integer >= 3')

    @classmethod
    def from_step(cls, x_min: float, x_max: float, h: float) -> 'Grid':
        if h <= 0:
            raise ValueError('grid step must be positive')
        n_points = int(round((x_max - x_min) / h)) + 1
        return cls(x_min, x_max, n_points)

    @property
    def h(self) -> float:
        return (self.x_max - self.x_min) / (self.n_points - 1)

    @property
    def x(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.n_points)

    @property
    def mid_index(self) -> int:
        return (self.n_points - 1) // 2


@dataclass(frozen=True, eq=False)
class SpatialField:
    """
    Real fields (E, s, u, r) sampled on a grid at time t.
    """
    grid: Grid
    E: np.ndarray
    s: np.ndarray
    u: np.ndarray
    r: np.ndarray
    t: float = 0.

    def __post_init__(self):
        for name in ('E', 's', 'u', 'r'):
            values = np.asarray(getattr(self, name), dtype=float)
            if values.shape != (self.grid.n_points,):
                raise ValueError('{} must have length n_points={}'.format(name, self.grid.n_points))
            object.__setattr__(self, name, values)

    @classmethod
    def ground_state(cls, grid: Grid, t: float = 0.) -> 'SpatialField':
        zeros = np.zeros(grid.n_points)
        return cls(grid, zeros, zeros.copy(), -np.ones(grid.n_points), zeros.copy(), t)

    def boundary_defect(self) -> float:
        """ Largest deviation of (r, s, u) from the ground state at both grid ends. """
        defect = 0.
        for i in (0, -1):
            defect = max(defect, abs(self.r[i]), abs(self.s[i]), abs(self.u[i] + 1.))
        return defect

    def check_invariants(self, tol_bloch: float = 1e-8, tol_bdy: float = 1e-6) -> None:
        defect = float(np.max(np.abs(self.r ** 2 + self.s ** 2 + self.u ** 2 - 1.)))
        if defect > tol_bloch:
            raise ValueError('Bloch constraint violated: defect {:.3e} > {:.1e}'.format(defect, tol_bloch))
        bdy = self.boundary_defect()
        if bdy > tol_bdy:
            raise ValueError('boundary not in ground state: defect {:.3e} > {:.1e}'.format(bdy, tol_bdy))


@dataclass(frozen=True)
class SpectralPair:
    """
    Discrete eigenvalue z_k = i*eta_k in the upper half-plane and its norming constant c_k in iR.
    """
    z: complex
    c: complex

    def __post_init__(self):
        z, c = complex(self.z), complex(self.c)
        if abs(z.real) > 1e-12 * max(1., abs(z)) or z.imag <= 0:
            raise ValueError('eigenvalue must lie on the positive imaginary axis, got {}'.format(z))
        if c == 0 or abs(c.real) > 1e-8 * abs(c):
            raise ValueError('norming constant must be purely imaginary and nonzero, got {}'.format(c))
        object.__setattr__(self, 'z', complex(0., z.imag))
        object.__setattr__(self, 'c', complex(0., c.imag))

    @property
    def eta(self) -> float:
        return self.z.imag


@dataclass(frozen=True, eq=False)
class ScatteringData:
    """
    Reflection coefficient samples on a real spectral grid plus the discrete spectrum.
    """
    z_grid: np.ndarray
    r_samples: np.ndarray
    discrete: Tuple[SpectralPair, ...] = field(default_factory=tuple)

    def __post_init__(self):
        z_grid = np.asarray(self.z_grid, dtype=float)
        r_samples = np.asarray(self.r_samples, dtype=complex)
        if z_grid.ndim != 1 or z_grid.shape != r_samples.shape:
            raise ValueError('r_samples must have the same length as z_grid')
        if np.any(np.diff(z_grid) <= 0):
            raise ValueError('z_grid must be strictly increasing')
        discrete = tuple(self.discrete)
        etas = [p.eta for p in discrete]
        if len(set(etas)) != len(etas):
            raise ValueError('discrete eigenvalues must be distinct')
        object.__setattr__(self, 'z_grid', z_grid)
        object.__setattr__(self, 'r_samples', r_samples)
        object.__setattr__(self, 'discrete', discrete)

    @property
    def is_reflectionless(self) -> bool:
        return bool(np.all(self.r_samples == 0))

    def symmetry_defect(self) -> float:
        """ max |r(-z) - conj r(z)| over grid points whose mirror image is on the grid. """
        z, r = self.z_grid, self.r_samples
        if not np.allclose(z, -z[::-1], atol=1e-12):
            r_mirror = np.interp(-z, z, r.real, left=np.nan, right=np.nan) \
                + 1j * np.interp(-z, z, r.imag, left=np.nan, right=np.nan)
        else:
            r_mirror = r[::-1]
        defect = np.abs(r_mirror - np.conj(r))
        return float(np.nanmax(defect)) if np.any(np.isfinite(defect)) else 0.


@dataclass(frozen=True)
class ConeSpec:
    """
    Space-time cone {x = x0 + v t : x0 in [x1, x2], v in [v1, v2]} in a medium with resonance mu.
    """
    x1: float
    x2: float
    v1: float
    v2: float
    mu: float

    def __post_init__(self):
        if not 0 < self.mu <= 1:
            raise ValueError('mu must lie in (0, 1]')
        if self.x1 > self.x2:
            raise ValueError('x1 must not exceed x2')
        if not -1. / self.mu ** 2 < self.v1 <= self.v2 < 0:
            raise ValueError('cone velocities must satisfy -1/mu^2 < v1 <= v2 < 0')

    def contains(self, x: float, t: float) -> bool:
        if t <= 0:
            return False
        return self.x1 + self.v1 * t <= x <= self.x2 + self.v2 * t

    @property
    def v_mid(self) -> float:
        return .5 * (self.v1 + self.v2)


@dataclass(frozen=True)
class PhaseConstants:
    zeta0: float
    zeta1: complex
    beta: float
    nu0: float
    delta0A: complex

    def __post_init__(self):
        if self.zeta0 <= 0 or self.beta <= 0:
            raise ValueError('zeta0 and beta must be positive')
        if self.nu0 > 0:
            raise ValueError('nu(zeta0) must be non-positive')
        if abs(abs(self.delta0A) - 1.) > 1e-10:
            raise ValueError('delta0A must have unit modulus')
