"""Physical configuration and the effective radial potential.

The radial equation after separation carries an effective potential combining
the centrifugal-like angular term, the thin-layer geometric attraction, and
the harmonic confinement.  Minima classification of sampled profiles drives
the binding-region phenomenology (quantum-dot-like well at the origin versus
ring-like off-origin wells).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ComplexAnisotropy

# default sampling for minima classification; resolves the narrow
# off-origin wells of the isotropic m = 4 profile
MINIMA_RHO_MAX = 6.0
MINIMA_RHO_STEP = 0.001


@dataclass(frozen=True)
class MassPair:
    """Anisotropic effective masses: m1 along the surface, m2 normal to it."""

    m1: float
    m2: float

    def __post_init__(self):
        if not self.m1 > 0:
            raise ValueError("surface mass m1 must be positive")
        if self.m2 == 0:
            raise ValueError("normal mass m2 must be nonzero")

    @property
    def ratio(self) -> float:
        return self.m1 / self.m2


@dataclass(frozen=True)
class ModelParams:
    """Full physical configuration of the radial problem.

    m is the angular quantum number; every formula depends on it through m^2
    only, so negative values are accepted and behave like their absolutes.
    """

    masses: MassPair
    m: int = 0
    hbar: float = 1.0
    omega: float = 1.0
    Omega: float = 1.0

    def __post_init__(self):
        if int(self.m) != self.m:
            raise ValueError("angular number m must be an integer")


def anisotropy_x(masses: MassPair) -> float:
    """x = sqrt(4*M1/M2 + 1); raises ComplexAnisotropy when the radicand is negative."""
    rad = 4.0 * masses.ratio + 1.0
    if rad < 0:
        raise ComplexAnisotropy(
            f"4*M1/M2 + 1 = {rad:g} < 0 for M1={masses.m1:g}, M2={masses.m2:g}"
        )
    return math.sqrt(rad)


def effective_potential(p: ModelParams, rho):
    """Effective radial potential; even in rho, harmonic at large |rho|."""
    r = np.asarray(rho, dtype=float)
    u = 1.0 + p.omega**2 * r**2
    bracket = p.m**2 * p.omega**2 / u - (p.omega**2 / (2.0 * u**2)) * (
        p.omega**2 * r**2 / 2.0 + 2.0 * p.masses.ratio - 1.0
    )
    val = (p.hbar**2 / (2.0 * p.masses.m1)) * bracket + 0.5 * p.masses.m1 * p.Omega**2 * r**2
    return float(val) if np.ndim(rho) == 0 else val


def default_minima_grid() -> np.ndarray:
    n = int(round(2.0 * MINIMA_RHO_MAX / MINIMA_RHO_STEP)) + 1
    return np.linspace(-MINIMA_RHO_MAX, MINIMA_RHO_MAX, n)


def potential_profile(p: ModelParams, grid) -> np.ndarray:
    """Sample the effective potential; returns an (n, 2) table of (rho, V)."""
    g = np.asarray(grid, dtype=float)
    if g.size == 0:
        raise ValueError("grid must be nonempty")
    if g.size > 1 and not np.all(np.diff(g) > 0):
        raise ValueError("grid must be strictly increasing")
    return np.column_stack([g, effective_potential(p, g)])


def classify_minima(profile: np.ndarray) -> list[tuple[float, float]]:
    """Interior strict local minima of a sampled profile.

    Three-point comparison; a flat plateau flanked by higher samples counts
    once, attributed to its leftmost sample.  Needs at least 3 rows.
    """
    table = np.asarray(profile, dtype=float)
    if table.ndim != 2 or table.shape[1] != 2 or table.shape[0] < 3:
        raise ValueError("profile must be an (n >= 3, 2) table")
    rho, v = table[:, 0], table[:, 1]
    out: list[tuple[float, float]] = []
    n = len(v)
    i = 1
    while i < n - 1:
        if v[i] < v[i - 1]:
            j = i
            while j + 1 < n and v[j + 1] == v[i]:
                j += 1
            if j < n - 1 and v[j + 1] > v[i]:
                out.append((float(rho[i]), float(v[i])))
            i = j + 1
        else:
            i += 1
    return out
