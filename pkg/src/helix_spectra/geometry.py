"""Helicoid geometry: embedding, metric, curvatures, geometric potential.

The analytic formulas are closed-form; ``numeric_curvatures`` recomputes the
same quantities from central-difference fundamental forms of an arbitrary
embedding and is used as the independent oracle in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import DegenerateMetric, ZeroMass

DEFAULT_FD_STEP = 1e-4


@dataclass(frozen=True)
class HelicoidParams:
    """Twist rate omega in radians per unit length (omega = 2*pi*S)."""

    omega: float

    def __post_init__(self):
        if not math.isfinite(self.omega):
            raise ValueError("twist rate must be finite")

    @property
    def turns_per_length(self) -> float:
        return self.omega / (2.0 * math.pi)


@dataclass(frozen=True)
class SurfaceCoords:
    """Point on the surface: signed radius rho, axial coordinate z."""

    rho: float
    z: float


@dataclass(frozen=True)
class CurvaturePair:
    kappa1: float
    kappa2: float
    mean: float
    gaussian: float


def embed(h: HelicoidParams, p: SurfaceCoords) -> np.ndarray:
    """Map (rho, z) to 3-space: (rho cos(omega z), rho sin(omega z), z)."""
    ang = h.omega * p.z
    return np.array([p.rho * math.cos(ang), p.rho * math.sin(ang), p.z])


def metric(h: HelicoidParams, rho: float) -> np.ndarray:
    """First fundamental form, diag(1, 1 + omega^2 rho^2)."""
    return np.diag([1.0, 1.0 + h.omega**2 * rho**2])


def principal_curvatures(h: HelicoidParams, rho: float) -> CurvaturePair:
    """kappa1 = omega/(1 + omega^2 rho^2) = -kappa2; mean 0, Gaussian -kappa1^2."""
    k1 = h.omega / (1.0 + h.omega**2 * rho**2)
    return CurvaturePair(kappa1=k1, kappa2=-k1, mean=0.0, gaussian=-(k1**2))


def geometric_potential(h: HelicoidParams, m2: float, hbar: float, rho) -> float:
    """Attractive thin-layer potential -(hbar^2/2M2) omega^2/(1+omega^2 rho^2)^2.

    The mean-curvature contribution vanishes identically on the helicoid, so
    only the Gaussian term survives.  Sign flips with the sign of M2.
    """
    if m2 == 0:
        raise ZeroMass("normal mass must be nonzero")
    u = 1.0 + h.omega**2 * np.asarray(rho, dtype=float) ** 2
    val = -(hbar**2 / (2.0 * m2)) * h.omega**2 / u**2
    return float(val) if np.ndim(rho) == 0 else val


def helicoid_embedding(h: HelicoidParams) -> Callable[[float, float], np.ndarray]:
    """Embedding callable (rho, z) -> point, for use with numeric_curvatures."""

    def f(rho: float, z: float) -> np.ndarray:
        return embed(h, SurfaceCoords(rho, z))

    return f


def numeric_curvatures(
    embedding: Callable[[float, float], Sequence[float]],
    p: SurfaceCoords,
    step: float = DEFAULT_FD_STEP,
) -> CurvaturePair:
    """Curvatures of an arbitrary embedding from central-difference forms.

    Builds the first and second fundamental forms with O(step^2) central
    differences, assembles the shape operator II * I^{-1}, and reads the mean
    and Gaussian curvature off its trace and determinant.

    Parameters
    ----------
    embedding : callable
        (rho, z) -> point in 3-space, twice differentiable near ``p``.
    p : SurfaceCoords
        Evaluation point.
    step : float
        Central-difference step in both coordinates.

    Raises
    ------
    DegenerateMetric
        If the numeric metric determinant is <= 0 (non-immersion point).
    """
    if step <= 0:
        raise ValueError("step must be positive")
    r, z = p.rho, p.z
    f = lambda a, b: np.asarray(embedding(a, b), dtype=float)

    r_u = (f(r + step, z) - f(r - step, z)) / (2.0 * step)
    r_v = (f(r, z + step) - f(r, z - step)) / (2.0 * step)
    r_uu = (f(r + step, z) - 2.0 * f(r, z) + f(r - step, z)) / step**2
    r_vv = (f(r, z + step) - 2.0 * f(r, z) + f(r, z - step)) / step**2
    r_uv = (
        f(r + step, z + step)
        - f(r + step, z - step)
        - f(r - step, z + step)
        + f(r - step, z - step)
    ) / (4.0 * step**2)

    E = float(r_u @ r_u)
    F = float(r_u @ r_v)
    G = float(r_v @ r_v)
    det1 = E * G - F * F
    if det1 <= 0:
        raise DegenerateMetric(f"metric determinant {det1:g} at rho={r:g}, z={z:g}")

    normal = np.cross(r_u, r_v)
    normal = normal / np.linalg.norm(normal)
    L = float(r_uu @ normal)
    M = float(r_uv @ normal)
    N = float(r_vv @ normal)

    # shape operator II * I^{-1}; invariants come from trace and determinant
    mean = (L * G - 2.0 * M * F + N * E) / (2.0 * det1)
    gaussian = (L * N - M * M) / det1
    disc = max(mean * mean - gaussian, 0.0)
    root = math.sqrt(disc)
    return CurvaturePair(
        kappa1=mean + root, kappa2=mean - root, mean=mean, gaussian=gaussian
    )
