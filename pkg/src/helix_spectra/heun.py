"""Confluent Heun engine.

Series solution around z = 0 through the three-term recurrence, polynomial
termination detection, and evaluation outside the series disc by adaptive ODE
continuation along the real axis.  The equation solved is

    f'' + (alpha + (beta+1)/z + (gamma+1)/(z-1)) f'
        + (mu/z + nu/(z-1)) f = 0,

with accessory parameters

    mu = (alpha - beta - gamma + alpha*beta - beta*gamma)/2 - eta,
    nu = (alpha + beta + gamma + alpha*gamma + beta*gamma)/2 + delta + eta.

Regular singular points sit at z = 0 and z = 1; the series branch analytic at
the origin is normalized to f(0) = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.integrate import solve_ivp

from .errors import (
    NonConvergence,
    RecurrenceBreakdown,
    SingularArgument,
    SingularPath,
)

SERIES_DISC = 0.75          # series used for |z| <= SERIES_DISC
SERIES_TAIL_TOL = 1e-14     # relative tail bound for series summation
SERIES_TERM_BUDGET = 512    # max series terms before NonConvergence
POLY_DETECT_TOL = 1e-10     # relative threshold for termination detection
POLY_DETECT_MAX_DEGREE = 64
CONTINUATION_RTOL = 1e-10
CONTINUATION_Z0 = 0.5       # series handoff point for ODE continuation
FD_SECOND_DERIV_STEP = 1e-5


@dataclass(frozen=True)
class HeunParams:
    """The five confluent-Heun parameters plus derived accessory values."""

    alpha: float
    beta: float
    gamma: float
    delta: float
    eta: float

    @property
    def mu(self) -> float:
        a, b, g = self.alpha, self.beta, self.gamma
        return 0.5 * (a - b - g + a * b - b * g) - self.eta

    @property
    def nu(self) -> float:
        a, b, g = self.alpha, self.beta, self.gamma
        return 0.5 * (a + b + g + a * g + b * g) + self.delta + self.eta


@dataclass(frozen=True)
class HeunSeries:
    params: HeunParams
    coeffs: np.ndarray
    truncation: int
    polynomial_degree: Optional[int] = field(default=None)


def recurrence_terms(p: HeunParams, s: int) -> tuple[float, float, float]:
    """(A_s, B_s, C_s) of the recurrence A_s v_s = B_s v_{s-1} + C_s v_{s-2}."""
    a, b, g = p.alpha, p.beta, p.gamma
    A = 1.0 + b / s
    B = 1.0 + (b + g - a - 1.0) / s + (
        p.eta - (b + g - a) / 2.0 - a * b / 2.0 + b * g / 2.0
    ) / s**2
    # written without dividing by alpha so the zero-frequency case stays finite
    C = (p.delta + a * ((b + g) / 2.0 + s - 1.0)) / s**2
    return A, B, C


def series_coefficients(p: HeunParams, n_terms: int) -> HeunSeries:
    """First ``n_terms`` series coefficients v_0..v_{n_terms-1}.

    Forward recurrence with v_{-1} = 0, v_0 = 1.

    Raises
    ------
    RecurrenceBreakdown
        If some A_s vanishes (beta equal to a negative integer in range).
    """
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    v = np.empty(n_terms)
    v[0] = 1.0
    for s in range(1, n_terms):
        A, B, C = recurrence_terms(p, s)
        if A == 0.0:
            raise RecurrenceBreakdown(f"A_{s} = 0 (beta = {p.beta:g})")
        prev2 = v[s - 2] if s >= 2 else 0.0
        v[s] = (B * v[s - 1] + C * prev2) / A
    return HeunSeries(params=p, coeffs=v, truncation=n_terms)


def is_polynomial(
    p: HeunParams,
    max_degree: int = POLY_DETECT_MAX_DEGREE,
    tol: float = POLY_DETECT_TOL,
) -> Optional[int]:
    """Detect termination of the series into a polynomial.

    Returns the degree s0 - 1 for the smallest s0 with |v_{s0}| and |v_{s0+1}|
    both below ``tol`` times the running coefficient maximum, or None when no
    such s0 <= max_degree + 2 exists.  Two consecutive vanishing coefficients
    force all later ones to vanish by the three-term structure.
    """
    if max_degree < 1:
        raise ValueError("max_degree must be >= 1")
    series = series_coefficients(p, max_degree + 4)
    v = np.abs(series.coeffs)
    running_max = v[0]
    for s0 in range(1, max_degree + 3):
        if v[s0] <= tol * running_max and v[s0 + 1] <= tol * running_max:
            return s0 - 1
        running_max = max(running_max, v[s0])
    return None


def _series_eval(p: HeunParams, z: float) -> tuple[float, float, float]:
    """Series value and first two derivatives at |z| <= SERIES_DISC.

    Sums until two successive terms fall below SERIES_TAIL_TOL relative to
    the partial sum (all three sums share the truncation point).
    """
    if z == 0.0:
        _, B, _ = recurrence_terms(p, 1)
        A1 = 1.0 + p.beta
        if A1 == 0.0:
            raise RecurrenceBreakdown("A_1 = 0 (beta = -1)")
        v1 = B / A1
        A2, B2, C2 = recurrence_terms(p, 2)
        if A2 == 0.0:
            raise RecurrenceBreakdown("A_2 = 0 (beta = -2)")
        v2 = (B2 * v1 + C2) / A2
        return 1.0, v1, 2.0 * v2
    f = f1 = f2 = 0.0
    v_prev2 = 0.0
    v_prev = 1.0
    zp = 1.0  # z^s
    small_streak = 0
    for s in range(SERIES_TERM_BUDGET):
        if s == 0:
            v = 1.0
        else:
            A, B, C = recurrence_terms(p, s)
            if A == 0.0:
                raise RecurrenceBreakdown(f"A_{s} = 0 (beta = {p.beta:g})")
            v = (B * v_prev + C * v_prev2) / A
            v_prev2, v_prev = v_prev, v
        term = v * zp
        f += term
        if s >= 1:
            f1 += s * v * zp / z
        if s >= 2:
            f2 += s * (s - 1) * v * zp / (z * z)
        zp *= z
        if abs(term) <= SERIES_TAIL_TOL * max(abs(f), 1e-300):
            small_streak += 1
            if small_streak >= 2 and s >= 2:
                return f, f1, f2
        else:
            small_streak = 0
    raise NonConvergence(
        f"series tail above {SERIES_TAIL_TOL:g} after {SERIES_TERM_BUDGET} terms at z={z:g}"
    )


def _poly_eval(coeffs: np.ndarray, degree: int, z) -> tuple:
    """Evaluate the detected polynomial and derivatives (valid for all z)."""
    c = coeffs[: degree + 1]
    zs = np.asarray(z, dtype=float)
    f = np.zeros_like(zs)
    f1 = np.zeros_like(zs)
    f2 = np.zeros_like(zs)
    for ck in c[::-1]:  # Horner, with derivative carries
        f2 = f2 * zs + 2.0 * f1
        f1 = f1 * zs + f
        f = f * zs + ck
    return f, f1, f2


def _ode_rhs(p: HeunParams):
    mu, nu = p.mu, p.nu
    a, b, g = p.alpha, p.beta, p.gamma

    def rhs(z, y):
        f, f1 = y
        f2 = -(a + (b + 1.0) / z + (g + 1.0) / (z - 1.0)) * f1 - (
            mu / z + nu / (z - 1.0)
        ) * f
        return (f1, f2)

    return rhs


def _continuation(p: HeunParams, z: float):
    """Integrate the ODE from the series handoff point out to z.

    Returns (f, f', f'', dense solution).  The second derivative comes from a
    one-sided O(h^2) difference of the dense-output first derivative, so the
    reported ODE residual genuinely tests the integration.
    """
    if z >= 1.0:
        raise SingularPath(f"continuation to z={z:g} crosses the singular point z=1")
    z0 = CONTINUATION_Z0 if z > 0 else -CONTINUATION_Z0
    f0, f10, _ = _series_eval(p, z0)
    sol = solve_ivp(
        _ode_rhs(p),
        (z0, z),
        (f0, f10),
        method="RK45",
        rtol=CONTINUATION_RTOL,
        atol=1e-14,
        dense_output=True,
    )
    if not sol.success:
        raise NonConvergence(f"ODE continuation failed at z={z:g}: {sol.message}")
    f, f1 = sol.y[:, -1]
    h = FD_SECOND_DERIV_STEP if z0 > z else -FD_SECOND_DERIV_STEP
    # one-sided 3-point derivative of f' pointing back into the solved interval
    g0 = sol.sol(z)[1]
    g1 = sol.sol(z + h)[1]
    g2 = sol.sol(z + 2.0 * h)[1]
    f2 = (-3.0 * g0 + 4.0 * g1 - g2) / (2.0 * h)
    return float(f), float(f1), float(f2), sol


def _eval_full(p: HeunParams, z: float) -> tuple[float, float, float, str]:
    """(value, f', f'', method) with method in {series, polynomial, continuation}."""
    z = float(z)
    if abs(z) <= SERIES_DISC:
        f, f1, f2 = _series_eval(p, z)
        return f, f1, f2, "series"
    degree = is_polynomial(p)
    if degree is not None:
        series = series_coefficients(p, degree + 1)
        f, f1, f2 = _poly_eval(series.coeffs, degree, z)
        return float(f), float(f1), float(f2), "polynomial"
    f, f1, f2, _ = _continuation(p, z)
    return f, f1, f2, "continuation"


def heunc_eval(p: HeunParams, z: float) -> float:
    """Value of the origin-normalized solution at real z.

    Series summation inside |z| <= 0.75; direct polynomial evaluation when
    the parameters terminate; otherwise ODE continuation from z0 = +-0.5.

    Raises
    ------
    SingularPath
        Continuation target at or beyond z = 1.
    NonConvergence
        Series term budget exhausted.
    """
    return _eval_full(p, z)[0]


def heunc_eval_method(p: HeunParams, z: float) -> tuple[float, str]:
    """Value plus the evaluation-method tag (series | polynomial | continuation)."""
    f, _, _, method = _eval_full(p, z)
    return f, method


def continuation_value(p: HeunParams, z: float) -> float:
    """Force the ODE-continuation route regardless of |z| (validation path)."""
    if abs(z) <= abs(CONTINUATION_Z0):
        raise ValueError("continuation check needs |z| > the handoff point 0.5")
    return _continuation(p, z)[0]


def eval_on_grid(p: HeunParams, zs: np.ndarray) -> np.ndarray:
    """Evaluate on a batch of real arguments sharing one continuation sweep.

    Points inside the series disc are summed directly; points beyond it are
    read from the dense output of a single integration per sign, instead of
    one integration per point.
    """
    zs = np.asarray(zs, dtype=float)
    out = np.empty(zs.shape)
    degree = is_polynomial(p)
    if degree is not None:
        series = series_coefficients(p, degree + 1)
        out[...] = _poly_eval(series.coeffs, degree, zs)[0]
        return out
    inside = np.abs(zs) <= SERIES_DISC
    for i in np.argwhere(inside).ravel():
        out[i] = _series_eval(p, zs[i])[0]
    for sign in (-1.0, 1.0):
        sel = (~inside) & (np.sign(zs) == sign)
        if not np.any(sel):
            continue
        zfar = zs[sel]
        extreme = zfar.min() if sign < 0 else zfar.max()
        if extreme >= 1.0:
            raise SingularPath("grid extends to or beyond the singular point z=1")
        z0 = sign * CONTINUATION_Z0
        f0, f10, _ = _series_eval(p, z0)
        sol = solve_ivp(
            _ode_rhs(p),
            (z0, extreme),
            (f0, f10),
            method="RK45",
            rtol=CONTINUATION_RTOL,
            atol=1e-14,
            dense_output=True,
        )
        if not sol.success:
            raise NonConvergence(f"ODE continuation failed: {sol.message}")
        out[sel] = sol.sol(zfar)[0]
    return out


def ode_residual(p: HeunParams, z: float, f: float, f1: float, f2: float) -> float:
    """|f'' + (alpha + (beta+1)/z + (gamma+1)/(z-1)) f' + (mu/z + nu/(z-1)) f|."""
    if z == 0.0 or z == 1.0:
        raise SingularArgument("residual undefined at z = 0 or z = 1")
    lhs = f2 + (p.alpha + (p.beta + 1.0) / z + (p.gamma + 1.0) / (z - 1.0)) * f1 + (
        p.mu / z + p.nu / (z - 1.0)
    ) * f
    return abs(lhs)


def eval_with_residual(p: HeunParams, z: float) -> tuple[float, str, Optional[float]]:
    """(value, method, residual); residual is None at the singular origin."""
    f, f1, f2, method = _eval_full(p, z)
    if z == 0.0:
        return f, method, None
    return f, method, ode_residual(p, z, f, f1, f2)
