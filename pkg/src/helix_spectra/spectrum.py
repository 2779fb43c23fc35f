"""Quantized spectra and radial wavefunctions.

The oscillator frequency is an output here, not an input: polynomial
termination of the confluent-Heun series pins the pair (E, Omega) jointly for
each level, so every emitted line carries its own constrained frequency.
Lines whose constrained frequency is nonpositive are emitted with a flag
rather than dropped.

Level n = 0 and the two n = 1 branches have closed forms; higher n fall back
to a termination-based root search over the energy window.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from .errors import (
    ComplexDiscriminant,
    DegenerateAnisotropy,
    InvalidLine,
    NoRootInWindow,
    ZeroTwist,
)
from .heun import HeunParams, is_polynomial, series_coefficients, eval_on_grid
from .model import MassPair, ModelParams, anisotropy_x

SCAN_POINTS = 2000          # uniform scan resolution for the energy window
ROOT_RTOL = 1e-14           # bisection convergence (relative)
ROOT_MERGE_TOL = 1e-8       # duplicate roots within this are merged
LINE_IDENTITY_RTOL = 1e-12  # consistency bound on hbar*Omega*(2n + x/2 + 3/2) = E


@dataclass(frozen=True)
class ValidityFlags:
    x_real: bool = True
    frequency_positive: bool = True
    discriminant_real: bool = True
    nondegenerate_x: bool = True


@dataclass(frozen=True)
class SpectrumLine:
    """One quantized state: level n, angular number m, joint (E, Omega) pair."""

    n: int
    m: int
    energy: float
    frequency: float
    branch: str  # ground | n1_minus | n1_plus | generic
    flags: ValidityFlags


@dataclass(frozen=True)
class ParameterMap:
    """Heun parameters of a physical configuration plus the auxiliaries."""

    params: HeunParams
    x: float
    varpi: float
    k_squared: float


@dataclass(frozen=True)
class WavefunctionSample:
    rho: np.ndarray
    values: np.ndarray
    parity: str  # even | odd
    norm: float


def heun_parameters(p: ModelParams, E: float) -> ParameterMap:
    """Map (masses, m, omega, Omega, E) to the five Heun parameters.

    The equation argument is z = -omega^2 rho^2, so the twist rate must be
    nonzero; the flat limit is served by the numeric solver instead.

    Raises
    ------
    ZeroTwist
        If omega = 0.
    ComplexAnisotropy
        Propagated from the anisotropy parameter.
    """
    if p.omega == 0:
        raise ZeroTwist("omega = 0 has no Heun reduction; use the numeric solver")
    x = anisotropy_x(p.masses)
    varpi = p.masses.m1 * p.Omega / p.hbar
    k2 = 2.0 * p.masses.m1 * E / p.hbar**2
    w2 = p.omega**2
    params = HeunParams(
        alpha=varpi / w2,
        beta=-0.5,
        gamma=x / 2.0,
        delta=-k2 / (4.0 * w2),
        eta=(3.0 - 2.0 * p.m**2) / 8.0 + p.masses.ratio / 4.0 + k2 / (4.0 * w2),
    )
    return ParameterMap(params=params, x=x, varpi=varpi, k_squared=k2)


def energy_from_cndA(Omega: float, n: int, x: float, hbar: float) -> float:
    """First termination condition solved for E: hbar*Omega*(2n + x/2 + 3/2)."""
    return hbar * Omega * (2.0 * n + x / 2.0 + 1.5)


def omega_constraint_n0(p: ModelParams, E: float) -> float:
    """Frequency pinned by the second termination condition at level 0."""
    x = anisotropy_x(p.masses)
    return (p.hbar * p.omega**2 / p.masses.m1) * (
        x / 2.0
        - p.m**2
        + 2.0 * p.masses.m1 * E / (p.hbar**2 * p.omega**2)
        + p.masses.ratio
        + 0.5
    )


def _flags_for(Omega: float) -> ValidityFlags:
    return ValidityFlags(frequency_positive=Omega > 0)


def ground_state(
    masses: MassPair, m: int, omega: float = 1.0, hbar: float = 1.0
) -> SpectrumLine:
    """Closed-form level-0 line; (E, Omega) solve both termination conditions.

    Raises ComplexAnisotropy for mass pairs with 4*M1/M2 + 1 < 0 (the state
    is not allowed).
    """
    x = anisotropy_x(masses)
    energy = (
        (hbar**2 * omega**2 / (4.0 * masses.m1))
        * (x + 3.0)
        / (x + 2.0)
        * (2.0 * m**2 - x - 2.0 * masses.ratio - 1.0)
    )
    p = ModelParams(masses=masses, m=m, hbar=hbar, omega=omega)
    Omega = omega_constraint_n0(p, energy)
    return SpectrumLine(
        n=0, m=m, energy=energy, frequency=Omega, branch="ground", flags=_flags_for(Omega)
    )


def _n1_polynomials(m: int, x: float, r: float) -> tuple[float, float, float]:
    """Branch polynomials for level 1: (Q1, disc, gate).

    ``disc`` sits under the square root of the closed form.  ``gate`` is the
    allowed-state polynomial whose sign decides whether the (m, masses) cell
    admits level-1 states at all; for strongly anisotropic masses it is the
    stricter of the two.
    """
    m2 = float(m) ** 2
    q1 = 2.0 * m2 * (x + 4.0) - 2.0 * r * (x + 4.0) - 3.0 * x**2 - 23.0 * x - 32.0
    disc = (
        4.0 * m2**2
        - 8.0 * m2 * r
        - 4.0 * m2 * x**2
        - 32.0 * m2 * x
        - 44.0 * m2
        + 4.0 * r**2
        + 4.0 * r * x**2
        + 32.0 * r * x
        + 44.0 * r
        + x**4
        + 20.0 * x**3
        + 126.0 * x**2
        + 288.0 * x
        + 217.0
    )
    gate = (
        4.0 * m2**2
        - 4.0 * m2 * x**2
        + x**4
        - 8.0 * r * m2
        + 4.0 * r * x**2
        + 12.0 * x**3
        - 16.0 * m2 * x
        + 4.0 * r**2
        + 16.0 * r * x
        + 38.0 * x**2
        - 28.0 * m2
        + 28.0 * r
        + 40.0 * x
        + 17.0
    )
    return q1, disc, gate


def n1_spectrum(
    masses: MassPair, m: int, omega: float = 1.0, hbar: float = 1.0
) -> tuple[SpectrumLine, SpectrumLine]:
    """Closed-form level-1 pair (minus branch first, so energies ascend).

    Raises
    ------
    DegenerateAnisotropy
        At x = 2 (M1/M2 = 3/4), excluded by the level-1 branch structure.
    ComplexDiscriminant
        When either level-1 discriminant polynomial is negative: the state
        is not allowed for this (m, masses) cell.
    """
    x = anisotropy_x(masses)
    if x == 2.0:
        raise DegenerateAnisotropy("x = 2 (M1/M2 = 3/4) is excluded at level 1")
    r = masses.ratio
    q1, disc, gate = _n1_polynomials(m, x, r)
    if gate < 0 or disc < 0:
        raise ComplexDiscriminant(
            f"level-1 state not allowed for m={m}, M1={masses.m1:g}, M2={masses.m2:g}"
        )
    pre = hbar**2 * omega**2 * (x + 7.0) / (4.0 * masses.m1 * (x + 2.0) * (x + 6.0))
    root = 2.0 * math.sqrt(disc)
    denom = hbar * (2.0 + x / 2.0 + 1.5)
    lines = []
    for branch, e in (("n1_minus", pre * (q1 - root)), ("n1_plus", pre * (q1 + root))):
        Omega = e / denom
        lines.append(
            SpectrumLine(
                n=1, m=m, energy=e, frequency=Omega, branch=branch, flags=_flags_for(Omega)
            )
        )
    return lines[0], lines[1]


def omega_branches_n1(
    masses: MassPair, m: int, E: float, omega: float = 1.0, hbar: float = 1.0
) -> tuple[float, float]:
    """The two frequency branches of the level-1 determinant at fixed energy.

    These are the roots in Omega of the 2x2 termination determinant; feeding
    them back through the level-1 energy relation reproduces the closed-form
    energy set (exercised as an invariant in the tests).
    """
    x = anisotropy_x(masses)
    r = masses.ratio
    m1 = masses.m1
    m2_ = float(m) ** 2
    X = x / 2.0 - 0.6 * m2_ + 0.6 * r + 1.7
    Y = (
        hbar**4 * omega**4 * (m2_**2 - 2.0 * r * m2_ + r**2 - 4.0 * m2_ + 4.0 * r + 5.0 * x + 14.0)
        + hbar**2 * omega**2 * m1 * E * (-4.0 * m2_ + 4.0 * r + 8.0)
        + 4.0 * E**2 * m1**2
    )
    if Y < 0:
        raise ComplexDiscriminant(f"frequency-branch discriminant {Y:g} < 0")
    root = math.sqrt(Y)
    base = hbar**2 * omega**2 * X + 1.2 * m1 * E
    return (base + 0.4 * root) / (m1 * hbar), (base - 0.4 * root) / (m1 * hbar)


def _terminal_coefficient(p: ModelParams, n: int, E: float, x: float) -> float:
    """Coefficient v_{n+2} with the first termination condition enforced."""
    Omega = E / (p.hbar * (2.0 * n + x / 2.0 + 1.5))
    pm = heun_parameters(replace(p, Omega=Omega), E)
    series = series_coefficients(pm.params, n + 3)
    return float(series.coeffs[n + 2])


def generic_spectrum(
    p: ModelParams, n: int, window: tuple[float, float]
) -> list[SpectrumLine]:
    """Termination-based level-n lines inside an energy window.

    The first termination condition fixes Omega(E) analytically; roots of the
    (n+2)-th series coefficient are bracketed on a uniform scan, refined by
    bisection, and kept only if the resulting parameters genuinely terminate
    (spurious factors of the coefficient product are discarded).

    Raises NoRootInWindow when the scan finds no sign change.
    """
    if n < 0:
        raise ValueError("level n must be >= 0")
    lo, hi = float(window[0]), float(window[1])
    if not (math.isfinite(lo) and math.isfinite(hi)) or lo >= hi:
        raise NoRootInWindow(f"empty or unbounded window ({lo:g}, {hi:g})")
    x = anisotropy_x(p.masses)

    def coeff(E: float) -> float:
        return _terminal_coefficient(p, n, E, x)

    grid = np.linspace(lo, hi, SCAN_POINTS)
    vals = np.array([coeff(E) for E in grid])
    roots: list[float] = []
    for i in range(SCAN_POINTS - 1):
        a, b, fa, fb = grid[i], grid[i + 1], vals[i], vals[i + 1]
        if fa == 0.0:
            roots.append(float(a))
            continue
        if fa * fb >= 0.0:
            continue
        for _ in range(200):
            mid = 0.5 * (a + b)
            fm = coeff(mid)
            if fm == 0.0:
                a = b = mid
                break
            if fa * fm < 0:
                b, fb = mid, fm
            else:
                a, fa = mid, fm
            if abs(b - a) <= ROOT_RTOL * max(1.0, abs(a), abs(b)):
                break
        roots.append(0.5 * (a + b))
    if vals[-1] == 0.0:
        roots.append(float(grid[-1]))
    if not roots:
        raise NoRootInWindow(f"no sign change of the terminal coefficient in ({lo:g}, {hi:g})")

    merged: list[float] = []
    for root in sorted(roots):
        if merged and abs(root - merged[-1]) <= ROOT_MERGE_TOL * max(1.0, abs(root)):
            continue
        merged.append(root)

    lines = []
    denom = p.hbar * (2.0 * n + x / 2.0 + 1.5)
    for E in merged:
        Omega = E / denom
        pm = heun_parameters(replace(p, Omega=Omega), E)
        if is_polynomial(pm.params, max_degree=n + 2) is None:
            continue
        lines.append(
            SpectrumLine(
                n=n, m=p.m, energy=E, frequency=Omega, branch="generic", flags=_flags_for(Omega)
            )
        )
    return lines


def line_identity_gap(line: SpectrumLine, x: float, hbar: float) -> float:
    """Relative gap of the joint (E, Omega) consistency identity."""
    target = energy_from_cndA(line.frequency, line.n, x, hbar)
    return abs(target - line.energy) / max(1.0, abs(line.energy))


def radial_wavefunction(
    p: ModelParams, line: SpectrumLine, parity: str, grid
) -> WavefunctionSample:
    """Radial eigenfunction samples for a spectrum line on a symmetric grid.

    The even branch is analytic at the origin; the odd branch carries an
    explicit factor rho and a sign-flipped second parameter.  The returned
    values are normalized to unit L2 norm by trapezoidal quadrature, with the
    pre-scaling norm reported.

    Raises
    ------
    InvalidLine
        If the line's (E, Omega) pair fails the consistency identity.
    """
    if parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd'")
    rho = np.asarray(grid, dtype=float)
    if rho.ndim != 1 or rho.size < 3:
        raise ValueError("grid must be a 1-d array with at least 3 points")
    if not np.allclose(rho, -rho[::-1], rtol=0.0, atol=1e-12 * max(1.0, float(np.abs(rho).max()))):
        raise ValueError("grid must be symmetric about 0")

    x = anisotropy_x(p.masses)
    if line_identity_gap(line, x, p.hbar) > LINE_IDENTITY_RTOL:
        raise InvalidLine(
            f"(E, Omega) = ({line.energy:g}, {line.frequency:g}) fails the joint identity"
        )

    pm = heun_parameters(replace(p, Omega=line.frequency), line.energy)
    params = pm.params
    if parity == "odd":
        params = replace(params, beta=-params.beta)

    z = -(p.omega**2) * rho**2
    phi = eval_on_grid(params, z)
    u = 1.0 + p.omega**2 * rho**2
    f = u ** ((pm.params.gamma + 1.0) / 2.0) * np.exp(-pm.varpi * rho**2 / 2.0) * phi
    if parity == "odd":
        f = rho * f
    norm = math.sqrt(float(np.trapezoid(f * f, rho)))
    if norm == 0.0:
        raise InvalidLine("wavefunction vanished identically on the grid")
    return WavefunctionSample(rho=rho, values=f / norm, parity=parity, norm=norm)
