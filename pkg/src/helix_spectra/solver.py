"""Finite-difference eigensolver for the radial equation.

Second-order central differences with hard Dirichlet walls produce a
symmetric tridiagonal operator whose lowest eigenvalues are isolated by
Sturm-sequence counting and refined by bisection.  This route shares no code
with the closed forms, which is the point: it is the brute-force oracle the
quantized (E, Omega) pairs are checked against.  Unlike the closed forms it
takes Omega as a free input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.linalg import solve_banded

from .errors import NotAnEigenvalue
from .model import ModelParams, effective_potential

DEFAULT_GRID_N = 6001
DEFAULT_GRID_L = 12.0
EIG_ABS_TOL = 1e-12        # bisection width, matrix units
RESIDUAL_BOUND = 1e-8      # acceptance bound for inverse iteration
PARITY_RTOL = 1e-6         # mirrored-sample classification threshold
INVERSE_ITER_SEED = 2718
INVERSE_ITER_MAX = 50


@dataclass(frozen=True)
class RadialGrid:
    """Uniform symmetric grid on [-L, L]; N odd so rho = 0 is a sample."""

    L: float
    N: int

    def __post_init__(self):
        if self.L <= 0:
            raise ValueError("half-width L must be positive")
        if self.N < 3 or self.N % 2 == 0:
            raise ValueError("N must be odd and >= 3")

    @property
    def h(self) -> float:
        return 2.0 * self.L / (self.N - 1)

    def rho(self) -> np.ndarray:
        return np.linspace(-self.L, self.L, self.N)

    def interior(self) -> np.ndarray:
        return self.rho()[1:-1]


@dataclass(frozen=True)
class DiscreteOperator:
    diagonal: np.ndarray     # interior values hbar^2/(M1 h^2) + V(rho_i)
    offdiag: float           # constant -hbar^2/(2 M1 h^2)
    grid: RadialGrid


@dataclass(frozen=True)
class Eigenpair:
    energy: float
    vector: np.ndarray       # interior samples, unit norm
    parity: str              # even | odd | none
    nodes: int
    grid: RadialGrid


def default_grid(varpi: float = 0.0) -> RadialGrid:
    """Default box: L = max(12, 6/sqrt(varpi)); the Gaussian factor
    exp(-varpi rho^2/2) bounds the support when varpi > 0."""
    L = DEFAULT_GRID_L
    if varpi > 0:
        L = max(L, 6.0 / math.sqrt(varpi))
    return RadialGrid(L=L, N=DEFAULT_GRID_N)


def discretize(p: ModelParams, g: RadialGrid) -> DiscreteOperator:
    """Central-difference operator with Dirichlet boundaries at +-L."""
    rho = g.interior()
    v = effective_potential(p, rho)
    if not np.all(np.isfinite(v)):
        raise ValueError("effective potential not finite on the interior grid")
    kin = p.hbar**2 / (p.masses.m1 * g.h**2)
    return DiscreteOperator(diagonal=kin + v, offdiag=-0.5 * kin, grid=g)


def sturm_count(op: DiscreteOperator, lam) -> np.ndarray:
    """Number of eigenvalues strictly below each shift in ``lam``.

    Counts negative pivots of the LDL^T factorization of (T - lam I).  Zero
    pivots are nudged to a tiny negative value, the usual safeguard against
    division blowup.  Plain float arithmetic; at bisection batch sizes this
    beats per-element array ops by an order of magnitude.
    """
    shifts = np.atleast_1d(np.asarray(lam, dtype=float))
    d = op.diagonal.tolist()
    off2 = float(op.offdiag) ** 2
    pivmin = max(off2 * 1e-30, 1e-290)
    out = np.empty(shifts.size, dtype=np.int64)
    for j, s in enumerate(shifts.tolist()):
        q = d[0] - s
        if -pivmin < q < pivmin:
            q = -pivmin
        count = 1 if q < 0 else 0
        for di in d[1:]:
            q = (di - s) - off2 / q
            if -pivmin < q < pivmin:
                q = -pivmin
            if q < 0:
                count += 1
        out[j] = count
    return out


def _bracket(op: DiscreteOperator) -> tuple[float, float]:
    # Gershgorin bounds for the tridiagonal
    r = 2.0 * abs(op.offdiag)
    return float(op.diagonal.min() - r), float(op.diagonal.max() + r)


def lowest_eigenvalues(op: DiscreteOperator, k: int) -> np.ndarray:
    """The k smallest eigenvalues, ascending, to 1e-12 absolute."""
    n = op.diagonal.size
    if not 1 <= k <= n:
        raise ValueError(f"k must be in [1, {n}]")
    return eigenvalues_by_indices(op, np.arange(k))


def eigenvalues_by_indices(op: DiscreteOperator, indices) -> np.ndarray:
    """Eigenvalues at the given 0-based ascending indices, batched.

    All brackets advance on one Sturm count per sweep, so asking for several
    indices costs barely more than one.
    """
    idx = np.atleast_1d(np.asarray(indices, dtype=np.int64))
    n = op.diagonal.size
    if idx.size == 0:
        return np.empty(0)
    if idx.min() < 0 or idx.max() >= n:
        raise ValueError("index out of range")
    lo_all, hi_all = _bracket(op)
    lo = np.full(idx.size, lo_all)
    hi = np.full(idx.size, hi_all)
    targets = idx + 1
    while np.max(hi - lo) > EIG_ABS_TOL:
        mid = 0.5 * (lo + hi)
        counts = sturm_count(op, mid)
        take_hi = counts >= targets
        hi = np.where(take_hi, mid, hi)
        lo = np.where(take_hi, lo, mid)
    return 0.5 * (lo + hi)


def eigenvalue_by_index(op: DiscreteOperator, index: int) -> float:
    """Eigenvalue number ``index`` (0-based, ascending)."""
    return float(eigenvalues_by_indices(op, [index])[0])


def nearest_eigenvalue(op: DiscreteOperator, E: float) -> float:
    """The eigenvalue closest to E (the two Sturm neighbors, refined)."""
    n = op.diagonal.size
    below = int(sturm_count(op, E)[0])
    wanted = [i for i in (below - 1, below) if 0 <= i < n]
    candidates = eigenvalues_by_indices(op, wanted)
    return float(candidates[np.argmin(np.abs(candidates - E))])


def _apply(op: DiscreteOperator, y: np.ndarray) -> np.ndarray:
    out = op.diagonal * y
    out[:-1] += op.offdiag * y[1:]
    out[1:] += op.offdiag * y[:-1]
    return out


def count_nodes(vector: np.ndarray) -> int:
    """Interior sign changes, ignoring samples below 1e-9 of the peak."""
    v = vector[np.abs(vector) > 1e-9 * np.abs(vector).max()]
    return int(np.sum(np.sign(v[1:]) * np.sign(v[:-1]) < 0))


def classify_parity(vector: np.ndarray) -> str:
    flipped = vector[::-1]
    scale = float(np.linalg.norm(vector))
    even_gap = float(np.linalg.norm(vector - flipped)) / scale
    odd_gap = float(np.linalg.norm(vector + flipped)) / scale
    if even_gap < PARITY_RTOL:
        return "even"
    if odd_gap < PARITY_RTOL:
        return "odd"
    return "none"


def eigenfunction(op: DiscreteOperator, E: float) -> Eigenpair:
    """Inverse-iteration eigenvector at an eigenvalue estimate E.

    Deterministic random start, at most 50 solves, Rayleigh-quotient polish;
    the pair is accepted only if ||(T - E)f|| / ||f|| <= 1e-8.

    Raises NotAnEigenvalue when the residual bound is not met (E too far
    from the spectrum).
    """
    n = op.diagonal.size
    rng = np.random.default_rng(INVERSE_ITER_SEED)
    y = rng.standard_normal(n)
    y /= np.linalg.norm(y)
    shift = E
    ab = np.zeros((3, n))
    theta = E
    for _ in range(INVERSE_ITER_MAX):
        ab[0, 1:] = op.offdiag
        ab[1, :] = op.diagonal - shift
        ab[2, :-1] = op.offdiag
        try:
            y_new = solve_banded((1, 1), ab, y)
        except np.linalg.LinAlgError:
            shift += 1e-12 * max(1.0, abs(shift))
            continue
        norm = np.linalg.norm(y_new)
        if not np.isfinite(norm) or norm == 0.0:
            shift += 1e-12 * max(1.0, abs(shift))
            continue
        y = y_new / norm
        theta = float(y @ _apply(op, y))
        residual = float(np.linalg.norm(_apply(op, y) - theta * y))
        if residual <= RESIDUAL_BOUND:
            if abs(theta - E) > 1e-4 * max(1.0, abs(E)):
                break  # converged to a different eigenvalue than requested
            sign = 1.0 if y[np.argmax(np.abs(y))] > 0 else -1.0
            y = sign * y
            return Eigenpair(
                energy=theta,
                vector=y,
                parity=classify_parity(y),
                nodes=count_nodes(y),
                grid=op.grid,
            )
    raise NotAnEigenvalue(
        f"no eigenpair at E={E:.12g} within residual {RESIDUAL_BOUND:g} (theta={theta:.12g})"
    )
