"""Series engine: recurrence, termination detection, evaluation routes, residuals."""

import numpy as np
import pytest

from helix_spectra import heun
from helix_spectra.errors import (
    NonConvergence,
    RecurrenceBreakdown,
    SingularArgument,
    SingularPath,
)
from helix_spectra.heun import (
    HeunParams,
    continuation_value,
    eval_on_grid,
    eval_with_residual,
    heunc_eval,
    heunc_eval_method,
    is_polynomial,
    ode_residual,
    recurrence_terms,
    series_coefficients,
)

GENERIC = HeunParams(alpha=0.3, beta=0.2, gamma=0.4, delta=-0.1, eta=0.25)

# ground line of the isotropic m = 2 configuration: terminates at degree 0
POLY0 = HeunParams(
    alpha=0.3262379212492639,
    beta=-0.5,
    gamma=1.118033988749895,
    delta=-0.42705098312484224,
    eta=0.05205098312484224,
)

# upper first-excited branch of the same configuration: degree 1
POLY1 = HeunParams(
    alpha=0.18609264002640644,
    beta=-0.5,
    gamma=1.118033988749895,
    delta=-0.42969106834907206,
    eta=0.05469106834907206,
)


def test_accessory_parameters():
    p = GENERIC
    a, b, g = p.alpha, p.beta, p.gamma
    assert p.mu == pytest.approx(0.5 * (a - b - g + a * b - b * g) - p.eta, rel=1e-15)
    assert p.nu == pytest.approx(0.5 * (a + b + g + a * g + b * g) + p.delta + p.eta, rel=1e-15)


def test_recurrence_term_formulas():
    p = GENERIC
    for s in (1, 2, 5):
        A, B, C = recurrence_terms(p, s)
        assert A == pytest.approx(1.0 + p.beta / s, rel=1e-15)
        bracket = (
            p.eta
            - (p.beta + p.gamma - p.alpha) / 2.0
            - p.alpha * p.beta / 2.0
            + p.beta * p.gamma / 2.0
        )
        assert B == pytest.approx(
            1.0 + (p.beta + p.gamma - p.alpha - 1.0) / s + bracket / s**2, rel=1e-15
        )
        assert C == pytest.approx(
            (p.delta + p.alpha * ((p.beta + p.gamma) / 2.0 + s - 1.0)) / s**2, rel=1e-15
        )


def test_first_recurrence_term_is_minus_mu():
    # B_s s^2 = (s - 1)(s + beta + gamma - alpha) - mu, so B_1 = -mu
    _, B1, _ = recurrence_terms(GENERIC, 1)
    assert B1 == pytest.approx(-GENERIC.mu, rel=1e-14)


def test_series_head():
    s = series_coefficients(GENERIC, 4)
    assert s.coeffs[0] == 1.0
    A1, B1, _ = recurrence_terms(GENERIC, 1)
    assert s.coeffs[1] == pytest.approx(B1 / A1, rel=1e-15)
    assert s.truncation == 4


def test_series_needs_at_least_one_term():
    with pytest.raises(ValueError):
        series_coefficients(GENERIC, 0)


def test_recurrence_breakdown_at_negative_integer_beta():
    p = HeunParams(alpha=0.3, beta=-1.0, gamma=0.4, delta=-0.1, eta=0.25)
    with pytest.raises(RecurrenceBreakdown):
        series_coefficients(p, 4)


def test_is_polynomial():
    assert is_polynomial(POLY0) == 0
    assert is_polynomial(POLY1) == 1
    assert is_polynomial(GENERIC) is None
    with pytest.raises(ValueError):
        is_polynomial(GENERIC, max_degree=0)


def test_normalization_at_origin():
    assert heunc_eval(GENERIC, 0.0) == 1.0
    value, method, residual = eval_with_residual(GENERIC, 0.0)
    assert (value, method, residual) == (1.0, "series", None)


def test_method_selection():
    assert heunc_eval_method(GENERIC, -0.4)[1] == "series"
    assert heunc_eval_method(GENERIC, -1.5)[1] == "continuation"
    assert heunc_eval_method(POLY1, -1.5)[1] == "polynomial"


def test_series_residual_near_roundoff():
    for z in (-0.6, -0.3, 0.3, 0.6):
        value, _, residual = eval_with_residual(GENERIC, z)
        assert residual < 1e-10 * max(1.0, abs(value))


def test_series_vs_continuation_agreement():
    rng = np.random.default_rng(7)
    for _ in range(10):
        p = HeunParams(*rng.uniform(-2.0, 2.0, size=5))
        for z in (-0.74, -0.6, 0.6, 0.74):
            s = heunc_eval(p, z)
            c = continuation_value(p, z)
            assert abs(s - c) <= 1e-8 * max(1.0, abs(s))


def test_continuation_needs_distance_from_origin():
    with pytest.raises(ValueError):
        continuation_value(GENERIC, 0.3)


def test_polynomial_route_evaluates_beyond_singular_point():
    # termination makes z = 1 harmless: plain Horner evaluation everywhere
    series = series_coefficients(POLY1, 2)
    direct = series.coeffs[0] + series.coeffs[1] * 3.0
    assert heunc_eval(POLY1, 3.0) == pytest.approx(direct, rel=1e-12)
    value, method, residual = eval_with_residual(POLY1, 3.0)
    assert method == "polynomial"
    assert residual < 1e-10


def test_singular_path():
    with pytest.raises(SingularPath):
        heunc_eval(GENERIC, 1.2)
    with pytest.raises(SingularPath):
        eval_on_grid(GENERIC, np.array([-0.5, 1.0]))


def test_residual_rejects_singular_arguments():
    with pytest.raises(SingularArgument):
        ode_residual(GENERIC, 0.0, 1.0, 0.0, 0.0)
    with pytest.raises(SingularArgument):
        ode_residual(GENERIC, 1.0, 1.0, 0.0, 0.0)


def test_series_term_budget(monkeypatch):
    monkeypatch.setattr(heun, "SERIES_TERM_BUDGET", 6)
    with pytest.raises(NonConvergence):
        heunc_eval(HeunParams(2.0, 1.5, -1.8, 1.9, -1.7), 0.7)


def test_eval_on_grid_matches_pointwise():
    zs = np.array([-2.5, -1.2, -0.6, -0.2, 0.0, 0.3, 0.74, 0.9])
    batch = eval_on_grid(GENERIC, zs)
    for z, got in zip(zs, batch):
        assert got == pytest.approx(heunc_eval(GENERIC, float(z)), rel=1e-8, abs=1e-12)


def test_eval_on_grid_polynomial_route():
    # degree-0 termination: the function is identically 1
    batch = eval_on_grid(POLY0, np.array([-3.0, 0.5, 2.0]))
    np.testing.assert_allclose(batch, 1.0, rtol=1e-12)
