"""Geometry layer: analytic helicoid formulas against the finite-difference oracle."""

import math

import numpy as np
import pytest

from helix_spectra.errors import DegenerateMetric, ZeroMass
from helix_spectra.geometry import (
    HelicoidParams,
    SurfaceCoords,
    embed,
    geometric_potential,
    helicoid_embedding,
    metric,
    numeric_curvatures,
    principal_curvatures,
)


def test_embed_axis_point():
    h = HelicoidParams(omega=1.0)
    np.testing.assert_array_equal(embed(h, SurfaceCoords(0.0, 5.0)), [0.0, 0.0, 5.0])


def test_embed_zero_angle():
    h = HelicoidParams(omega=1.0)
    np.testing.assert_array_equal(embed(h, SurfaceCoords(2.0, 0.0)), [2.0, 0.0, 0.0])


def test_embed_quarter_turn():
    h = HelicoidParams(omega=2.0 * math.pi * 0.5)
    c = math.cos(math.pi / 4.0)
    np.testing.assert_allclose(embed(h, SurfaceCoords(1.0, 0.25)), [c, c, 0.25], rtol=1e-12)


def test_turns_per_length():
    assert HelicoidParams(omega=2.0 * math.pi * 0.5).turns_per_length == pytest.approx(0.5)


def test_twist_rate_must_be_finite():
    with pytest.raises(ValueError):
        HelicoidParams(omega=math.nan)


def test_metric_values():
    np.testing.assert_array_equal(metric(HelicoidParams(1.0), 0.0), np.diag([1.0, 1.0]))
    np.testing.assert_array_equal(metric(HelicoidParams(0.0), 3.7), np.diag([1.0, 1.0]))
    np.testing.assert_array_equal(metric(HelicoidParams(1.0), 2.0), np.diag([1.0, 5.0]))


def test_metric_determinant():
    for omega in (0.5, 1.0, 2.0):
        h = HelicoidParams(omega)
        for rho in np.linspace(-5.0, 5.0, 11):
            det = np.linalg.det(metric(h, rho))
            assert det == pytest.approx(1.0 + omega**2 * rho**2, rel=1e-14)
            assert det >= 1.0


def test_principal_curvature_values():
    at0 = principal_curvatures(HelicoidParams(1.0), 0.0)
    assert (at0.kappa1, at0.kappa2, at0.mean, at0.gaussian) == (1.0, -1.0, 0.0, -1.0)

    flat = principal_curvatures(HelicoidParams(0.0), 3.0)
    assert (flat.kappa1, flat.kappa2, flat.mean, flat.gaussian) == (0.0, 0.0, 0.0, 0.0)

    at2 = principal_curvatures(HelicoidParams(1.0), 2.0)
    assert at2.kappa1 == pytest.approx(0.2, rel=1e-15)
    assert at2.kappa2 == pytest.approx(-0.2, rel=1e-15)
    assert at2.gaussian == pytest.approx(-0.04, rel=1e-15)


def test_mean_curvature_identically_zero():
    for omega in (0.5, 1.0, 2.0):
        for rho in np.linspace(-5.0, 5.0, 41):
            assert principal_curvatures(HelicoidParams(omega), rho).mean == 0.0


def test_geometric_potential_values():
    assert geometric_potential(HelicoidParams(1.0), 1.0, 1.0, 0.0) == pytest.approx(-0.5)
    assert geometric_potential(HelicoidParams(0.0), 1.0, 1.0, 1.0) == 0.0
    # sign flips with the sign of the normal mass
    assert geometric_potential(HelicoidParams(1.0), -0.01, 1.0, 0.0) == pytest.approx(50.0)


def test_geometric_potential_rejects_zero_mass():
    with pytest.raises(ZeroMass):
        geometric_potential(HelicoidParams(1.0), 0.0, 1.0, 0.5)


def test_geometric_potential_even_nonpositive_decaying():
    h = HelicoidParams(1.3)
    rho = np.linspace(0.0, 5.0, 101)
    v = geometric_potential(h, 1.0, 1.0, rho)
    assert np.all(v <= 0.0)
    assert np.all(np.diff(v) >= 0.0)
    np.testing.assert_array_equal(v, geometric_potential(h, 1.0, 1.0, -rho))


def test_numeric_curvatures_match_analytic():
    for omega in (0.5, 1.0, 2.0):
        h = HelicoidParams(omega)
        f = helicoid_embedding(h)
        for rho in np.linspace(-5.0, 5.0, 21):
            num = numeric_curvatures(f, SurfaceCoords(rho, 0.37))
            ref = principal_curvatures(h, rho)
            assert abs(num.kappa1 - ref.kappa1) < 1e-6
            assert abs(num.kappa2 - ref.kappa2) < 1e-6
            assert abs(num.mean - ref.mean) < 1e-6
            assert abs(num.gaussian - ref.gaussian) < 1e-6


def test_numeric_helicoid_is_minimal():
    num = numeric_curvatures(helicoid_embedding(HelicoidParams(1.0)), SurfaceCoords(0.7, 0.3))
    assert abs(num.mean) < 1e-6


def test_numeric_plane():
    num = numeric_curvatures(lambda u, v: (u, v, 0.0), SurfaceCoords(0.4, -1.2))
    assert abs(num.kappa1) < 1e-9
    assert abs(num.kappa2) < 1e-9


def test_numeric_sphere():
    def sphere(u, v):
        return (
            2.0 * math.sin(u) * math.cos(v),
            2.0 * math.sin(u) * math.sin(v),
            2.0 * math.cos(u),
        )

    num = numeric_curvatures(sphere, SurfaceCoords(0.7, 0.3))
    assert num.gaussian == pytest.approx(0.25, abs=1e-6)
    assert abs(num.mean) == pytest.approx(0.5, abs=1e-6)


def test_numeric_degenerate_embedding():
    with pytest.raises(DegenerateMetric):
        numeric_curvatures(lambda u, v: (u + v, u + v, 0.0), SurfaceCoords(0.0, 0.0))


def test_numeric_rejects_bad_step():
    f = helicoid_embedding(HelicoidParams(1.0))
    with pytest.raises(ValueError):
        numeric_curvatures(f, SurfaceCoords(0.5, 0.0), step=0.0)
