"""Four-velocity, stress-energy, and the covariant divergence residual."""

from __future__ import annotations

import math

import numpy as np
import pytest

from dsburgers import (
    DomainError,
    FluidPoint,
    SpacetimeParams,
    divergence_residual,
    four_velocity,
    metric_components,
    stress_energy,
)


def test_four_velocity_at_rest():
    u = four_velocity(SpacetimeParams(lam=1.0), 0.5, 0.0)
    assert u.u0 == pytest.approx(2.0 / math.sqrt(3.0), rel=1e-15)
    assert u.u1 == 0.0


def test_four_velocity_sign_follows_v():
    params = SpacetimeParams(lam=-1.0)
    assert four_velocity(params, 0.5, 0.3).u1 > 0
    assert four_velocity(params, 0.5, -0.3).u1 < 0


def test_four_velocity_normalization_grid():
    params = SpacetimeParams(lam=1.0)
    worst = 0.0
    for r in np.linspace(0.05, 0.95, 50):
        m = metric_components(params, r, math.pi / 2)
        for v in np.linspace(-0.9, 0.9, 50):
            u = four_velocity(params, r, v)
            norm = m.cov[0] * u.u0**2 + m.cov[1] * u.u1**2
            worst = max(worst, abs(norm + 1.0))
    assert worst <= 1e-12


def test_four_velocity_recovers_coordinate_speed():
    # defining relation v = c u^1 / ((1 - L r^2) u^0)
    params = SpacetimeParams(lam=0.8, c=1.0)
    for r, v in [(0.3, 0.5), (0.7, -0.4), (0.9, 0.1)]:
        u = four_velocity(params, r, v)
        x = params.horizon_factor(r)
        assert params.c * u.u1 / (x * u.u0) == pytest.approx(v, rel=1e-13)


@pytest.mark.parametrize("v", [1.0, -1.0, 1.5])
def test_four_velocity_rejects_luminal_speed(v):
    with pytest.raises(DomainError):
        four_velocity(SpacetimeParams(lam=0.0), 0.5, v)


def test_four_velocity_rejects_horizon():
    with pytest.raises(DomainError):
        four_velocity(SpacetimeParams(lam=1.0), 1.0, 0.0)


def test_stress_energy_reference_point():
    t = stress_energy(
        SpacetimeParams(lam=1.0),
        0.5,
        math.pi / 2,
        FluidPoint(rho=2.0, p=0.0, v=0.5),
    )
    assert t.t01 == pytest.approx(4.0 / 3.0, rel=1e-14)
    assert t.t11 == pytest.approx(0.5, rel=1e-14)
    assert t.t22 == 0.0
    assert t.t33 == 0.0


def test_stress_energy_dust_has_no_angular_stress():
    t = stress_energy(
        SpacetimeParams(lam=-0.5),
        0.4,
        1.0,
        FluidPoint(rho=1.3, p=0.0, v=-0.2),
    )
    assert t.t22 == 0.0 and t.t33 == 0.0


def test_stress_energy_is_affine_in_pressure():
    params = SpacetimeParams(lam=0.5)
    r, theta, v = 0.6, 1.1, 0.3
    x = params.horizon_factor(r)
    y = params.c**2 - v * v
    expected = (
        v * v / (y * x)
        + params.c * v / y
        + params.c**2 * x / y
        + 1.0 / r**2
        + 1.0 / (r**2 * math.sin(theta) ** 2)
    )
    delta = 1e-6

    def total(p):
        t = stress_energy(params, r, theta, FluidPoint(rho=1.0, p=p, v=v))
        return t.t00 + t.t01 + t.t11 + t.t22 + t.t33

    slope = (total(delta) - total(0.0)) / delta
    assert slope == pytest.approx(expected, rel=1e-9)


def test_stress_energy_as_matrix_layout():
    t = stress_energy(SpacetimeParams(lam=0.0), 0.5, 1.0, FluidPoint(rho=1.0, p=0.2, v=0.1))
    mat = t.as_matrix()
    assert mat.shape == (4, 4)
    assert mat[0, 1] == mat[1, 0] == t.t01
    assert mat[2, 2] == t.t22 and mat[3, 3] == t.t33
    off = np.ones((4, 4), dtype=bool)
    off[np.diag_indices(4)] = False
    off[0, 1] = off[1, 0] = False
    assert np.all(mat[off] == 0.0)


@pytest.mark.parametrize("rho,p", [(-1.0, 0.0), (1.0, -0.1)])
def test_fluid_point_rejects_negative_density_or_pressure(rho, p):
    with pytest.raises(DomainError):
        FluidPoint(rho=rho, p=p, v=0.0)


def test_divergence_residual_flat_dust_at_rest():
    params = SpacetimeParams(lam=0.0)
    fields = lambda t, r: (1.0, 0.0, 0.0)
    res0, res1 = divergence_residual(params, fields, (0.0, 0.5))
    assert abs(res0) <= 1e-12
    assert abs(res1) <= 1e-12


def test_divergence_residual_vanishes_for_conserved_dust():
    # static geodesic dust flow for lam = -1: u1 = sqrt(1 - r^2) comes from
    # conserved energy sqrt(2), and rho = 1 / (r^2 u1) enforces continuity.
    # Both residual components must converge to zero at second order in h.
    params = SpacetimeParams(lam=-1.0)

    def fields(t, r):
        v = math.sqrt(0.5 * (1.0 - r * r))
        rho = 1.0 / (r * r * math.sqrt(1.0 - r * r))
        return rho, 0.0, v

    errs = []
    for h in (1e-3, 5e-4):
        res0, res1 = divergence_residual(params, fields, (0.0, 0.5), h=h)
        errs.append(max(abs(res0), abs(res1)))
    order = math.log2(errs[0] / errs[1])
    assert errs[1] < errs[0]
    assert order >= 1.9


def test_divergence_residual_constant_density_limits():
    # constant rho violates continuity; the residual converges to the
    # analytic continuity defect u^beta (d/dr + 2/r)(rho u1) / rho
    params = SpacetimeParams(lam=-1.0)

    def fields(t, r):
        v = math.sqrt(1.0 - 0.5 * (1.0 + r * r))
        return 1.0, 0.0, v

    res0, res1 = divergence_residual(params, fields, (0.0, 0.5), h=1e-4)
    assert res1 == pytest.approx(2.5, abs=1e-6)
    assert res0 == pytest.approx(3.2659863237109046, abs=1e-6)


def test_divergence_residual_scales_linearly_with_density():
    params = SpacetimeParams(lam=-1.0)

    def fields(t, r):
        v = math.sqrt(0.5 * (1.0 - r * r))
        return 2.0 + r, 0.0, v

    def scaled(t, r):
        rho, p, v = fields(t, r)
        return 2.0 * rho, p, v

    base = divergence_residual(params, fields, (0.0, 0.5))
    doubled = divergence_residual(params, scaled, (0.0, 0.5))
    assert doubled[0] == pytest.approx(2.0 * base[0], rel=1e-12, abs=1e-15)
    assert doubled[1] == pytest.approx(2.0 * base[1], rel=1e-12, abs=1e-15)


def test_divergence_residual_time_dependence_enters_res():
    # a density growing linearly in time feeds d_0 T^{00} = c^2 rho_t / X
    params = SpacetimeParams(lam=0.0)
    fields = lambda t, r: (1.0 + 0.5 * t, 0.0, 0.0)
    res0, res1 = divergence_residual(params, fields, (0.0, 0.5))
    assert res0 == pytest.approx(0.5, rel=1e-8)
    assert abs(res1) <= 1e-10


def test_divergence_residual_stencil_near_axis():
    params = SpacetimeParams(lam=0.0)
    fields = lambda t, r: (1.0, 0.0, 0.0)
    with pytest.raises(DomainError):
        divergence_residual(params, fields, (0.0, 5e-5), h=1e-4)
