"""Scalar transport model: fluxes, sources, static solutions, Riemann states."""

from __future__ import annotations

import math

import numpy as np
import pytest

from dsburgers import (
    BurgersModel,
    DomainError,
    SpacetimeParams,
    StaticSolution,
    classical_riemann_exact,
)


def make_model(lam, r_min=0.0, r_max=1.0, c=1.0):
    return BurgersModel(SpacetimeParams(lam=lam, c=c), r_min=r_min, r_max=r_max)


def test_flux_coefficient_values():
    assert make_model(1.0).flux_coefficient(0.5) == pytest.approx(0.75, abs=1e-15)
    assert make_model(-1.0).flux_coefficient(0.5) == pytest.approx(1.25, abs=1e-15)
    assert make_model(0.0).flux_coefficient(0.123) == 1.0


def test_conservative_flux_value():
    assert make_model(1.0).conservative_flux(0.5, 0.5) == pytest.approx(0.09375, abs=1e-16)


def test_conservative_flux_flat_is_classical():
    model = make_model(0.0)
    v = np.linspace(-1.0, 1.0, 41)
    np.testing.assert_array_equal(model.conservative_flux(v, 0.3), v * v * 0.5)


def test_source_conservative_value():
    assert make_model(1.0).source(0.5, 0.5, "conservative") == pytest.approx(0.25, abs=1e-15)


def test_source_nonconservative_value():
    got = make_model(1.0).source(0.5, 0.5, "nonconservative")
    assert got == pytest.approx(0.375, abs=1e-15)


def test_source_paper_literal_matches_nonconservative_form():
    model = make_model(-0.8)
    v, r = 0.4, 0.6
    assert model.source(v, r, "paper_literal") == model.source(v, r, "nonconservative")


def test_source_flat_vanishes():
    model = make_model(0.0)
    for form in ("conservative", "nonconservative", "paper_literal"):
        assert model.source(0.7, 0.4, form) == 0.0


def test_source_rejects_unknown_form():
    with pytest.raises(ValueError):
        make_model(1.0).source(0.5, 0.5, "upwind")


def test_characteristic_speed_value():
    assert make_model(1.0).characteristic_speed(0.8, 0.5) == pytest.approx(0.6, abs=1e-15)


def test_characteristic_speed_flat_identity():
    model = make_model(0.0)
    v = np.linspace(-0.9, 0.9, 19)
    np.testing.assert_array_equal(model.characteristic_speed(v, 0.77), v)


def test_flux_source_chain_rule_identity():
    # d/dr [b v^2 / 2] = b d/dr [v^2 / 2] - lam r v^2 for any profile v(r);
    # this ties the conservative and nonconservative source forms together
    rng = np.random.default_rng(5)
    model = make_model(-0.6)
    h = 1e-5
    for _ in range(20):
        coef = rng.uniform(-0.5, 0.5, size=4)
        v = lambda r: coef[0] + coef[1] * r + coef[2] * r * r + coef[3] * r**3
        r = rng.uniform(0.1, 0.9)
        lhs = (
            model.conservative_flux(v(r + h), r + h)
            - model.conservative_flux(v(r - h), r - h)
        ) / (2 * h)
        d_half_v2 = (v(r + h) ** 2 - v(r - h) ** 2) / (4 * h)
        rhs = model.flux_coefficient(r) * d_half_v2 - (-0.6) * r * v(r) ** 2
        assert lhs == pytest.approx(rhs, abs=1e-8)


def test_static_solution_values():
    flat = make_model(0.0).static_solution(StaticSolution(k=0.9), 0.5)
    assert flat == pytest.approx(math.sqrt(0.1), rel=1e-15)
    open_lam = make_model(-1.0).static_solution(StaticSolution(k=0.5), 0.5)
    assert open_lam == pytest.approx(math.sqrt(0.375), rel=1e-15)
    neg = make_model(-1.0).static_solution(StaticSolution(k=0.5, sign=-1), 0.5)
    assert neg == pytest.approx(-math.sqrt(0.375), rel=1e-15)


def test_static_solution_vectorized():
    model = make_model(1.0)
    r = np.linspace(0.0, 0.9, 10)
    v = model.static_solution(StaticSolution(k=0.5), r)
    np.testing.assert_allclose(v, np.sqrt(1.0 - 0.5 * (1.0 - r * r)), rtol=1e-15)


def test_static_solution_radicand_guard():
    model = make_model(-1.0)
    with pytest.raises(DomainError):
        model.static_solution(StaticSolution(k=0.9), 0.8)  # 1 - 0.9*1.64 < 0


@pytest.mark.parametrize("k", [0.0, -0.5])
def test_static_solution_rejects_nonpositive_k(k):
    with pytest.raises(DomainError):
        StaticSolution(k=k)


def test_static_solution_rejects_k_above_c_squared():
    with pytest.raises(DomainError):
        make_model(0.0).static_solution(StaticSolution(k=1.5), 0.5)


def test_static_solution_sign_validation():
    with pytest.raises(DomainError):
        StaticSolution(k=0.5, sign=2)


def test_static_residual_vanishes_on_family():
    # every member of the one-parameter static family solves the steady
    # equation identically, independent of k; for lam < 0 the admissible
    # radius range shrinks with k (radicand c^2 - K(1 + r^2) >= 0)
    for lam in (-1.0, 1.0):
        model = make_model(lam)
        for k in (0.1, 0.3, 0.5, 0.9):
            r_hi = 0.95 * math.sqrt((1.0 - k) / k) if lam < 0 else 0.95
            r = np.linspace(0.05, min(r_hi, 0.95), 50)
            res = model.static_residual(StaticSolution(k=k), r)
            assert np.max(np.abs(res)) <= 1e-12


def test_static_residual_detects_wrong_profile():
    # sampling a profile from a different k must leave a nonzero residual
    model = make_model(-1.0)
    sol = StaticSolution(k=0.5)
    wrong_v = model.static_solution(StaticSolution(k=0.3), 0.5)
    res = model.static_residual(sol, 0.5, v_value=wrong_v)
    assert abs(res) > 1e-6
    # and the residual has the predicted closed form lam r X (k - k')
    assert res == pytest.approx(-1.0 * 0.5 * 1.25 * (0.5 - 0.3), rel=1e-12)


def test_model_rejects_domain_beyond_horizon():
    with pytest.raises(DomainError):
        make_model(1.2)  # horizon at r = 1/sqrt(1.2) < 1
    with pytest.raises(DomainError):
        make_model(9.0, r_min=0.0, r_max=0.5)
    # touching the horizon exactly at the outer edge is allowed
    make_model(1.0)


def test_model_rejects_bad_interval():
    with pytest.raises(DomainError):
        make_model(0.0, r_min=0.5, r_max=0.5)
    with pytest.raises(DomainError):
        make_model(0.0, r_min=-0.1, r_max=1.0)


def test_riemann_exact_shock():
    # vL > vR: shock at speed (vL + vR) / 2
    xi = np.array([-1.0, 0.39, 0.41, 2.0])
    got = classical_riemann_exact(0.6, 0.2, xi)
    np.testing.assert_array_equal(got, [0.6, 0.6, 0.2, 0.2])


def test_riemann_exact_shock_boundary_value():
    # exactly on the shock the right state is taken
    assert classical_riemann_exact(0.6, 0.2, 0.4) == 0.2


def test_riemann_exact_rarefaction():
    xi = np.array([0.0, 0.2, 0.35, 0.6, 0.9])
    got = classical_riemann_exact(0.2, 0.6, xi)
    np.testing.assert_allclose(got, [0.2, 0.2, 0.35, 0.6, 0.6], rtol=0, atol=1e-15)


def test_riemann_exact_equal_states():
    xi = np.linspace(-1.0, 1.0, 7)
    np.testing.assert_array_equal(classical_riemann_exact(0.5, 0.5, xi), np.full(7, 0.5))


def test_riemann_exact_scalar_argument():
    assert classical_riemann_exact(0.2, 0.6, 0.35) == pytest.approx(0.35, abs=1e-15)
