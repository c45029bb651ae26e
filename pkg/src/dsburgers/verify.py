"""Built-in verification suite behind the ``verify`` CLI command.

Each check exercises one closed-form layer against an independent witness:
the metric against its inverse, the Christoffel table against central
differences of the metric, the four-velocity against its normalization, the
steady family against the steady balance, and the classical Riemann solution
against hand values.  All checks are deterministic (fixed seeds).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fluid import four_velocity
from .geometry import SpacetimeParams, christoffel_closed, christoffel_numeric, metric_components
from .model import BurgersModel, StaticSolution, classical_riemann_exact

#: Index triples (mu, alpha, beta) that may be nonzero, per the closed table.
NONZERO_CHRISTOFFEL = (
    (0, 0, 1), (0, 1, 0),
    (1, 0, 0), (1, 1, 1), (1, 2, 2), (1, 3, 3),
    (2, 1, 2), (2, 2, 1), (2, 3, 3),
    (3, 1, 3), (3, 3, 1), (3, 2, 3), (3, 3, 2),
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    max_error: float
    tolerance: float


def _sample_points(rng: np.random.Generator, n: int):
    """Well-conditioned admissible (lam, r, theta) triples.

    Points keep 1 - lam r^2 >= 0.3 and stay away from the axis so the
    finite-difference witness is accurate at its default step.
    """
    pts = []
    for _ in range(n):
        lam = rng.uniform(-1.0, 1.0)
        r_hi = min(1.5, math.sqrt(0.7 / lam)) if lam > 0 else 1.5
        r = rng.uniform(0.1, r_hi)
        theta = rng.uniform(0.4, math.pi - 0.4)
        pts.append((lam, r, theta))
    return pts


def check_metric_inverse(tolerance: float = 1e-14) -> CheckResult:
    rng = np.random.default_rng(101)
    worst = 0.0
    for lam in (-1.0, -0.5, 0.0, 0.5, 1.0):
        params = SpacetimeParams(lam=lam)
        for _ in range(50):
            r_hi = 0.95 / math.sqrt(lam) if lam > 0 else 2.0
            r = rng.uniform(0.05, r_hi)
            theta = rng.uniform(0.1, math.pi - 0.1)
            m = metric_components(params, r, theta)
            worst = max(worst, float(np.max(np.abs(m.cov * m.con - 1.0))))
    return CheckResult("metric_inverse", worst <= tolerance, worst, tolerance)


def check_christoffel_oracle(tolerance: float = 1e-6, h: float = 1e-5) -> CheckResult:
    rng = np.random.default_rng(202)
    worst = 0.0
    zero_mask = np.ones((4, 4, 4), dtype=bool)
    for idx in NONZERO_CHRISTOFFEL:
        zero_mask[idx] = False
    for lam, r, theta in _sample_points(rng, 100):
        params = SpacetimeParams(lam=lam)
        closed = christoffel_closed(params, r, theta).gamma
        numeric = christoffel_numeric(params, r, theta, h=h).gamma
        worst = max(worst, float(np.max(np.abs(closed - numeric))))
        # Entries outside the closed table must be exactly zero.
        worst = max(worst, float(np.max(np.abs(closed[zero_mask]))))
    return CheckResult("christoffel_vs_finite_difference", worst <= tolerance, worst, tolerance)


def check_normalization(tolerance: float = 1e-12) -> CheckResult:
    params = SpacetimeParams(lam=1.0)
    worst = 0.0
    for v in np.linspace(-0.99, 0.99, 50):
        for r in np.linspace(0.01, 0.95, 50):
            u = four_velocity(params, r, v)
            m = metric_components(params, r, 0.5 * math.pi)
            norm = m.cov[0] * u.u0 * u.u0 + m.cov[1] * u.u1 * u.u1
            worst = max(worst, abs(float(norm) + 1.0))
    return CheckResult("four_velocity_normalization", worst <= tolerance, worst, tolerance)


def check_static_residual(tolerance: float = 1e-12) -> CheckResult:
    worst = 0.0
    for lam in (-1.0, 1.0):
        model = BurgersModel(SpacetimeParams(lam=lam), r_min=0.0, r_max=1.0)
        for k in (0.1, 0.3, 0.5, 0.9):
            if lam < 0:
                r_hi = 0.98 * math.sqrt((1.0 - k) / k)
            else:
                r_hi = 0.98
            r = np.linspace(0.01, r_hi, 50)
            res = model.static_residual(StaticSolution(k=k), r)
            worst = max(worst, float(np.max(np.abs(res))))
    return CheckResult("static_residual", worst <= tolerance, worst, tolerance)


def check_riemann_oracle(tolerance: float = 1e-15) -> CheckResult:
    cases = [
        # (v_left, v_right, xi, expected)
        (1.0, 0.0, 0.25, 1.0),
        (1.0, 0.0, 0.75, 0.0),
        (0.6, 0.2, 0.39, 0.6),
        (0.6, 0.2, 0.41, 0.2),
        (0.2, 0.6, 0.1, 0.2),
        (0.2, 0.6, 0.35, 0.35),
        (0.2, 0.6, 0.9, 0.6),
        (0.5, 0.5, -3.0, 0.5),
    ]
    worst = 0.0
    for vl, vr, xi, expected in cases:
        worst = max(worst, abs(classical_riemann_exact(vl, vr, xi) - expected))
    return CheckResult("riemann_oracle", worst <= tolerance, worst, tolerance)


def run_checks() -> list[CheckResult]:
    """Run the full verification suite."""
    return [
        check_metric_inverse(),
        check_christoffel_oracle(),
        check_normalization(),
        check_static_residual(),
        check_riemann_oracle(),
    ]
