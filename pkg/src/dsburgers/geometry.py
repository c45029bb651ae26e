"""Static de Sitter metric, its inverse, and the Christoffel symbols.

The line element in static coordinates (t, r, theta, phi) is diagonal,

    ds^2 = -(1 - L r^2) dt^2 + dr^2 / (1 - L r^2)
           + r^2 dtheta^2 + r^2 sin^2(theta) dphi^2,

with L the cosmological constant.  L = 0 reduces everything here to flat
space in spherical coordinates.  All operations are pure functions of the
evaluation point and reject points on or beyond the horizon 1 - L r^2 = 0.

Index convention: 0 = t, 1 = r, 2 = theta, 3 = phi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class SpacetimeParams:
    """Background parameters: cosmological constant and light speed.

    Attributes
    ----------
    lam : float
        Cosmological constant.  Positive, negative, and zero are all valid.
    c : float
        Light speed parameter, strictly positive.
    """

    lam: float
    c: float = 1.0

    def __post_init__(self):
        if not math.isfinite(self.lam):
            raise DomainError("cosmological constant must be finite")
        if not (self.c > 0.0) or not math.isfinite(self.c):
            raise DomainError("light speed must be finite and positive")

    def horizon_factor(self, r):
        """1 - lam * r^2, the factor that vanishes on the horizon."""
        return 1.0 - self.lam * r * r


@dataclass(frozen=True)
class MetricDiagonal:
    """Diagonal metric components at a point, covariant and contravariant.

    ``cov[i] * con[i] == 1`` for each index, up to one rounding.
    """

    cov: np.ndarray
    con: np.ndarray


@dataclass(frozen=True)
class ChristoffelTable:
    """Connection coefficients gamma[mu, alpha, beta] at a point."""

    gamma: np.ndarray


def _require_point(params: SpacetimeParams, r: float, theta: float) -> None:
    if not (r > 0.0):
        raise DomainError(f"require r > 0, got r={r}")
    if not (0.0 < theta < math.pi):
        raise DomainError(f"require 0 < theta < pi, got theta={theta}")
    if params.horizon_factor(r) <= 0.0:
        raise DomainError(f"point r={r} is on or beyond the horizon 1 - lam*r^2 = 0")


def metric_components(params: SpacetimeParams, r: float, theta: float) -> MetricDiagonal:
    """Covariant and contravariant metric components at (r, theta).

    Covariant diagonal:

        g_00 = -(1 - L r^2),   g_11 = 1 / (1 - L r^2),
        g_22 = r^2,            g_33 = r^2 sin^2(theta).

    The contravariant entries are the elementwise reciprocals, e.g.
    g^00 = 1 / (L r^2 - 1).  Requires r > 0 and 0 < theta < pi so the
    angular reciprocals exist, and a point strictly inside the horizon.
    """
    _require_point(params, r, theta)
    x = params.horizon_factor(r)
    s = math.sin(theta)
    cov = np.array([-x, 1.0 / x, r * r, r * r * s * s])
    con = 1.0 / cov
    return MetricDiagonal(cov=cov, con=con)


def christoffel_closed(params: SpacetimeParams, r: float, theta: float) -> ChristoffelTable:
    """Closed-form Christoffel symbols of the static de Sitter metric.

    The thirteen nonzero entries (counting symmetric duplicates) are

        gamma^0_01 = gamma^0_10 = L r / (L r^2 - 1)
        gamma^1_00 = L r (L r^2 - 1)
        gamma^1_11 = L r / (1 - L r^2)
        gamma^1_22 = r (L r^2 - 1)
        gamma^1_33 = r (L r^2 - 1) sin^2(theta)
        gamma^2_12 = gamma^2_21 = gamma^3_13 = gamma^3_31 = 1 / r
        gamma^2_33 = -sin(theta) cos(theta)
        gamma^3_23 = gamma^3_32 = cot(theta)

    and every other entry is exactly zero.
    """
    _require_point(params, r, theta)
    lam = params.lam
    x = params.horizon_factor(r)
    s, cs = math.sin(theta), math.cos(theta)
    g = np.zeros((4, 4, 4))
    g[0, 0, 1] = g[0, 1, 0] = lam * r / (lam * r * r - 1.0)
    g[1, 0, 0] = lam * r * (lam * r * r - 1.0)
    g[1, 1, 1] = lam * r / x
    g[1, 2, 2] = r * (lam * r * r - 1.0)
    g[1, 3, 3] = r * (lam * r * r - 1.0) * s * s
    g[2, 1, 2] = g[2, 2, 1] = 1.0 / r
    g[3, 1, 3] = g[3, 3, 1] = 1.0 / r
    g[2, 3, 3] = -s * cs
    g[3, 2, 3] = g[3, 3, 2] = cs / s
    return ChristoffelTable(gamma=g)


def christoffel_numeric(
    params: SpacetimeParams, r: float, theta: float, h: float = 1e-5
) -> ChristoffelTable:
    """Christoffel symbols from central differences of the metric.

    Evaluates the general formula

        gamma^mu_ab = 1/2 g^{mu nu} (d_a g_{nu b} + d_b g_{a nu} - d_nu g_{ab})

    with the metric derivatives taken numerically in r and theta only; the
    metric is static and axisymmetric, so t and phi derivatives vanish
    identically.  Serves as an independent check on ``christoffel_closed``.

    Raises a domain error if any stencil point (r +- h, theta +- h) leaves
    the admissible region.
    """
    if not (h > 0.0):
        raise DomainError("finite-difference step h must be positive")
    for rr, tt in ((r, theta), (r - h, theta), (r + h, theta), (r, theta - h), (r, theta + h)):
        _require_point(params, rr, tt)

    center = metric_components(params, r, theta)
    # dg[c, i, j] = d g_{ij} / d x^c; only c = 1 (r) and c = 2 (theta) survive.
    dg = np.zeros((4, 4, 4))
    dg[1] = np.diag(
        (metric_components(params, r + h, theta).cov - metric_components(params, r - h, theta).cov)
        / (2.0 * h)
    )
    dg[2] = np.diag(
        (metric_components(params, r, theta + h).cov - metric_components(params, r, theta - h).cov)
        / (2.0 * h)
    )

    term1 = np.transpose(dg, (1, 0, 2))  # [nu, a, b] = d_a g_{nu b}
    term2 = np.transpose(dg, (2, 1, 0))  # [nu, a, b] = d_b g_{a nu}
    term3 = dg                           # [nu, a, b] = d_nu g_{ab}
    gamma = 0.5 * np.einsum("mn,nab->mab", np.diag(center.con), term1 + term2 - term3)
    return ChristoffelTable(gamma=gamma)
