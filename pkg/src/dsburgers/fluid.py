"""Perfect-fluid kinematics and dynamics on the de Sitter background.

A radially moving fluid element is described by (rho, p, v): rest-mass
density, pressure, and the coordinate velocity v built from the four-velocity
via v = c u^1 / ((1 - L r^2) u^0).  The stress-energy tensor is the perfect
fluid T^{ab} = (rho c^2 + p) u^a u^b + p g^{ab}, and the Euler equations are
the vanishing of its covariant divergence,

    d_a T^{ab} + gamma^a_{a c} T^{cb} + gamma^b_{a c} T^{ac} = 0.

``divergence_residual`` evaluates the b = 0, 1 components of that expression
numerically so closed-form fields can be checked against it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError
from .geometry import SpacetimeParams, christoffel_closed

FieldSampler = Callable[[float, float], tuple[float, float, float]]


@dataclass(frozen=True)
class FluidPoint:
    """Primitive fluid state (rho, p, v) at one spacetime point."""

    rho: float
    p: float
    v: float

    def __post_init__(self):
        if not (self.rho >= 0.0):
            raise DomainError(f"density must be nonnegative, got {self.rho}")
        if not (self.p >= 0.0):
            raise DomainError(f"pressure must be nonnegative, got {self.p}")
        if not math.isfinite(self.v):
            raise DomainError("velocity must be finite")


@dataclass(frozen=True)
class FourVelocity:
    """Nonzero four-velocity components (u^0, u^1) of radial motion."""

    u0: float
    u1: float


@dataclass(frozen=True)
class StressEnergy:
    """Nonzero contravariant stress-energy components of a radial flow."""

    t00: float
    t01: float
    t11: float
    t22: float
    t33: float

    def as_matrix(self) -> np.ndarray:
        t = np.zeros((4, 4))
        t[0, 0] = self.t00
        t[0, 1] = t[1, 0] = self.t01
        t[1, 1] = self.t11
        t[2, 2] = self.t22
        t[3, 3] = self.t33
        return t


def _require_subluminal(params: SpacetimeParams, v: float) -> None:
    if not (abs(v) < params.c):
        raise DomainError(f"require |v| < c, got v={v} with c={params.c}")


def four_velocity(params: SpacetimeParams, r: float, v: float) -> FourVelocity:
    """Four-velocity of a radial flow with coordinate velocity v.

    Solves the normalization g_ab u^a u^b = -1 together with the velocity
    definition v = c u^1 / ((1 - L r^2) u^0):

        (u^0)^2 = c^2 / ((1 - L r^2)(c^2 - v^2)),
        (u^1)^2 = v^2 (1 - L r^2) / (c^2 - v^2),

    taking u^0 > 0 and sign(u^1) = sign(v).  Requires |v| < c and a point
    strictly inside the horizon.
    """
    _require_subluminal(params, v)
    x = params.horizon_factor(r)
    if x <= 0.0:
        raise DomainError(f"point r={r} is on or beyond the horizon")
    c = params.c
    y = c * c - v * v
    u0 = c / math.sqrt(x * y)
    u1 = v * math.sqrt(x) / math.sqrt(y)
    return FourVelocity(u0=u0, u1=u1)


def stress_energy(
    params: SpacetimeParams, r: float, theta: float, fp: FluidPoint
) -> StressEnergy:
    """Contravariant perfect-fluid stress-energy components.

        T^00 = (rho c^4 + p v^2) / ((c^2 - v^2)(1 - L r^2))
        T^01 = c v (rho c^2 + p) / (c^2 - v^2)
        T^11 = c^2 (1 - L r^2)(v^2 rho + p) / (c^2 - v^2)
        T^22 = p / r^2
        T^33 = p / (r^2 sin^2 theta)

    All other components vanish for radial flow.  Requires |v| < c, r > 0,
    sin(theta) != 0, and a point strictly inside the horizon.
    """
    _require_subluminal(params, fp.v)
    if not (r > 0.0):
        raise DomainError(f"require r > 0, got r={r}")
    s = math.sin(theta)
    if s == 0.0:
        raise DomainError("stress-energy angular components need sin(theta) != 0")
    x = params.horizon_factor(r)
    if x <= 0.0:
        raise DomainError(f"point r={r} is on or beyond the horizon")
    c, v, rho, p = params.c, fp.v, fp.rho, fp.p
    c2 = c * c
    y = c2 - v * v
    t00 = (rho * c2 * c2 + p * v * v) / (y * x)
    t01 = c * v * (rho * c2 + p) / y
    t11 = c2 * x * (v * v * rho + p) / y
    t22 = p / (r * r)
    t33 = p / (r * r * s * s)
    return StressEnergy(t00=t00, t01=t01, t11=t11, t22=t22, t33=t33)


def divergence_residual(
    params: SpacetimeParams,
    fields: FieldSampler,
    point: tuple[float, float],
    h: float = 1e-4,
) -> tuple[float, float]:
    """Residuals of the b = 0, 1 Euler equations at a point.

    Parameters
    ----------
    fields : callable
        Sampler (t, r) -> (rho, p, v) defining the fluid field near the point.
    point : (t, r)
        Evaluation point; the polar angle is fixed at theta = pi/2, where
        radial symmetry makes the angular derivative terms vanish.
    h : float
        Central-difference step used for the t and r derivatives of T^{ab}.
        The time coordinate is x^0 = c t, so d_0 = (1/c) d_t.

    Returns the pair (res0, res1).  Both vanish (to truncation order h^2)
    exactly when the sampled field solves the Euler equations.
    """
    if not (h > 0.0):
        raise DomainError("finite-difference step h must be positive")
    t, r = point
    theta = 0.5 * math.pi

    def tmat(tt: float, rr: float) -> np.ndarray:
        rho, p, v = fields(tt, rr)
        return stress_energy(params, rr, theta, FluidPoint(rho, p, v)).as_matrix()

    c = params.c
    t_c = tmat(t, r)
    dt0 = (tmat(t + h, r) - tmat(t - h, r)) / (2.0 * h * c)
    dt1 = (tmat(t, r + h) - tmat(t, r - h)) / (2.0 * h)

    gam = christoffel_closed(params, r, theta).gamma
    # d_a T^{ab} for a = 0, 1; the a = 2, 3 derivatives of T^{2b}, T^{3b}
    # vanish for b = 0, 1 because those components are identically zero.
    div = dt0[0, :] + dt1[1, :]
    div += np.einsum("aag,gb->b", gam, t_c)
    div += np.einsum("bag,ag->b", gam, t_c)
    return float(div[0]), float(div[1])
