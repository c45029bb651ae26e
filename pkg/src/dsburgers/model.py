"""The scalar relativistic Burgers model on the de Sitter background.

Imposing zero pressure on the radial Euler equations and eliminating the
density collapses them to one scalar balance law for the velocity.  In
conservative form,

    d_t v + d_r ((1 - L r^2) v^2 / 2) = L r (c^2 - 2 v^2),

and equivalently, for smooth v, in nonconservative form

    d_t v + (1 - L r^2) d_r (v^2 / 2) + L r (v^2 - c^2) = 0.

L = 0 recovers the classical inviscid Burgers equation.  The steady states
form the one-parameter family

    v_static(r) = +- sqrt(c^2 - K (1 - L r^2)),    K in (0, c^2],

every member of which solves the steady balance exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .geometry import SpacetimeParams

#: Accepted source-term / scheme forms.  ``conservative`` carries the source
#: of the conservative balance law; the other two carry the source of the
#: nonconservative form, which for smooth solutions differs from it by the
#: flux-expansion term L r v^2.
SOURCE_FORMS = ("conservative", "nonconservative", "paper_literal")


@dataclass(frozen=True)
class StaticSolution:
    """Branch of the steady-state family: parameter K and sign selector."""

    k: float
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DomainError(f"sign must be +1 or -1, got {self.sign}")
        if not (self.k > 0.0) or not math.isfinite(self.k):
            raise DomainError(f"K must be finite and positive, got {self.k}")


@dataclass(frozen=True)
class BurgersModel:
    """Scalar model bound to background parameters and a radial domain.

    The domain [r_min, r_max] must not contain horizon points in its
    interior; the horizon may at most touch an endpoint (cell centers of
    any grid over the domain then stay strictly inside).
    """

    params: SpacetimeParams
    r_min: float
    r_max: float

    def __post_init__(self):
        if not (self.r_min >= 0.0):
            raise DomainError(f"require r_min >= 0, got {self.r_min}")
        if not (self.r_max > self.r_min):
            raise DomainError("require r_max > r_min")
        edge = max(self.r_min * self.r_min, self.r_max * self.r_max)
        if self.params.lam * edge > 1.0:
            raise DomainError(
                "horizon 1 - lam*r^2 = 0 intersects the interior of "
                f"[{self.r_min}, {self.r_max}] for lam={self.params.lam}"
            )

    def flux_coefficient(self, r):
        """b(r) = 1 - L r^2, the coefficient multiplying the flux."""
        return 1.0 - self.params.lam * r * r

    def conservative_flux(self, v, r):
        """F(v, r) = (1 - L r^2) v^2 / 2.  Reduces to v^2/2 when L = 0."""
        return self.flux_coefficient(r) * (v * v * 0.5)

    def source(self, v, r, form: str):
        """Right-hand side source term for the requested form.

        ``conservative``: L r (c^2 - 2 v^2), the source paired with the
        conservative flux.  ``nonconservative`` and ``paper_literal``:
        L r (c^2 - v^2), the source of the nonconservative form.
        """
        lam, c = self.params.lam, self.params.c
        if form == "conservative":
            return lam * r * (c * c - 2.0 * v * v)
        if form in ("nonconservative", "paper_literal"):
            return lam * r * (c * c - v * v)
        raise DomainError(f"unknown source form {form!r}; expected one of {SOURCE_FORMS}")

    def characteristic_speed(self, v, r):
        """dF/dv = (1 - L r^2) v, the local signal speed."""
        return self.flux_coefficient(r) * v

    def static_solution(self, sol: StaticSolution, r):
        """Evaluate the steady state sol at radius r (scalar or array).

        v = sign * sqrt(c^2 - K (1 - L r^2)).  Requires K <= c^2 and a
        nonnegative radicand at every requested radius.
        """
        c = self.params.c
        if sol.k > c * c:
            raise DomainError(f"K={sol.k} exceeds c^2={c * c}")
        radicand = c * c - sol.k * self.flux_coefficient(r)
        if np.any(np.asarray(radicand) < 0.0):
            raise DomainError(
                f"static radicand c^2 - K(1 - lam*r^2) negative for K={sol.k}"
            )
        return sol.sign * np.sqrt(radicand)

    def static_residual(self, sol: StaticSolution, r, v_value=None):
        """Steady-balance residual d_r((1-L r^2) v^2/2) - L r (c^2 - 2 v^2).

        The derivative is evaluated in closed form for the family member
        sol, d_r((1-L r^2) v_static^2 / 2) = K L r (1-L r^2) - L r v_static^2,
        so with the consistently sampled velocity the residual is zero up to
        round-off for every K.  Passing ``v_value`` replaces the sampled
        velocity while keeping the derivative's K, which makes the residual
        respond to inconsistent inputs (a sensitivity handle for tests).
        """
        lam, c = self.params.lam, self.params.c
        x = self.flux_coefficient(r)
        if v_value is None:
            if sol.k > c * c:
                raise DomainError(f"K={sol.k} exceeds c^2={c * c}")
            v2 = c * c - sol.k * x
            if np.any(np.asarray(v2) < 0.0):
                raise DomainError(f"static radicand negative for K={sol.k}")
        else:
            v2 = np.square(v_value)
        lhs = sol.k * lam * r * x - lam * r * v2
        rhs = lam * r * (c * c - 2.0 * v2)
        return lhs - rhs


def classical_riemann_exact(v_left: float, v_right: float, xi):
    """Entropy solution of the classical Riemann problem in xi = (r - r0)/t.

    For Burgers' equation with flux v^2/2: a shock travelling at
    (v_left + v_right)/2 when v_left > v_right, otherwise a rarefaction fan
    v = xi between the two states.  ``xi`` may be a scalar or an array.
    """
    for name, val in (("v_left", v_left), ("v_right", v_right)):
        if not math.isfinite(val):
            raise DomainError(f"{name} must be finite")
    xi = np.asarray(xi, dtype=float)
    if v_left > v_right:
        s = 0.5 * (v_left + v_right)
        out = np.where(xi < s, v_left, v_right)
    else:
        out = np.clip(xi, v_left, v_right)
    if out.ndim == 0:
        return float(out)
    return out
