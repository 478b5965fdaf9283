"""Small-separation Taylor machinery for the Smith equation.

For small delta the coupling sums expand as

    eta(delta)  ~ P  + delta*Q      P  = Re{h*v(phi)}   Q  = -Im{h*r(phi)}
    zeta(delta) ~ P' + delta*Q'     P' = Re{h*u(phi)}   Q' = -Im{h*v(phi)}

with u, v, r the phi-only sums over l^2, l^3, l^4.  Substituting into the
closed-form CRBs turns the Smith equation CRB(delta) = delta^2 into

    delta^2 = Q'(delta) / Q(delta)

with the quadratics

    Q(delta)  = (beta*a2 - alpha1^2)*delta^2 + (beta*a1 - 2*alpha0*alpha1)*delta
                + beta*a0 - alpha0^2
    Q'(delta) = c2*delta^2 + c1*delta + c0

i.e. a monic quartic R(x) = x^4 + g3 x^3 + g2 x^2 + g1 x + g0 after dividing
Q(x) x^2 - Q'(x) by beta*a2 - alpha1^2.  This module builds every coefficient;
`solver` finds and classifies the roots.

Sign convention: the expansions carry +delta*Q and +delta*Q' (with Q, Q'
defined through -Im as above); this is the convention under which
a1 = -2PQ/(L4||s2||^2) and the rest of the coefficient list are mutually
consistent, verified against the exact CRBs by the small-separation tests.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .array_model import Scenario, index_moments
from .errors import DegenerateQuarticError


@dataclass(frozen=True)
class PhiSums:
    """Curvature-only spectral sums u, v, r (moments l^2, l^3, l^4)."""

    u: complex
    v: complex
    r: complex


@dataclass(frozen=True)
class LinearCoeffs:
    """Every linearization constant for one scenario at one noise power.

    P, Q, Pp, Qp are the linear-form constants; (a2, a1, a0) the quadratic
    expansion of L2||s1||^2 - eta^2/(L4||s2||^2); (alpha1, alpha0) the linear
    expansion of zeta - eta*L3/L4; c2, c1, c0 the noise-scaled numerator
    coefficients; g0..g3 the monic quartic coefficients.  ``sigma2`` records
    the noise power baked into the c and g values.
    """

    P: float
    Q: float
    Pp: float
    Qp: float
    a0: float
    a1: float
    a2: float
    alpha0: float
    alpha1: float
    beta: float
    c0: float
    c1: float
    c2: float
    g0: float
    g1: float
    g2: float
    g3: float
    sigma2: float

    @property
    def quartic_lead(self) -> float:
        """Leading coefficient beta*a2 - alpha1^2 of Q(x)*x^2 - Q'(x); <= 0 always."""
        return self.beta * self.a2 - self.alpha1**2

    @property
    def reduced_mid(self) -> float:
        """Middle coefficient beta*a0 - alpha0^2 - c2 of the reduced quadratic in z = delta^2."""
        return self.beta * self.a0 - self.alpha0**2 - self.c2

    def reduced_quadratic(self) -> tuple[float, float, float]:
        """Coefficients (A, B, C) of R'(z) = A*z^2 + B*z + C with C = -c0."""
        return self.quartic_lead, self.reduced_mid, -self.c0

    def quartic(self) -> tuple[float, float, float, float]:
        """Monic quartic coefficients (g0, g1, g2, g3)."""
        return self.g0, self.g1, self.g2, self.g3


def phi_sums(phi: float, num_sensors: int) -> PhiSums:
    """u(phi), v(phi), r(phi): sums of l^2, l^3, l^4 times exp(i*phi*l^2)."""
    l = np.arange(num_sensors, dtype=float)
    e = np.exp(1j * phi * l * l)
    return PhiSums(u=complex(np.sum(l**2 * e)),
                   v=complex(np.sum(l**3 * e)),
                   r=complex(np.sum(l**4 * e)))


def linear_coeffs(scenario: Scenario) -> LinearCoeffs:
    """All Taylor coefficients for a scenario; raises ``DegenerateQuarticError``
    when beta*a2 - alpha1^2 vanishes (real h with phi = 0 collapses there)."""
    geom = scenario.geometry
    sig = scenario.signals
    e1, e2 = sig.energy1, sig.energy2
    if e2 <= 0.0:
        raise DegenerateQuarticError("curved-wavefront source has zero energy")
    _, l2, l3, l4 = index_moments(geom.num_sensors, 4)
    sums = phi_sums(scenario.electrical.phi, geom.num_sensors)
    h = sig.cross

    p = (h * sums.v).real
    q = -(h * sums.r).imag
    pp = (h * sums.u).real
    qp = -(h * sums.v).imag

    a2 = -(q * q) / (l4 * e2)
    a1 = -2.0 * p * q / (l4 * e2)
    a0 = l2 * e1 - p * p / (l4 * e2)
    alpha1 = qp - (l3 / l4) * q
    alpha0 = pp - (l3 / l4) * p
    beta = e2 * (l2 - l3**2 / l4)

    lead = beta * a2 - alpha1**2
    if abs(lead) < 1e-14 * max(abs(beta * a2), alpha1**2, 1.0):
        raise DegenerateQuarticError(
            f"beta*a2 - alpha1^2 = {lead:.3e} is degenerate; "
            "the quartic reduction does not apply")

    half_s2 = 0.5 * scenario.sigma2
    c2 = half_s2 * a2
    c1 = half_s2 * (a1 + 2.0 * alpha1)
    c0 = half_s2 * (beta + a0 + 2.0 * alpha0)

    return LinearCoeffs(
        P=float(p), Q=float(q), Pp=float(pp), Qp=float(qp),
        a0=float(a0), a1=float(a1), a2=float(a2),
        alpha0=float(alpha0), alpha1=float(alpha1), beta=float(beta),
        c0=float(c0), c1=float(c1), c2=float(c2),
        g0=float(-c0 / lead), g1=float(-c1 / lead),
        g2=float((beta * a0 - alpha0**2 - c2) / lead),
        g3=float((beta * a1 - 2.0 * alpha0 * alpha1) / lead),
        sigma2=float(scenario.sigma2),
    )


def scale_noise(coeffs: LinearCoeffs, factor: float) -> LinearCoeffs:
    """Coefficients for the same scenario at noise power sigma2 * factor.

    Only the c and g values depend on sigma2; everything else carries over.
    """
    if factor < 0:
        raise ValueError("noise scale factor must be nonnegative")
    c0, c1, c2 = factor * coeffs.c0, factor * coeffs.c1, factor * coeffs.c2
    lead = coeffs.quartic_lead
    return replace(
        coeffs,
        c0=c0, c1=c1, c2=c2,
        g0=-c0 / lead, g1=-c1 / lead,
        g2=(coeffs.beta * coeffs.a0 - coeffs.alpha0**2 - c2) / lead,
        g3=coeffs.g3,
        sigma2=factor * coeffs.sigma2,
    )


def p1_poly(coeffs: LinearCoeffs, delta: float) -> float:
    """P1(delta) = alpha1*delta + alpha0, the linearized zeta - eta*L3/L4."""
    return coeffs.alpha1 * delta + coeffs.alpha0


def p2_poly(coeffs: LinearCoeffs, delta: float) -> float:
    """P2(delta) = a2*delta^2 + a1*delta + a0, the linearized L2||s1||^2 - eta^2/(L4||s2||^2)."""
    return (coeffs.a2 * delta + coeffs.a1) * delta + coeffs.a0


def q_poly(coeffs: LinearCoeffs, delta: float) -> float:
    """Denominator quadratic Q(delta) = P2(delta)*beta - P1(delta)^2, expanded form."""
    return ((coeffs.quartic_lead * delta
             + (coeffs.beta * coeffs.a1 - 2.0 * coeffs.alpha0 * coeffs.alpha1)) * delta
            + coeffs.beta * coeffs.a0 - coeffs.alpha0**2)


def qprime_poly(coeffs: LinearCoeffs, delta: float) -> float:
    """Numerator quadratic Q'(delta) = c2*delta^2 + c1*delta + c0."""
    return (coeffs.c2 * delta + coeffs.c1) * delta + coeffs.c0


def crb_linearized(coeffs: LinearCoeffs, delta: float) -> tuple[float, float, float]:
    """Linearized (CRB(w1), CRB(w2), CRB(w1,w2)) at a trial separation."""
    half_s2 = 0.5 * coeffs.sigma2
    q = q_poly(coeffs, delta)
    return (half_s2 * coeffs.beta / q,
            half_s2 * p2_poly(coeffs, delta) / q,
            -half_s2 * p1_poly(coeffs, delta) / q)


def crb_delta_linearized(coeffs: LinearCoeffs, delta: float) -> float:
    """Linearized separation bound Q'(delta)/Q(delta)."""
    return qprime_poly(coeffs, delta) / q_poly(coeffs, delta)
