"""Closed-form Cramer-Rao bounds for the two-source mixed-wavefront model.

With L_r = sum l^r, energies E_m = ||s_m||^2, h = s1^H s2 and the spectral
sums

    zeta(delta) = Re{ h * sum_l l^2 * exp(i*(delta*l + phi*l^2)) }
    eta(delta)  = Re{ h * sum_l l^3 * exp(i*(delta*l + phi*l^2)) }

the bounds on the two spatial frequencies and their coupling are

    CRB(w1)     = (sigma^2/2) * beta / Q
    CRB(w2)     = (sigma^2/2) * (L2*E1 - eta^2/(L4*E2)) / Q
    CRB(w1,w2)  = -(sigma^2/2) * (zeta - eta*L3/L4) / Q

where beta = E2*(L2 - L3^2/L4) and
Q = beta*(L2*E1 - eta^2/(L4*E2)) - (zeta - eta*L3/L4)^2.

These expressions are algebraically identical to the corresponding entries of
the inverse Fisher matrix; the `fim` module provides the numeric inverse used
to cross-check them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .array_model import Scenario, index_moments
from .errors import DegenerateQError


@dataclass(frozen=True)
class SpectralSums:
    """Index-moment sums and source-coupling sums for one scenario."""

    l1: float
    l2: float
    l3: float
    l4: float
    zeta: float
    eta: float
    h: complex


@dataclass(frozen=True)
class CrbSet:
    """Closed-form bounds: the two frequency variances, their covariance, and the separation bound."""

    crb_omega1: float
    crb_omega2: float
    crb_cross: float

    @property
    def crb_delta(self) -> float:
        """Bound on the separation: CRB(w1) + CRB(w2) - 2*CRB(w1, w2)."""
        return self.crb_omega1 + self.crb_omega2 - 2.0 * self.crb_cross


def spectral_sums(scenario: Scenario) -> SpectralSums:
    """Evaluate L_1..L_4, zeta(delta) and eta(delta) for a scenario."""
    num = scenario.geometry.num_sensors
    l1, l2, l3, l4 = index_moments(num, 4)
    el = scenario.electrical
    l = np.arange(num, dtype=float)
    phase = np.exp(1j * (el.delta * l + el.phi * l * l))
    h = scenario.signals.cross
    zeta = float((h * np.sum(l**2 * phase)).real)
    eta = float((h * np.sum(l**3 * phase)).real)
    return SpectralSums(l1=l1, l2=l2, l3=l3, l4=l4, zeta=zeta, eta=eta, h=h)


def beta_factor(scenario: Scenario) -> float:
    """beta = ||s2||^2 * (L2 - L3^2/L4); positive for every L >= 2 by Cauchy-Schwarz."""
    _, l2, l3, l4 = index_moments(scenario.geometry.num_sensors, 4)
    return scenario.signals.energy2 * (l2 - l3**2 / l4)


def _q_denominator(scenario: Scenario, sums: SpectralSums) -> tuple[float, float, float]:
    """Return (Q, L2*E1 - eta^2/(L4*E2), zeta - eta*L3/L4)."""
    e1 = scenario.signals.energy1
    e2 = scenario.signals.energy2
    if e2 <= 0.0:
        raise DegenerateQError("curved-wavefront source has zero energy")
    beta = e2 * (sums.l2 - sums.l3**2 / sums.l4)
    q_diag = sums.l2 * e1 - sums.eta**2 / (sums.l4 * e2)
    p_off = sums.zeta - sums.eta * sums.l3 / sums.l4
    q = beta * q_diag - p_off * p_off
    scale = max(abs(beta * q_diag), p_off * p_off, 1.0)
    if abs(q) < 1e-300 * scale:
        raise DegenerateQError(f"degenerate Q = {q:.3e} (scale {scale:.3e})")
    return q, q_diag, p_off


def crb_closed_form(scenario: Scenario) -> CrbSet:
    """Closed-form CRB(w1), CRB(w2) and CRB(w1, w2) for one scenario."""
    scenario.validate()
    sums = spectral_sums(scenario)
    q, q_diag, p_off = _q_denominator(scenario, sums)
    beta = beta_factor(scenario)
    half_s2 = 0.5 * scenario.sigma2
    return CrbSet(
        crb_omega1=half_s2 * beta / q,
        crb_omega2=half_s2 * q_diag / q,
        crb_cross=-half_s2 * p_off / q,
    )


def crb_delta(scenario: Scenario) -> float:
    """Separation bound CRB(delta) = CRB(w1) + CRB(w2) - 2*CRB(w1, w2); strictly positive."""
    return crb_closed_form(scenario).crb_delta
