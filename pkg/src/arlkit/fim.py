"""Exact 3x3 Fisher information matrix and its numeric inverse.

For a complex circular Gaussian observation y ~ CN(ybar, sigma^2 I) with
known deterministic signals, the Slepian-Bangs formula reduces to

    J_ij = (2/sigma^2) * sum_t Re{ s(t)^H (dA/dtheta_i)^H (dA/dtheta_j) s(t) }

over theta = (omega1, omega2, phi).  Two computation paths are provided: the
snapshot-loop definition above, and closed-form Gram identities

    J11 = (2/s2) ||s1||^2 L2     J12 = (2/s2) zeta(delta)
    J22 = (2/s2) ||s2||^2 L2     J13 = (2/s2) eta(delta)
    J33 = (2/s2) ||s2||^2 L4     J23 = (2/s2) ||s2||^2 L3

The Gram path is the fast one; the snapshot path is the built-in oracle.
The inverse of J is the ground truth every closed-form CRB is checked against.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .array_model import Scenario, index_moments, steering_derivatives
from .crb import spectral_sums
from .errors import SingularFimError

RCOND_THRESHOLD = 1e-12


@dataclass(frozen=True, eq=False)
class FisherMatrix:
    """Real symmetric 3x3 information matrix, parameter order (omega1, omega2, phi)."""

    entries: np.ndarray
    sigma2: float


@dataclass(frozen=True)
class CrbNumeric:
    """Diagonal and (1,2) entries of the inverse Fisher matrix."""

    crb_omega1: float
    crb_omega2: float
    crb_phi: float
    crb_cross_12: float


def fim_slepian_bangs(scenario: Scenario, method: str = "gram") -> FisherMatrix:
    """Fisher information matrix for one scenario.

    Parameters
    ----------
    scenario : Scenario
        Problem instance; requires sigma2 > 0.
    method : {"gram", "snapshots"}
        "gram" evaluates the closed-form Gram identities; "snapshots" loops
        over snapshots applying the definition directly.  Both agree to
        rounding and the snapshot path serves as the slow oracle.
    """
    if scenario.sigma2 <= 0:
        raise ValueError("noise variance must be positive")
    if method == "gram":
        mat = _gram_matrix(scenario)
    elif method == "snapshots":
        mat = _snapshot_matrix(scenario)
    else:
        raise ValueError(f"unknown method {method!r}")
    return FisherMatrix(entries=(2.0 / scenario.sigma2) * mat, sigma2=scenario.sigma2)


def _gram_matrix(scenario: Scenario) -> np.ndarray:
    sums = spectral_sums(scenario)
    e1 = scenario.signals.energy1
    e2 = scenario.signals.energy2
    return np.array([
        [sums.l2 * e1, sums.zeta, sums.eta],
        [sums.zeta, sums.l2 * e2, sums.l3 * e2],
        [sums.eta, sums.l3 * e2, sums.l4 * e2],
    ])


def _snapshot_matrix(scenario: Scenario) -> np.ndarray:
    geom = scenario.geometry
    el = scenario.electrical
    da, db_w, db_p = steering_derivatives(el.omega1, el.omega2, el.phi, geom.num_sensors)
    zeros = np.zeros(geom.num_sensors, dtype=complex)
    # dA/dtheta_i as (L, 2) matrices, columns ordered (s1, s2)
    deriv_mats = [
        np.column_stack([da, zeros]),
        np.column_stack([zeros, db_w]),
        np.column_stack([zeros, db_p]),
    ]
    s = np.column_stack([scenario.signals.s1, scenario.signals.s2])
    mat = np.zeros((3, 3))
    for t in range(scenario.signals.num_snapshots):
        u = [d @ s[t] for d in deriv_mats]
        for i in range(3):
            for j in range(i, 3):
                mat[i, j] += np.vdot(u[i], u[j]).real
    return mat + np.triu(mat, 1).T


def invert_fim(fim: FisherMatrix, rcond_threshold: float = RCOND_THRESHOLD) -> np.ndarray:
    """Full 3x3 inverse by adjugate after symmetric equilibration.

    Scales J to S = D J D with D = diag(1/sqrt(J_ii)) before the cofactor
    inversion; this keeps the arithmetic conditioned by the correlation
    structure rather than the raw entry magnitudes.  Raises
    ``SingularFimError`` when the reciprocal condition estimate of S falls
    below ``rcond_threshold``.
    """
    j = np.asarray(fim.entries, dtype=float)
    diag = np.diag(j)
    if np.any(diag <= 0) or not np.all(np.isfinite(j)):
        raise SingularFimError("nonpositive diagonal in Fisher matrix", rcond=0.0)
    d = 1.0 / np.sqrt(diag)
    s = j * d[:, None] * d[None, :]
    adj = _adjugate3(s)
    det = s[0, 0] * adj[0, 0] + s[0, 1] * adj[1, 0] + s[0, 2] * adj[2, 0]
    if det == 0.0 or not np.isfinite(det):
        raise SingularFimError("zero determinant", rcond=0.0)
    s_inv = adj / det
    rcond = 1.0 / (_norm1(s) * _norm1(s_inv))
    if rcond < rcond_threshold:
        raise SingularFimError("ill-conditioned Fisher matrix", rcond=rcond)
    return s_inv * d[:, None] * d[None, :]


def _adjugate3(m: np.ndarray) -> np.ndarray:
    adj = np.empty((3, 3))
    for i in range(3):
        for j in range(3):
            rows = [k for k in range(3) if k != j]
            cols = [k for k in range(3) if k != i]
            sub = m[np.ix_(rows, cols)]
            adj[i, j] = (-1) ** (i + j) * (sub[0, 0] * sub[1, 1] - sub[0, 1] * sub[1, 0])
    return adj


def _norm1(m: np.ndarray) -> float:
    return float(np.max(np.sum(np.abs(m), axis=0)))


def crb_numeric(fim: FisherMatrix, rcond_threshold: float = RCOND_THRESHOLD) -> CrbNumeric:
    """CRB entries from the numerically inverted Fisher matrix."""
    inv = invert_fim(fim, rcond_threshold)
    return CrbNumeric(
        crb_omega1=float(inv[0, 0]),
        crb_omega2=float(inv[1, 1]),
        crb_phi=float(inv[2, 2]),
        crb_cross_12=float(inv[0, 1]),
    )


def crb_delta_numeric(fim: FisherMatrix, rcond_threshold: float = RCOND_THRESHOLD) -> float:
    """Separation bound as the quadratic form e~^T J^{-1} e~ with e~ = (-1, 1, 0)."""
    inv = invert_fim(fim, rcond_threshold)
    e = np.array([-1.0, 1.0, 0.0])
    return float(e @ inv @ e)
