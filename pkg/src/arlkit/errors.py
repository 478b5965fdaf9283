"""Exception types raised by the resolution-limit pipeline.

Every exception carries a short snake_case ``status`` string used in sweep
records and CSV output, so per-point failures become data instead of crashes.
"""

from __future__ import annotations


class ArlError(Exception):
    """Base class for all domain errors."""

    status = "error"


class FresnelRegionError(ArlError):
    """The Fresnel interval [0.62*sqrt(D^3/lambda), 2*D^2/lambda] is empty."""

    status = "empty_fresnel_region"


class SingularFimError(ArlError):
    """The Fisher information matrix is numerically singular."""

    status = "singular_fim"

    def __init__(self, message: str, rcond: float):
        super().__init__(f"{message} (rcond estimate {rcond:.3e})")
        self.rcond = rcond


class DegenerateQError(ArlError):
    """The CRB denominator Q = beta*(L2||s1||^2 - eta^2/(L4||s2||^2)) - (zeta - eta*L3/L4)^2 vanished."""

    status = "degenerate_q"


class DegenerateQuarticError(ArlError):
    """beta*a2 - alpha1^2 vanished, so the monic quartic cannot be formed."""

    status = "degenerate_quartic"


class NegativeDiscriminantError(ArlError):
    """The reduced quadratic has no real roots (noise too high for the linearized model)."""

    status = "negative_discriminant"


class NegativeRadicandError(ArlError):
    """The selected branch yields a negative radicand; no admissible separation."""

    status = "negative_radicand"


class LowNoiseRegimeError(ArlError):
    """The low-noise approximation sqrt(c0/(beta*a0 - alpha0^2 - c2)) is undefined here."""

    status = "invalid_low_noise_regime"


class NoSignChangeError(ArlError):
    """The Smith equation CRB(delta) = delta^2 has no root in the scanned interval."""

    status = "no_sign_change"


class NoAdmissibleRootError(ArlError):
    """Every positive quartic root is noise-invariant; no resolution-limit root exists."""

    status = "no_admissible_root"


class ConfigError(ArlError):
    """Malformed or invalid experiment configuration."""

    status = "config_error"
