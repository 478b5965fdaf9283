"""Resolution-limit solvers: quartic roots, reduced quadratic, exact Smith root.

Three independent routes to the angular resolution limit:

1. all four roots of the monic quartic R(x) = x^4 + g3 x^3 + g2 x^2 + g1 x + g0
   (companion-matrix eigenvalues polished by Newton steps), with the
   noise-dependent positive root selected by a sigma^2-sensitivity test;
2. the reduced quadratic R'(z) = (beta*a2 - alpha1^2) z^2
   + (beta*a0 - alpha0^2 - c2) z - c0 in z = delta^2, whose positive-branch
   root gives the closed-form limit delta = sqrt(z_plus), plus the low-noise
   shortcut delta ~ sqrt(c0 / (beta*a0 - alpha0^2 - c2));
3. a bisection root of the exact (non-linearized) Smith equation
   CRB(delta) = delta^2, independent of every Taylor step.

In the small-separation regime all three agree; the sweep machinery records
them side by side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .array_model import Scenario
from .crb import crb_delta
from .errors import (
    DegenerateQuarticError,
    NegativeDiscriminantError,
    NegativeRadicandError,
    LowNoiseRegimeError,
    NoAdmissibleRootError,
    NoSignChangeError,
)
from .linearize import LinearCoeffs, linear_coeffs, scale_noise

REAL_ROOT_IMAG_TOL = 1e-8
NOISE_SENSITIVITY_FACTOR = 1.01
NOISE_SENSITIVITY_THRESHOLD = 1e-9
SMITH_GRID_POINTS = 2048
SMITH_GRID_FLOOR = 1e-9


@dataclass(frozen=True, eq=False)
class QuarticRoots:
    """The four complex roots of a monic quartic, sorted by (real, imag)."""

    roots: np.ndarray
    coefficients: tuple[float, float, float, float]  # (g0, g1, g2, g3)

    @property
    def positive_real_roots(self) -> tuple[float, ...]:
        """Real positive roots, ascending; a root counts as real when its
        imaginary part is below REAL_ROOT_IMAG_TOL relative to max(1, |root|)."""
        out = [float(z.real) for z in self.roots
               if abs(z.imag) <= REAL_ROOT_IMAG_TOL * max(1.0, abs(z)) and z.real > 0.0]
        return tuple(sorted(out))

    def residuals(self) -> np.ndarray:
        """|R(root)| for each root."""
        g0, g1, g2, g3 = self.coefficients
        z = self.roots
        return np.abs((((z + g3) * z + g2) * z + g1) * z + g0)

    def symmetric_pair(self) -> tuple[complex, complex, float]:
        """The root pair with the smallest |z_i + z_j| (the near +/- pair)."""
        best = None
        for i in range(4):
            for j in range(i + 1, 4):
                s = abs(self.roots[i] + self.roots[j])
                if best is None or s < best[2]:
                    best = (self.roots[i], self.roots[j], s)
        return best


@dataclass(frozen=True)
class BiquadraticRoots:
    """Roots of the reduced quadratic in z = delta^2 and its discriminant.

    ``z_plus`` carries the (-B + sqrt(D))/(2A) branch and ``z_minus`` the
    (-B - sqrt(D))/(2A) branch; both are None when the discriminant is
    negative.  Candidate separations are the square roots of the positive z.
    """

    z_plus: float | None
    z_minus: float | None
    discriminant: float

    def positive_z(self) -> tuple[float, ...]:
        return tuple(z for z in (self.z_plus, self.z_minus) if z is not None and z > 0.0)

    def positive_delta_roots(self) -> tuple[float, ...]:
        """Positive separations sqrt(z) for each admissible z, ascending."""
        return tuple(sorted(math.sqrt(z) for z in self.positive_z()))


@dataclass(frozen=True)
class ArlResult:
    """The three resolution-limit values for one scenario."""

    arl_closed: float
    arl_low_noise: float
    arl_numeric: float
    discriminant: float
    selected_branch: str = "+"


def solve_quartic(g0: float, g1: float, g2: float, g3: float) -> QuarticRoots:
    """All four complex roots of x^4 + g3 x^3 + g2 x^2 + g1 x + g0.

    Companion-matrix eigenvalues followed by two guarded Newton polish steps;
    eigenvalues alone lose accuracy when the coefficients span many orders of
    magnitude, Newton restores residual-level precision.
    """
    for name, g in (("g0", g0), ("g1", g1), ("g2", g2), ("g3", g3)):
        if not np.isfinite(g):
            raise ValueError(f"non-finite quartic coefficient {name}={g!r}")
    companion = np.zeros((4, 4))
    companion[1, 0] = companion[2, 1] = companion[3, 2] = 1.0
    companion[:, 3] = (-g0, -g1, -g2, -g3)
    roots = np.linalg.eigvals(companion).astype(complex)

    def poly(z):
        return (((z + g3) * z + g2) * z + g1) * z + g0

    def dpoly(z):
        return ((4.0 * z + 3.0 * g3) * z + 2.0 * g2) * z + g1

    for _ in range(2):
        p = poly(roots)
        dp = dpoly(roots)
        safe = dp != 0
        candidate = np.where(safe, roots - p / np.where(safe, dp, 1.0), roots)
        improved = np.abs(poly(candidate)) <= np.abs(p)
        roots = np.where(improved, candidate, roots)

    order = np.lexsort((roots.imag, roots.real))
    return QuarticRoots(roots=roots[order], coefficients=(g0, g1, g2, g3))


def _stable_quadratic_branches(a: float, b: float, c: float) -> tuple[float, float]:
    """Roots of a*z^2 + b*z + c as (plus_branch, minus_branch) of (-b +/- sqrt(D))/(2a).

    Uses the q = -(b + sign(b)*sqrt(D))/2 form so neither root suffers
    cancellation; assumes D = b^2 - 4ac >= 0 and a != 0.
    """
    disc = b * b - 4.0 * a * c
    sq = math.sqrt(disc)
    if b >= 0.0:
        q = -0.5 * (b + sq)
        minus_branch = q / a
        plus_branch = c / q if q != 0.0 else -b / (2.0 * a)
    else:
        q = -0.5 * (b - sq)
        plus_branch = q / a
        minus_branch = c / q if q != 0.0 else -b / (2.0 * a)
    return plus_branch, minus_branch


def solve_biquadratic(coeffs: LinearCoeffs) -> BiquadraticRoots:
    """Solve the reduced quadratic in z = delta^2.

    The discriminant

        D = (beta*a0 - alpha0^2 - c2)^2 + 4*(beta*a2 - alpha1^2)*c0

    is reported even when negative (then both roots are absent: the noise is
    too high for the linearized model to admit a real resolution limit).
    """
    a, b, c = coeffs.reduced_quadratic()
    if a == 0.0:
        raise DegenerateQuarticError("beta*a2 - alpha1^2 vanished")
    disc = b * b - 4.0 * a * c
    if disc < 0.0:
        return BiquadraticRoots(z_plus=None, z_minus=None, discriminant=disc)
    z_plus, z_minus = _stable_quadratic_branches(a, b, c)
    return BiquadraticRoots(z_plus=float(z_plus), z_minus=float(z_minus), discriminant=float(disc))


def arl_closed_form(coeffs: LinearCoeffs) -> float:
    """Closed-form resolution limit sqrt((-B + sqrt(D)) / (2A)).

    The positive sign is the admissible branch: it is the one whose root
    shrinks to zero with the noise power.  Raises when the discriminant or
    the radicand is negative.
    """
    biq = solve_biquadratic(coeffs)
    if biq.z_plus is None:
        raise NegativeDiscriminantError(
            f"discriminant {biq.discriminant:.6e} < 0: noise too high for the linearized model")
    if biq.z_plus < 0.0:
        raise NegativeRadicandError(
            f"positive branch gives z = {biq.z_plus:.6e} < 0; scenario outside model validity")
    return math.sqrt(biq.z_plus)


def arl_low_noise(coeffs: LinearCoeffs) -> float:
    """Low-noise shortcut sqrt(c0 / (beta*a0 - alpha0^2 - c2)).

    First order in the sqrt(1 + x) expansion of the discriminant; accurate to
    about x/8 with x = 4*|beta*a2 - alpha1^2|*c0 / (beta*a0 - alpha0^2 - c2)^2.
    """
    b = coeffs.reduced_mid
    if b <= 0.0 or coeffs.c0 < 0.0:
        raise LowNoiseRegimeError(
            f"low-noise radicand c0/B undefined: c0={coeffs.c0:.6e}, B={b:.6e}")
    return math.sqrt(coeffs.c0 / b)


def smith_numeric(scenario: Scenario, delta_max: float | None = None,
                  tol: float = 1e-12, grid_points: int = SMITH_GRID_POINTS,
                  grid_floor: float = SMITH_GRID_FLOOR) -> float:
    """Smallest positive root of CRB(delta) = delta^2 using the exact CRB.

    Scans a log-spaced grid on (grid_floor, delta_max] for the first sign
    change of f(delta) = CRB(delta) - delta^2, then bisects to relative
    tolerance ``tol``.  Uses the exact closed-form CRB (no Taylor step), so it
    is independent of the linearized routes.  ``delta_max`` defaults to
    pi/(L-1), one beamwidth-scale separation.
    """
    if delta_max is None:
        delta_max = math.pi / (scenario.geometry.num_sensors - 1)

    def f(d: float) -> float:
        return crb_delta(scenario.with_delta(d)) - d * d

    grid = np.logspace(math.log10(grid_floor), math.log10(delta_max), grid_points)
    prev_x = float(grid[0])
    prev_f = f(prev_x)
    bracket = None
    for x in grid[1:]:
        x = float(x)
        fx = f(x)
        if prev_f == 0.0:
            return prev_x
        if prev_f * fx < 0.0:
            bracket = (prev_x, x, prev_f)
            break
        prev_x, prev_f = x, fx
    if bracket is None:
        raise NoSignChangeError(
            f"CRB(delta) - delta^2 has no sign change on ({grid_floor:.1e}, {delta_max:.6e}]; "
            "noise too high to resolve within the scan range")

    lo, hi, f_lo = bracket
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        if f_mid == 0.0:
            return mid
        if f_lo * f_mid < 0.0:
            hi = mid
        else:
            lo, f_lo = mid, f_mid
        if hi - lo < 0.25 * tol * mid:
            break
    return 0.5 * (lo + hi)


def select_arl_root(quartic: QuarticRoots, coeffs: LinearCoeffs,
                    noise_factor: float = NOISE_SENSITIVITY_FACTOR,
                    threshold: float = NOISE_SENSITIVITY_THRESHOLD) -> float:
    """Pick the resolution-limit root among the positive quartic roots.

    Re-solves the quartic with the noise power scaled by ``noise_factor`` and
    discards roots that move less than ``threshold`` relatively (the spurious
    noise-invariant pair).  Among the survivors, admissible roots grow with
    the noise power (so they shrink to zero as it drops); the most
    noise-sensitive one is returned.
    """
    candidates = quartic.positive_real_roots
    if not candidates:
        raise NoAdmissibleRootError("quartic has no positive real roots")
    perturbed = solve_quartic(*scale_noise(coeffs, noise_factor).quartic())
    moved = perturbed.positive_real_roots
    best = None
    for root in candidates:
        if not moved:
            break
        partner = min(moved, key=lambda r: abs(r - root))
        motion = abs(partner - root) / root
        if motion < threshold:
            continue  # noise-invariant: the pair to be ignored
        if partner <= root:
            continue  # grows as noise drops: not a resolution limit
        if best is None or motion > best[1]:
            best = (root, motion)
    if best is None:
        raise NoAdmissibleRootError(
            "all positive quartic roots are invariant under noise perturbation")
    return best[0]


def compute_arl(scenario: Scenario, delta_max: float | None = None,
                tol: float = 1e-12) -> ArlResult:
    """All three resolution-limit values for one scenario."""
    coeffs = linear_coeffs(scenario)
    biq = solve_biquadratic(coeffs)
    return ArlResult(
        arl_closed=arl_closed_form(coeffs),
        arl_low_noise=arl_low_noise(coeffs),
        arl_numeric=smith_numeric(scenario, delta_max=delta_max, tol=tol),
        discriminant=biq.discriminant,
    )
