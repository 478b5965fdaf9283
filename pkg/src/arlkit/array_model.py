"""Uniform linear array with one planar-wavefront and one curved-wavefront source.

The array has L sensors at positions 0, d, ..., (L-1)*d.  A distant source
arrives with a phase linear in the sensor index (omega*l); a source inside the
Fresnel region adds a quadratic term (phi*l^2).  Everything downstream works
in the electrical parameters (omega1, delta=omega2-omega1, phi); this module
also provides the mapping from the physical ones (DOAs and range).
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import FresnelRegionError

SPEED_OF_LIGHT = 299792458.0


@dataclass(frozen=True)
class ArrayGeometry:
    """Uniform linear array: sensor count, spacing and wavelength.

    Parameters
    ----------
    num_sensors : int
        Number of sensors L.  At least 3, so that the three real parameters
        (omega1, omega2, phi) remain identifiable.
    spacing : float
        Inter-sensor distance d in meters.
    wavelength : float
        Carrier wavelength in meters.
    """

    num_sensors: int
    spacing: float
    wavelength: float

    @classmethod
    def from_carrier(cls, num_sensors: int, spacing: float, carrier_hz: float,
                     propagation_speed: float = SPEED_OF_LIGHT) -> "ArrayGeometry":
        """Build a geometry from a carrier frequency, wavelength = c / f0."""
        if carrier_hz <= 0:
            raise ValueError("carrier frequency must be positive")
        return cls(num_sensors, spacing, propagation_speed / carrier_hz)

    @property
    def aperture(self) -> float:
        """Array aperture D = d * (L - 1) in meters."""
        return self.spacing * (self.num_sensors - 1)

    def validate(self) -> None:
        if self.num_sensors < 3:
            raise ValueError(f"need at least 3 sensors for identifiability, got {self.num_sensors}")
        if self.spacing <= 0:
            raise ValueError("sensor spacing must be positive")
        if self.wavelength <= 0:
            raise ValueError("wavelength must be positive")


@dataclass(frozen=True)
class ElectricalParams:
    """Electrical parameters: omega1 (rad/index), delta = omega2 - omega1, phi (rad/index^2)."""

    omega1: float
    delta: float
    phi: float

    @property
    def omega2(self) -> float:
        return self.omega1 + self.delta

    def validate(self) -> None:
        if self.delta == 0.0:
            raise ValueError("separation delta must be nonzero (omega1 != omega2)")


@dataclass(frozen=True)
class PhysicalParams:
    """Physical parameters: the two DOAs in radians and the curved-source range in meters."""

    theta_ff: float
    theta_nf: float
    range_r: float

    def validate(self) -> None:
        if not (abs(self.theta_ff) < np.pi / 2 and abs(self.theta_nf) < np.pi / 2):
            raise ValueError("DOAs must lie strictly inside (-pi/2, pi/2)")
        if self.range_r <= 0:
            raise ValueError("source range must be positive")


@dataclass(frozen=True, eq=False)
class SourceSignals:
    """Known deterministic source amplitudes over T snapshots.

    ``s1`` is the planar-wavefront source, ``s2`` the curved-wavefront one.
    Derived scalars: energies ||s1||^2 and ||s2||^2 and the cross-correlation
    h = s1^H s2 summed over snapshots.
    """

    s1: np.ndarray
    s2: np.ndarray

    def __post_init__(self):
        s1 = np.asarray(self.s1, dtype=complex)
        s2 = np.asarray(self.s2, dtype=complex)
        if s1.ndim != 1 or s2.ndim != 1 or s1.shape != s2.shape:
            raise ValueError("s1 and s2 must be 1-D sequences of equal length")
        if s1.size < 1:
            raise ValueError("need at least one snapshot")
        object.__setattr__(self, "s1", s1)
        object.__setattr__(self, "s2", s2)

    @property
    def num_snapshots(self) -> int:
        return self.s1.size

    @property
    def energy1(self) -> float:
        return float(np.vdot(self.s1, self.s1).real)

    @property
    def energy2(self) -> float:
        return float(np.vdot(self.s2, self.s2).real)

    @property
    def cross(self) -> complex:
        """h = s1^H s2 = sum_t conj(s1(t)) * s2(t)."""
        return complex(np.vdot(self.s1, self.s2))


def random_phase_signals(num_snapshots: int, amp_ratio: float = 10.0,
                         seed: int = 0) -> SourceSignals:
    """Generate unit-modulus random-phase signals, s2 scaled by ``amp_ratio``.

    Phases are i.i.d. uniform on [0, 2*pi) from a seeded generator, so a
    (seed, T, amp_ratio) triple always produces the same waveforms.
    """
    if num_snapshots < 1:
        raise ValueError("need at least one snapshot")
    rng = np.random.default_rng(seed)
    s1 = np.exp(2j * np.pi * rng.random(num_snapshots))
    s2 = amp_ratio * np.exp(2j * np.pi * rng.random(num_snapshots))
    return SourceSignals(s1=s1, s2=s2)


@dataclass(frozen=True, eq=False)
class Scenario:
    """One evaluable problem instance: geometry, electrical parameters, signals, noise power."""

    geometry: ArrayGeometry
    electrical: ElectricalParams
    signals: SourceSignals
    sigma2: float

    def validate(self) -> None:
        self.geometry.validate()
        self.electrical.validate()
        if self.sigma2 <= 0:
            raise ValueError("noise variance must be positive")

    def with_sigma2(self, sigma2: float) -> "Scenario":
        return replace(self, sigma2=sigma2)

    def with_delta(self, delta: float) -> "Scenario":
        return replace(self, electrical=replace(self.electrical, delta=delta))


def steering_ff(omega1: float, num_sensors: int) -> np.ndarray:
    """Planar-wavefront steering vector, element l = exp(i*omega1*l), l = 0..L-1."""
    l = np.arange(num_sensors)
    return np.exp(1j * omega1 * l)


def steering_nf(omega2: float, phi: float, num_sensors: int) -> np.ndarray:
    """Curved-wavefront steering vector, element l = exp(i*(omega2*l + phi*l^2)).

    Reduces exactly to ``steering_ff(omega2, L)`` when phi == 0.
    """
    l = np.arange(num_sensors)
    return np.exp(1j * (omega2 * l + phi * l * l))


def steering_derivatives(omega1: float, omega2: float, phi: float,
                         num_sensors: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Analytic first derivatives of the steering vectors.

    Returns
    -------
    (da_domega1, db_domega2, db_dphi)
        Element l of the three vectors is i*l*exp(i*omega1*l),
        i*l*exp(i*(omega2*l + phi*l^2)) and i*l^2*exp(i*(omega2*l + phi*l^2)).
    """
    l = np.arange(num_sensors)
    a = steering_ff(omega1, num_sensors)
    b = steering_nf(omega2, phi, num_sensors)
    return 1j * l * a, 1j * l * b, 1j * l * l * b


def physical_to_electrical(phys: PhysicalParams, geom: ArrayGeometry) -> ElectricalParams:
    """Map (theta_ff, theta_nf, r) to (omega1, delta, phi).

    omega_m = -2*pi*d/lambda * sin(theta_m) and
    phi = pi*d^2/(lambda*r) * cos(theta_nf)^2.
    """
    geom.validate()
    phys.validate()
    scale = -2.0 * np.pi * geom.spacing / geom.wavelength
    omega1 = scale * np.sin(phys.theta_ff)
    omega2 = scale * np.sin(phys.theta_nf)
    phi = (np.pi * geom.spacing**2 / (geom.wavelength * phys.range_r)
           * np.cos(phys.theta_nf) ** 2)
    return ElectricalParams(omega1=float(omega1), delta=float(omega2 - omega1), phi=float(phi))


def fresnel_bounds(geom: ArrayGeometry) -> tuple[float, float]:
    """Raw Fresnel bounds (0.62*sqrt(D^3/lambda), 2*D^2/lambda), D = d*(L-1).

    Returned unconditionally; the pair only brackets a valid region when
    r_min < r_max.  Sub-wavelength spacings can make the interval empty.
    """
    geom.validate()
    d_ap = geom.aperture
    r_min = 0.62 * np.sqrt(d_ap**3 / geom.wavelength)
    r_max = 2.0 * d_ap**2 / geom.wavelength
    return float(r_min), float(r_max)


def fresnel_interval(geom: ArrayGeometry) -> tuple[float, float]:
    """Fresnel region of the array; raises ``FresnelRegionError`` when empty."""
    r_min, r_max = fresnel_bounds(geom)
    if r_min >= r_max:
        raise FresnelRegionError(
            f"empty Fresnel region: r_min={r_min:.6e} >= r_max={r_max:.6e} "
            f"(aperture {geom.aperture:.6e} m, wavelength {geom.wavelength:.6e} m)")
    return r_min, r_max


def noise_free_observation(scenario: Scenario) -> np.ndarray:
    """Stacked noise-free observation of length T*L.

    Block t (length L) equals a(omega1)*s1(t) + b(omega2, phi)*s2(t).
    """
    geom = scenario.geometry
    el = scenario.electrical
    a = steering_ff(el.omega1, geom.num_sensors)
    b = steering_nf(el.omega2, el.phi, geom.num_sensors)
    return np.kron(scenario.signals.s1, a) + np.kron(scenario.signals.s2, b)


def index_moments(num_sensors: int, max_order: int = 4) -> tuple[float, ...]:
    """Sensor-index moment sums (L_1, ..., L_max_order), L_r = sum_{l=0}^{L-1} l^r."""
    l = np.arange(num_sensors, dtype=float)
    return tuple(float(np.sum(l**r)) for r in range(1, max_order + 1))
