"""Experiment configuration: parsing, defaults, scenario construction.

Config files are flat ``section.key = value`` lines; ``#`` starts a comment
and blank lines are ignored.  Unknown sections or keys are rejected.  An
empty config reproduces the reference setup: a 10-sensor array with
d = 0.0125 m at a 10 MHz carrier, sources at pi/3 and pi/3.1, the curved
source ten times stronger, T = 100 snapshots.

Recognized keys::

    geometry.L                  sensor count (int, >= 3)
    geometry.d_meters           inter-sensor spacing in meters
    geometry.f0_hertz           carrier frequency in Hz (wavelength = c/f0)
    scenario.theta_ff_radians   planar-source DOA
    scenario.theta_nf_radians   curved-source DOA
    scenario.range_mode         "fraction" or "explicit"
    scenario.range_fraction     position inside the Fresnel bounds (0..1)
    scenario.range_meters       explicit range (with range_mode = explicit)
    scenario.amp_ratio          curved/planar amplitude ratio
    scenario.T                  snapshot count (int, >= 1)
    scenario.seed               signal-phase RNG seed (int)
    sweep.inv_sigma2_start      first 1/sigma^2 grid value
    sweep.inv_sigma2_stop       last 1/sigma^2 grid value
    sweep.num_points            grid size (int, >= 2)
    sweep.log_spacing           true/false
    solver.delta_max            scan limit in radians, or "auto" for pi/(L-1)
    solver.tol                  relative tolerance of the exact-Smith bisection
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, fields, replace
from pathlib import Path

import numpy as np

from .array_model import (
    ArrayGeometry,
    PhysicalParams,
    Scenario,
    fresnel_bounds,
    physical_to_electrical,
    random_phase_signals,
)
from .errors import ConfigError


@dataclass(frozen=True)
class GeometryConfig:
    L: int = 10
    d_meters: float = 0.0125
    f0_hertz: float = 1e7


@dataclass(frozen=True)
class ScenarioConfig:
    theta_ff_radians: float = math.pi / 3
    theta_nf_radians: float = math.pi / 3.1
    range_mode: str = "fraction"
    range_fraction: float = 0.5
    range_meters: float = 0.0
    amp_ratio: float = 10.0
    T: int = 100
    seed: int = 28


@dataclass(frozen=True)
class SweepConfig:
    inv_sigma2_start: float = 1e5
    inv_sigma2_stop: float = 1e11
    num_points: int = 50
    log_spacing: bool = True


@dataclass(frozen=True)
class SolverConfig:
    delta_max: float | None = None  # None means pi/(L-1)
    tol: float = 1e-12


@dataclass(frozen=True)
class ExperimentConfig:
    geometry: GeometryConfig = field(default_factory=GeometryConfig)
    scenario: ScenarioConfig = field(default_factory=ScenarioConfig)
    sweep: SweepConfig = field(default_factory=SweepConfig)
    solver: SolverConfig = field(default_factory=SolverConfig)

    def validate(self) -> None:
        g, s, w, v = self.geometry, self.scenario, self.sweep, self.solver
        if g.L < 3:
            raise ConfigError(f"geometry.L must be >= 3 for identifiability, got {g.L}")
        if g.d_meters <= 0 or g.f0_hertz <= 0:
            raise ConfigError("geometry.d_meters and geometry.f0_hertz must be positive")
        if not (abs(s.theta_ff_radians) < math.pi / 2 and abs(s.theta_nf_radians) < math.pi / 2):
            raise ConfigError("DOAs must lie strictly inside (-pi/2, pi/2)")
        if s.range_mode not in ("fraction", "explicit"):
            raise ConfigError(f"scenario.range_mode must be 'fraction' or 'explicit', got {s.range_mode!r}")
        if s.range_mode == "fraction" and not (0.0 <= s.range_fraction <= 1.0):
            raise ConfigError("scenario.range_fraction must lie in [0, 1]")
        if s.range_mode == "explicit" and s.range_meters <= 0:
            raise ConfigError("scenario.range_meters must be positive with range_mode = explicit")
        if s.amp_ratio <= 0:
            raise ConfigError("scenario.amp_ratio must be positive")
        if s.T < 1:
            raise ConfigError("scenario.T must be >= 1")
        if w.num_points < 2:
            raise ConfigError("sweep.num_points must be >= 2")
        if w.inv_sigma2_start <= 0 or w.inv_sigma2_stop <= 0:
            raise ConfigError("sweep grid endpoints must be positive")
        if not w.inv_sigma2_start < w.inv_sigma2_stop:
            raise ConfigError("sweep.inv_sigma2_start must be below sweep.inv_sigma2_stop")
        if v.delta_max is not None and v.delta_max <= 0:
            raise ConfigError("solver.delta_max must be positive (or 'auto')")
        if v.tol <= 0:
            raise ConfigError("solver.tol must be positive")


_SECTIONS = {
    "geometry": GeometryConfig,
    "scenario": ScenarioConfig,
    "sweep": SweepConfig,
    "solver": SolverConfig,
}


def _parse_value(section: str, key: str, raw: str, lineno: int):
    cls = _SECTIONS[section]
    spec = {f.name: f for f in fields(cls)}
    if key not in spec:
        raise ConfigError(f"line {lineno}: unknown key '{section}.{key}'")
    target = spec[key]
    raw = raw.strip()
    try:
        if target.name == "delta_max":
            return None if raw.lower() in ("auto", "none") else float(raw)
        if target.type in ("int", int):
            return int(raw)
        if target.type in ("float", float):
            return float(raw)
        if target.type in ("bool", bool):
            low = raw.lower()
            if low in ("true", "false"):
                return low == "true"
            raise ValueError(raw)
        return raw
    except ValueError as exc:
        raise ConfigError(f"line {lineno}: cannot parse '{section}.{key} = {raw}'") from exc


def parse_config(text: str) -> ExperimentConfig:
    """Parse config text; unknown keys and malformed lines raise ``ConfigError``."""
    values: dict[str, dict[str, object]] = {name: {} for name in _SECTIONS}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise ConfigError(f"line {lineno}: expected 'section.key = value', got {line.strip()!r}")
        lhs, rhs = stripped.split("=", 1)
        lhs = lhs.strip()
        if "." not in lhs:
            raise ConfigError(f"line {lineno}: key {lhs!r} is missing its section prefix")
        section, key = lhs.split(".", 1)
        if section not in _SECTIONS:
            raise ConfigError(f"line {lineno}: unknown section {section!r}")
        values[section][key] = _parse_value(section, key, rhs, lineno)
    config = ExperimentConfig(
        geometry=GeometryConfig(**values["geometry"]),
        scenario=ScenarioConfig(**values["scenario"]),
        sweep=SweepConfig(**values["sweep"]),
        solver=SolverConfig(**values["solver"]),
    )
    config.validate()
    return config


def load_config(path: str | Path) -> ExperimentConfig:
    """Read and parse a config file."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return parse_config(text)


def serialize_config(config: ExperimentConfig) -> str:
    """Canonical text form; ``parse_config`` maps it back to an equal config."""
    lines = []
    for section, sub in (("geometry", config.geometry), ("scenario", config.scenario),
                         ("sweep", config.sweep), ("solver", config.solver)):
        for f in fields(sub):
            value = getattr(sub, f.name)
            if f.name == "delta_max" and value is None:
                text = "auto"
            elif isinstance(value, bool):
                text = "true" if value else "false"
            elif isinstance(value, float):
                text = repr(value)
            else:
                text = str(value)
            lines.append(f"{section}.{f.name} = {text}")
    return "\n".join(lines) + "\n"


def with_seed(config: ExperimentConfig, seed: int) -> ExperimentConfig:
    return replace(config, scenario=replace(config.scenario, seed=seed))


def resolve_range(config: ExperimentConfig) -> float:
    """Curved-source range in meters, from the explicit value or the Fresnel bounds.

    Fraction mode interpolates linearly between the raw bounds
    0.62*sqrt(D^3/lambda) and 2*D^2/lambda; sub-wavelength geometries can make
    that interval empty, in which case the interpolation still yields a
    positive range and `scenario_warnings` flags the situation.
    """
    s = config.scenario
    if s.range_mode == "explicit":
        return s.range_meters
    geom = build_geometry(config)
    r_min, r_max = fresnel_bounds(geom)
    return r_min + s.range_fraction * (r_max - r_min)


def build_geometry(config: ExperimentConfig) -> ArrayGeometry:
    g = config.geometry
    return ArrayGeometry.from_carrier(g.L, g.d_meters, g.f0_hertz)


def scenario_warnings(config: ExperimentConfig) -> list[str]:
    """Advisory diagnostics for the configured geometry."""
    geom = build_geometry(config)
    out = []
    ratio = geom.spacing / geom.wavelength
    if ratio < 0.01:
        out.append(
            f"d/lambda = {ratio:.3e} < 0.01: resolving this geometry requires extreme SNR")
    r_min, r_max = fresnel_bounds(geom)
    if r_min >= r_max:
        out.append(
            f"Fresnel region is empty (r_min={r_min:.4e} >= r_max={r_max:.4e}); "
            "the configured range is outside any valid near-field zone")
    return out


def build_scenario(config: ExperimentConfig, sigma2: float | None = None) -> Scenario:
    """Construct the scenario described by a config.

    ``sigma2`` defaults to the geometric midpoint of the sweep grid; the sweep
    itself replaces the noise power point by point.  Signals are generated
    once from (seed, T, amp_ratio) and are identical across sweep points.
    """
    config.validate()
    geom = build_geometry(config)
    s = config.scenario
    phys = PhysicalParams(theta_ff=s.theta_ff_radians, theta_nf=s.theta_nf_radians,
                          range_r=resolve_range(config))
    electrical = physical_to_electrical(phys, geom)
    signals = random_phase_signals(s.T, amp_ratio=s.amp_ratio, seed=s.seed)
    if sigma2 is None:
        w = config.sweep
        sigma2 = 1.0 / math.sqrt(w.inv_sigma2_start * w.inv_sigma2_stop)
    return Scenario(geometry=geom, electrical=electrical, signals=signals, sigma2=sigma2)


def inv_sigma2_grid(config: ExperimentConfig) -> np.ndarray:
    """Ascending 1/sigma^2 grid, log- or linearly spaced per the config."""
    w = config.sweep
    if w.log_spacing:
        return np.logspace(math.log10(w.inv_sigma2_start), math.log10(w.inv_sigma2_stop),
                           w.num_points)
    return np.linspace(w.inv_sigma2_start, w.inv_sigma2_stop, w.num_points)


def default_delta_max(config: ExperimentConfig) -> float:
    if config.solver.delta_max is not None:
        return config.solver.delta_max
    return math.pi / (config.geometry.L - 1)
