import numpy as np
import pytest

from arlkit.array_model import ArrayGeometry, ElectricalParams, Scenario, SourceSignals
from arlkit.config import ExperimentConfig, build_scenario
from arlkit.sweep import run_sweep


def make_scenario(num_sensors=10, omega1=-0.3, delta=0.02, phi=0.005,
                  s1=None, s2=None, sigma2=0.01, seed=7, snapshots=50,
                  amp_ratio=10.0):
    """Hand-rolled scenario for unit tests; geometry details are irrelevant
    to the electrical-parameter operations."""
    rng = np.random.default_rng(seed)
    if s1 is None:
        s1 = np.exp(2j * np.pi * rng.random(snapshots))
    if s2 is None:
        s2 = amp_ratio * np.exp(2j * np.pi * rng.random(len(np.atleast_1d(s1))))
    return Scenario(
        geometry=ArrayGeometry(num_sensors=num_sensors, spacing=0.5, wavelength=1.0),
        electrical=ElectricalParams(omega1=omega1, delta=delta, phi=phi),
        signals=SourceSignals(s1=np.asarray(s1, dtype=complex),
                              s2=np.asarray(s2, dtype=complex)),
        sigma2=sigma2,
    )


@pytest.fixture(scope="session")
def default_config():
    return ExperimentConfig()


@pytest.fixture(scope="session")
def default_scenario(default_config):
    return build_scenario(default_config)


@pytest.fixture(scope="session")
def default_records(default_config):
    """One shared run of the default sweep; several suites inspect it."""
    return run_sweep(default_config)
