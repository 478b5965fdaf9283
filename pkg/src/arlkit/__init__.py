"""Angular resolution limit for mixed planar/curved wavefront sources on a ULA.

Closed-form Cramer-Rao bounds feed the Smith criterion CRB(delta) = delta^2;
a small-separation linearization turns it into a quartic whose admissible
root is the resolution limit, cross-checked against the numerically inverted
Fisher matrix and a bisection solve of the exact equation.
"""

from .array_model import (
    SPEED_OF_LIGHT,
    ArrayGeometry,
    ElectricalParams,
    PhysicalParams,
    Scenario,
    SourceSignals,
    fresnel_bounds,
    fresnel_interval,
    index_moments,
    noise_free_observation,
    physical_to_electrical,
    random_phase_signals,
    steering_derivatives,
    steering_ff,
    steering_nf,
)
from .config import (
    ExperimentConfig,
    build_scenario,
    inv_sigma2_grid,
    load_config,
    parse_config,
    serialize_config,
)
from .crb import CrbSet, SpectralSums, crb_closed_form, crb_delta, spectral_sums
from .errors import (
    ArlError,
    ConfigError,
    DegenerateQError,
    DegenerateQuarticError,
    FresnelRegionError,
    LowNoiseRegimeError,
    NegativeDiscriminantError,
    NegativeRadicandError,
    NoAdmissibleRootError,
    NoSignChangeError,
    SingularFimError,
)
from .fim import CrbNumeric, FisherMatrix, crb_delta_numeric, crb_numeric, fim_slepian_bangs, invert_fim
from .linearize import LinearCoeffs, PhiSums, linear_coeffs, phi_sums, q_poly, qprime_poly, scale_noise
from .solver import (
    ArlResult,
    BiquadraticRoots,
    QuarticRoots,
    arl_closed_form,
    arl_low_noise,
    compute_arl,
    select_arl_root,
    smith_numeric,
    solve_biquadratic,
    solve_quartic,
)
from .sweep import CSV_COLUMNS, SweepRecord, records_to_csv, run_sweep, write_csv
from .validate import ValidationReport, run_validation

__version__ = "0.1.0"
