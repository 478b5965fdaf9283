import math

import numpy as np
import pytest

from arlkit.crb import crb_delta
from arlkit.errors import (
    NegativeDiscriminantError,
    NoAdmissibleRootError,
    NoSignChangeError,
)
from arlkit.linearize import linear_coeffs, scale_noise
from arlkit.solver import (
    arl_closed_form,
    arl_low_noise,
    compute_arl,
    select_arl_root,
    smith_numeric,
    solve_biquadratic,
    solve_quartic,
)
from arlkit.validate import expansion_parameter

from conftest import make_scenario


class TestSolveQuartic:
    def test_fourth_roots_of_unity(self):
        out = solve_quartic(-1.0, 0.0, 0.0, 0.0)  # x^4 - 1
        expected = sorted([1.0, -1.0, 1j, -1j], key=lambda z: (z.real, z.imag))
        np.testing.assert_allclose(out.roots, expected, atol=1e-12)
        assert out.positive_real_roots == (1.0,)

    def test_factorable_biquadratic(self):
        out = solve_quartic(4.0, 0.0, -5.0, 0.0)  # x^4 - 5x^2 + 4
        np.testing.assert_allclose(sorted(out.roots.real), [-2, -1, 1, 2], atol=1e-12)
        np.testing.assert_allclose(out.roots.imag, 0.0, atol=1e-12)
        assert out.positive_real_roots == pytest.approx((1.0, 2.0), abs=1e-12)

    def test_matches_companion_eigenvalue_oracle(self):
        rng = np.random.default_rng(42)
        for _ in range(50):
            g = rng.standard_normal(4) * 10.0 ** rng.integers(-3, 4)
            ours = np.sort_complex(solve_quartic(*g).roots)
            oracle = np.sort_complex(np.roots([1.0, g[3], g[2], g[1], g[0]]))
            scale = max(1.0, float(np.max(np.abs(oracle))))
            assert np.max(np.abs(ours - oracle)) < 1e-9 * scale

    def test_residual_bound(self):
        # quartics built from moderate roots, matching the scale the residual
        # contract is stated for; float64 evaluation noise alone breaks the
        # absolute bound once roots reach ~1e4
        rng = np.random.default_rng(7)
        for _ in range(50):
            roots = rng.uniform(-10, 10, size=4)
            coeffs = np.poly(roots)
            g3, g2, g1, g0 = coeffs[1:]
            out = solve_quartic(g0, g1, g2, g3)
            assert np.max(out.residuals()) < 1e-9 * max(1.0, abs(g0))

    def test_rejects_nonfinite(self):
        with pytest.raises(ValueError):
            solve_quartic(float("nan"), 0.0, 0.0, 0.0)

    def test_symmetric_pair_identifies_opposites(self):
        out = solve_quartic(4.0, 0.0, -5.0, 0.0)
        a, b, gap = out.symmetric_pair()
        assert gap < 1e-12
        assert a == pytest.approx(-b, abs=1e-12)


class TestSolveBiquadratic:
    def test_zero_noise_limit(self):
        coeffs = scale_noise(linear_coeffs(make_scenario(seed=2)), 0.0)
        out = solve_biquadratic(coeffs)
        lead, mid, _ = coeffs.reduced_quadratic()
        assert out.discriminant == mid * mid
        assert out.z_plus == 0.0
        assert out.z_minus == pytest.approx(-mid / lead, rel=1e-14)

    def test_root_contract(self):
        for seed in (1, 2, 8):
            coeffs = linear_coeffs(make_scenario(seed=seed, sigma2=1e-4))
            out = solve_biquadratic(coeffs)
            lead, mid, const = coeffs.reduced_quadratic()
            for z in (out.z_plus, out.z_minus):
                residual = (lead * z + mid) * z + const
                scale = abs(lead * z * z) + abs(mid * z) + abs(const)
                assert abs(residual) < 1e-10 * scale

    def test_negative_discriminant_reported_not_raised(self):
        # the discriminant dips negative in a mid-noise band where the
        # expansion parameter exceeds one
        coeffs = linear_coeffs(make_scenario(seed=2, sigma2=2.6e6))
        out = solve_biquadratic(coeffs)
        assert out.discriminant < 0.0
        assert out.z_plus is None and out.z_minus is None
        assert out.positive_delta_roots() == ()

    def test_matches_quartic_pair(self, default_scenario):
        sc = default_scenario
        coeffs = linear_coeffs(sc)
        z_plus = solve_biquadratic(coeffs).z_plus
        quartic = solve_quartic(*coeffs.quartic())
        near, _, _ = quartic.symmetric_pair()
        assert abs(near.real) ** 2 == pytest.approx(z_plus, rel=1e-8)


class TestClosedFormArl:
    def test_equals_sqrt_z_plus(self):
        coeffs = linear_coeffs(make_scenario(seed=5, sigma2=1e-6))
        assert arl_closed_form(coeffs) == math.sqrt(solve_biquadratic(coeffs).z_plus)

    def test_vanishes_with_noise_and_scales_as_sigma(self):
        base = linear_coeffs(make_scenario(seed=5, sigma2=1e-6))
        values = [arl_closed_form(scale_noise(base, f)) for f in (1.0, 1e-2, 1e-4)]
        assert values[0] > values[1] > values[2] > 0.0
        # ARL / sigma approaches a constant
        assert values[1] / values[2] == pytest.approx(10.0, rel=1e-6)

    def test_negative_discriminant_raises(self):
        coeffs = linear_coeffs(make_scenario(seed=2, sigma2=2.6e6))
        with pytest.raises(NegativeDiscriminantError):
            arl_closed_form(coeffs)


class TestLowNoiseArl:
    def test_zero_at_zero_noise(self):
        coeffs = scale_noise(linear_coeffs(make_scenario(seed=5)), 0.0)
        assert arl_low_noise(coeffs) == 0.0

    def test_within_one_percent_in_regime(self):
        for seed in (1, 5, 12):
            base = linear_coeffs(make_scenario(seed=seed, sigma2=1.0))
            # place the expansion parameter just under the documented bound
            coeffs = scale_noise(base, 0.009 / expansion_parameter(base))
            assert expansion_parameter(coeffs) < 0.01
            closed = arl_closed_form(coeffs)
            assert abs(arl_low_noise(coeffs) - closed) / closed < 1e-2

    def test_exact_sigma_scaling_when_c2_negligible(self):
        base = linear_coeffs(make_scenario(seed=5, sigma2=1e-8))
        assert abs(base.c2) < 1e-6 * (base.beta * base.a0 - base.alpha0**2)
        ratio = arl_low_noise(scale_noise(base, 4.0)) / arl_low_noise(base)
        assert ratio == pytest.approx(2.0, rel=1e-3)


class TestSmithNumeric:
    def test_root_contract(self, default_scenario):
        tol = 1e-12
        root = smith_numeric(default_scenario, tol=tol)
        assert abs(crb_delta(default_scenario.with_delta(root)) - root**2) < tol * root**2

    def test_monotone_in_noise(self, default_scenario):
        low = smith_numeric(default_scenario.with_sigma2(1e-9))
        high = smith_numeric(default_scenario.with_sigma2(2e-9))
        assert high > low

    def test_agrees_with_closed_form(self, default_scenario):
        num_sensors = default_scenario.geometry.num_sensors
        closed = arl_closed_form(linear_coeffs(default_scenario))
        assert closed * (num_sensors - 1) < 0.1
        numeric = smith_numeric(default_scenario)
        assert abs(closed - numeric) / numeric < 0.05

    def test_no_sign_change_at_extreme_noise(self, default_scenario):
        with pytest.raises(NoSignChangeError):
            smith_numeric(default_scenario.with_sigma2(1e6))


class TestRootSelection:
    def test_selected_matches_closed_form(self, default_scenario):
        coeffs = linear_coeffs(default_scenario)
        quartic = solve_quartic(*coeffs.quartic())
        selected = select_arl_root(quartic, coeffs)
        assert abs(selected - arl_closed_form(coeffs)) / selected < 1e-8

    def test_spurious_root_is_noise_invariant(self, default_scenario):
        coeffs_hi = linear_coeffs(default_scenario.with_sigma2(1e-7))
        coeffs_lo = scale_noise(coeffs_hi, 1e-2)
        pos_hi = solve_quartic(*coeffs_hi.quartic()).positive_real_roots
        pos_lo = solve_quartic(*coeffs_lo.quartic()).positive_real_roots
        sel_hi = select_arl_root(solve_quartic(*coeffs_hi.quartic()), coeffs_hi)
        sel_lo = select_arl_root(solve_quartic(*coeffs_lo.quartic()), coeffs_lo)
        # the admissible root tracks sigma while the other one stays put
        assert sel_lo / sel_hi == pytest.approx(0.1, rel=1e-4)
        spur_hi = max(pos_hi)
        spur_lo = max(pos_lo)
        assert abs(spur_hi - spur_lo) / spur_hi < 1e-9

    def test_no_admissible_root_at_zero_noise(self):
        coeffs = scale_noise(linear_coeffs(make_scenario(seed=5)), 0.0)
        quartic = solve_quartic(*coeffs.quartic())
        with pytest.raises(NoAdmissibleRootError):
            select_arl_root(quartic, coeffs)

    def test_vieta_identities(self, default_scenario):
        coeffs = linear_coeffs(default_scenario)
        quartic = solve_quartic(*coeffs.quartic())
        g0, _, _, g3 = quartic.coefficients
        assert complex(np.sum(quartic.roots)) == pytest.approx(-g3, rel=1e-9)
        assert complex(np.prod(quartic.roots)) == pytest.approx(g0, rel=1e-9)


class TestComputeArl:
    def test_all_routes_positive_and_close(self, default_scenario):
        result = compute_arl(default_scenario)
        assert result.arl_closed > 0.0
        assert result.arl_low_noise > 0.0
        assert result.arl_numeric > 0.0
        assert result.selected_branch == "+"
        assert result.arl_closed == pytest.approx(result.arl_numeric, rel=0.05)
        assert result.arl_closed == pytest.approx(result.arl_low_noise, rel=1e-2)
