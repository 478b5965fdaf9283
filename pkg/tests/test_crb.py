import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arlkit.crb import beta_factor, crb_closed_form, crb_delta, spectral_sums
from arlkit.errors import DegenerateQError
from arlkit.fim import crb_delta_numeric, crb_numeric, fim_slepian_bangs

from conftest import make_scenario


def mpmath_spectral_sums(num_sensors, h, delta, phi):
    """30-digit evaluation of zeta and eta by brute-force complex summation."""
    import mpmath as mp

    with mp.workdps(30):
        hc = mp.mpc(h.real, h.imag)
        zeta = mp.mpf(0)
        eta = mp.mpf(0)
        for l in range(num_sensors):
            term = mp.expjpi((mp.mpf(delta) * l + mp.mpf(phi) * l * l) / mp.pi)
            zeta += (hc * l**2 * term).real
            eta += (hc * l**3 * term).real
        return float(zeta), float(eta)


class TestSpectralSums:
    def test_moment_sums_reference(self):
        sums = spectral_sums(make_scenario(num_sensors=10))
        assert (sums.l1, sums.l2, sums.l3, sums.l4) == (45.0, 285.0, 2025.0, 15333.0)

    def test_unit_coupling_collapse(self):
        # delta = 0, phi = 0, h = 1: phases collapse and the sums become moments
        sc = make_scenario(num_sensors=10, delta=0.0, phi=0.0, s1=[1.0], s2=[1.0])
        sums = spectral_sums(sc)
        assert sums.h == 1.0
        assert sums.zeta == pytest.approx(285.0, rel=1e-15)
        assert sums.eta == pytest.approx(2025.0, rel=1e-15)

    def test_matches_high_precision_summation(self):
        for seed in (1, 5, 9):
            sc = make_scenario(seed=seed, num_sensors=12, delta=0.37, phi=0.11)
            sums = spectral_sums(sc)
            zeta_hp, eta_hp = mpmath_spectral_sums(12, sums.h, 0.37, 0.11)
            assert sums.zeta == pytest.approx(zeta_hp, rel=1e-12)
            assert sums.eta == pytest.approx(eta_hp, rel=1e-12)


class TestClosedForm:
    def test_orthogonal_signals_decouple(self):
        sc = make_scenario(num_sensors=10, s1=[1.0, 1.0], s2=[3.0, -3.0], sigma2=0.5)
        assert sc.signals.cross == 0.0
        out = crb_closed_form(sc)
        energy1 = sc.signals.energy1
        assert out.crb_omega1 == pytest.approx(0.5 * 0.5 / (285.0 * energy1), rel=1e-14)
        assert out.crb_cross == 0.0

    def test_matches_numeric_inverse(self):
        for seed in range(6):
            sc = make_scenario(seed=seed)
            closed = crb_closed_form(sc)
            numeric = crb_numeric(fim_slepian_bangs(sc))
            assert closed.crb_omega1 == pytest.approx(numeric.crb_omega1, rel=1e-11)
            assert closed.crb_omega2 == pytest.approx(numeric.crb_omega2, rel=1e-11)
            assert closed.crb_cross == pytest.approx(numeric.crb_cross_12, rel=1e-10)

    def test_default_scenario_regression(self, default_scenario):
        # frozen after validating against the inverted-Fisher oracle (rel ~1e-15)
        out = crb_closed_form(default_scenario)
        assert default_scenario.sigma2 == 1e-8
        assert out.crb_omega1 == pytest.approx(1.7544180358708787e-13, rel=1e-12)
        assert out.crb_omega2 == pytest.approx(2.8470885742711819e-14, rel=1e-12)
        assert out.crb_cross == pytest.approx(3.0213663946350554e-16, rel=1e-12)
        assert out.crb_delta == pytest.approx(2.0330841605087269e-13, rel=1e-12)

    def test_zero_curved_energy_degenerate(self):
        sc = make_scenario(s1=[1.0], s2=[0.0])
        with pytest.raises(DegenerateQError):
            crb_closed_form(sc)

    def test_linearity_in_sigma2_exact(self):
        sc = make_scenario(seed=3, sigma2=0.125)
        assert crb_delta(sc.with_sigma2(0.25)) == 2.0 * crb_delta(sc)

    @given(st.integers(min_value=3, max_value=64))
    @settings(max_examples=40)
    def test_beta_positive(self, num_sensors):
        sc = make_scenario(num_sensors=num_sensors, s1=[1.0], s2=[1.0])
        assert beta_factor(sc) > 0.0

    def test_beta_degenerates_at_two_sensors(self):
        # L = 2 leaves a single nonzero index, so L2*L4 = L3^2 exactly
        assert beta_factor(make_scenario(num_sensors=2, s1=[1.0], s2=[1.0])) == 0.0


class TestCrbDelta:
    def test_orthogonal_signals_sum(self):
        sc = make_scenario(num_sensors=8, s1=[1.0, 1.0], s2=[2.0, -2.0])
        out = crb_closed_form(sc)
        assert out.crb_delta == out.crb_omega1 + out.crb_omega2

    def test_quadratic_form_oracle(self):
        for seed in (0, 4, 8):
            sc = make_scenario(seed=seed)
            expected = crb_delta_numeric(fim_slepian_bangs(sc))
            assert crb_delta(sc) == pytest.approx(expected, rel=1e-9)

    def test_even_for_real_coupling_without_curvature(self):
        # with h real and phi = 0 the spectral sums are even in delta
        sc = make_scenario(phi=0.0, s1=[1.0, 1j], s2=[2.0, 2j], delta=0.31)
        assert np.imag(sc.signals.cross) == 0.0
        plus = crb_delta(sc)
        minus = crb_delta(sc.with_delta(-0.31))
        assert abs(plus - minus) < 1e-12 * plus

    def test_conjugate_symmetry(self):
        # the exact reflection symmetry: (delta, phi, h) -> (-delta, -phi, conj(h))
        import dataclasses

        from arlkit.array_model import SourceSignals

        sc = make_scenario(seed=17, delta=0.23, phi=0.07)
        mirrored = dataclasses.replace(
            sc.with_delta(-0.23),
            electrical=dataclasses.replace(sc.electrical, delta=-0.23, phi=-0.07),
            signals=SourceSignals(s1=np.conj(sc.signals.s1), s2=np.conj(sc.signals.s2)),
        )
        assert crb_delta(mirrored) == pytest.approx(crb_delta(sc), rel=1e-13)

    def test_not_even_for_complex_coupling(self):
        # with complex h (or phi != 0) the bound is not symmetric in the
        # separation alone; the near +/- root pairing downstream is an
        # approximation, not an identity
        sc = make_scenario(seed=17, delta=1e-3, phi=0.07)
        plus = crb_delta(sc)
        minus = crb_delta(sc.with_delta(-1e-3))
        assert abs(plus - minus) > 1e-9 * plus

    def test_positive(self):
        for seed in range(5):
            assert crb_delta(make_scenario(seed=seed)) > 0.0
