import numpy as np
import pytest

from arlkit.config import ExperimentConfig, build_scenario, default_delta_max, inv_sigma2_grid, parse_config
from arlkit.sweep import CSV_HEADER, records_to_csv, run_sweep, sweep_point, write_csv

EXPECTED_HEADER = ("inv_sigma2,sigma2,arl_closed,arl_low_noise,arl_numeric,"
                   "root_R_1,root_R_2,root_R_3,root_R_4,root_Rp_1,root_Rp_2,"
                   "discriminant,status")

SMALL = parse_config("sweep.num_points = 6\n")


class TestCsvFormat:
    def test_header_is_bit_exact(self):
        assert CSV_HEADER == EXPECTED_HEADER

    def test_row_count_matches_grid(self, default_records):
        text = records_to_csv(default_records)
        lines = text.splitlines()
        assert lines[0] == EXPECTED_HEADER
        assert len(lines) == 1 + 50

    def test_absent_roots_serialize_empty(self):
        records = run_sweep(SMALL)
        text = records_to_csv(records)
        row = text.splitlines()[1].split(",")
        assert len(row) == 13
        assert row[7] == "" and row[8] == ""  # only two positive quartic roots

    def test_lf_only_and_utf8(self, tmp_path):
        path = tmp_path / "out.csv"
        write_csv(run_sweep(SMALL), path)
        raw = path.read_bytes()
        assert b"\r" not in raw
        raw.decode("utf-8")

    def test_full_precision_round_trip(self):
        records = run_sweep(SMALL)
        row = records_to_csv(records).splitlines()[1].split(",")
        assert float(row[2]) == records[0].arl_closed

    def test_empty_records_rejected(self):
        with pytest.raises(ValueError):
            records_to_csv([])


class TestSweepSemantics:
    def test_ascending_grid_order(self, default_records):
        invs = [r.inv_sigma2 for r in default_records]
        assert invs == sorted(invs)

    def test_deterministic_across_runs(self):
        a = records_to_csv(run_sweep(SMALL))
        b = records_to_csv(run_sweep(SMALL))
        assert a == b

    def test_point_order_independence(self):
        scenario = build_scenario(SMALL)
        delta_max = default_delta_max(SMALL)
        grid = list(inv_sigma2_grid(SMALL))
        in_order = [sweep_point(scenario, float(g), delta_max, SMALL.solver.tol)
                    for g in grid]
        shuffled_idx = [3, 0, 5, 1, 4, 2]
        shuffled = {i: sweep_point(scenario, float(grid[i]), delta_max, SMALL.solver.tol)
                    for i in shuffled_idx}
        for i, record in enumerate(in_order):
            assert shuffled[i] == record

    def test_all_default_points_ok(self, default_records):
        assert all(r.status == "ok" for r in default_records)

    def test_arl_closed_nonincreasing(self, default_records):
        arl = [r.arl_closed for r in default_records]
        assert all(b <= a for a, b in zip(arl, arl[1:]))

    def test_exactly_one_flat_positive_quartic_root(self, default_records):
        columns = np.array([r.roots_r for r in default_records])
        variation = (columns.max(axis=0) - columns.min(axis=0)) / columns.min(axis=0)
        assert int(np.sum(variation < 1e-6)) == 1

    def test_negative_discriminant_band_recorded(self):
        # the noise band where the reduced quadratic loses its real roots
        config = parse_config(
            "sweep.inv_sigma2_start = 1e-7\nsweep.inv_sigma2_stop = 1e-5\n"
            "sweep.num_points = 4\n")
        records = run_sweep(config)
        assert len(records) == 4
        assert all(r.status == "negative_discriminant" for r in records)
        for r in records:
            assert r.arl_closed is None
            assert r.discriminant is not None and r.discriminant < 0.0
            assert r.roots_rp == ()

    def test_out_of_scan_range_recorded_and_sweep_continues(self):
        # first point: closed form feasible but the exact-Smith root exceeds
        # the scan limit; already-computed fields stay in the record and the
        # sweep carries on to the next (feasible) point
        config = parse_config(
            "sweep.inv_sigma2_start = 1e-4\nsweep.inv_sigma2_stop = 1e-3\n"
            "sweep.num_points = 2\n")
        first, second = run_sweep(config)
        assert first.status == "no_sign_change"
        assert first.arl_closed is not None and first.arl_numeric is None
        assert second.status == "ok"
        assert second.arl_numeric is not None
