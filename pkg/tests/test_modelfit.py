import math
from fractions import Fraction

import numpy as np
import pytest

import trigauge as tg
from trigauge.modelfit import (
    beta_fraction_label,
    default_min_edges,
    emit_fit_table,
    fit_table_csv,
    plot_data_csv,
)


def line_points(n1, beta, edge_counts):
    return [(ne, (ne / n1) ** beta) for ne in edge_counts]


class TestSnapBeta:
    def test_candidates_snap_to_themselves(self):
        for cand in tg.BETA_CANDIDATES:
            assert tg.snap_beta(float(cand)) == cand

    def test_raw_115_snaps_to_one(self):
        # |1.15 - 1| = 0.15 < |1.15 - 4/3| ~= 0.183
        assert tg.snap_beta(1.15) == Fraction(1)

    def test_ties_resolve_to_smaller_candidate(self):
        # No exact float tie exists at the candidate midpoints, so the rule is
        # structural: candidates are scanned ascending and only a strictly
        # smaller distance replaces the incumbent. Values an ulp below each
        # midpoint must take the smaller side, an ulp above the larger.
        cands = [Fraction(1, 2), Fraction(2, 3), Fraction(1), Fraction(4, 3), Fraction(3, 2)]
        for a, b in zip(cands, cands[1:]):
            mid = float((a + b) / 2)
            assert tg.snap_beta(math.nextafter(mid, 0.0)) == a
            assert tg.snap_beta(math.nextafter(mid, 2.0)) == b
        # and a value at exactly equal *computed* distances keeps the smaller
        assert tg.snap_beta(1.0) == Fraction(1)

    def test_extremes_clamp_to_end_candidates(self):
        assert tg.snap_beta(0.01) == Fraction(1, 2)
        assert tg.snap_beta(9.0) == Fraction(3, 2)

    def test_fraction_labels(self):
        assert beta_fraction_label(1.0) == "1"
        assert beta_fraction_label(4 / 3) == "4/3"
        assert beta_fraction_label(0.5) == "1/2"
        assert beta_fraction_label(1.5) == "3/2"
        assert beta_fraction_label(2 / 3) == "2/3"


class TestFitLogLog:
    def test_recovers_2018_line_exactly(self):
        pts = line_points(1e9, 1.0, [1e6, 1e7, 1e8])
        fit = tg.fit_loglog(pts, min_edges=0)
        assert fit.beta_snapped == 1.0
        assert abs(fit.n1 - 1e9) / 1e9 < 1e-9
        assert fit.n_points == 3
        assert fit.residual_rms < 1e-12

    def test_recovers_2017_line_exactly(self):
        pts = line_points(1e8, 4 / 3, [1e7, 1e8, 1e9])
        fit = tg.fit_loglog(pts, min_edges=0)
        assert fit.beta_snapped == 4 / 3
        assert abs(fit.n1 - 1e8) / 1e8 < 1e-9

    def test_raw_beta_reported_next_to_snap(self):
        pts = [(1e6, 1.0), (1e8, 10.0 ** (2 * 1.15))]  # slope exactly 1.15
        fit = tg.fit_loglog(pts, min_edges=0)
        assert abs(fit.beta - 1.15) < 1e-9
        assert fit.beta_snapped == 1.0

    def test_min_edges_filters_low_region(self):
        pts = line_points(1e9, 1.0, [1e4, 1e6, 1e7, 1e8])
        pts[0] = (1e4, 500.0)  # corrupt a point below the threshold
        fit = tg.fit_loglog(pts, min_edges=1e6)
        assert fit.beta_snapped == 1.0
        assert fit.n_points == 3
        assert fit.fit_min_edges == 1e6
        assert fit.max_edges == 1e8

    def test_default_threshold_rule(self):
        assert default_min_edges(1e9) == 1e8
        assert default_min_edges(1e6) == 1e6  # floor at 1e6

    def test_degenerate_single_point(self):
        with pytest.raises(tg.DegenerateFitError):
            tg.fit_loglog([(1e7, 1.0)], min_edges=0)

    def test_degenerate_equal_edge_counts(self):
        with pytest.raises(tg.DegenerateFitError):
            tg.fit_loglog([(1e7, 1.0), (1e7, 2.0)], min_edges=0)

    def test_degenerate_after_filtering(self):
        with pytest.raises(tg.DegenerateFitError):
            tg.fit_loglog([(10.0, 1.0), (20.0, 2.0)], min_edges=1e6)

    def test_nonpositive_time_rejected(self):
        with pytest.raises(ValueError, match="positive"):
            tg.fit_loglog([(1e7, 0.0), (1e8, 1.0)], min_edges=0)
        with pytest.raises(ValueError, match="positive"):
            tg.fit_loglog([(1e7, -1.0), (1e8, 1.0)], min_edges=0)

    def test_noise_trials_snap_correctly(self):
        edge_counts = [1e6, 3e6, 1e7, 3e7, 1e8, 3e8, 1e9]
        ok = 0
        trials = 100
        for trial in range(trials):
            rng = np.random.default_rng(trial)
            pts = [
                (ne, (ne / 1e9) ** 1.0 * math.exp(rng.normal(0.0, 0.05)))
                for ne in edge_counts
            ]
            fit = tg.fit_loglog(pts, min_edges=0)
            ok += fit.beta_snapped == 1.0
        assert ok >= 95

    def test_scale_equivariance(self):
        pts = line_points(1e9, 1.0, [1e6, 1e7, 1e8])
        base = tg.fit_loglog(pts, min_edges=0)
        for c in (0.5, 3.0, 100.0):
            scaled = tg.fit_loglog([(ne, t * c) for ne, t in pts], min_edges=0)
            assert scaled.beta_snapped == base.beta_snapped
            expected_n1 = base.n1 / c ** (1.0 / base.beta_snapped)
            assert abs(scaled.n1 - expected_n1) / expected_n1 < 1e-9


class TestPiecewise:
    def test_two_regimes_recovered(self):
        low = line_points(1e5, 0.5, [1e3, 1e4, 1e5])
        high = line_points(1e9, 4 / 3, [1e7, 1e8, 1e9])
        lo_fit, hi_fit = tg.fit_piecewise(low + high, breakpoint=1e6)
        assert lo_fit.beta_snapped == 0.5
        assert hi_fit.beta_snapped == 4 / 3
        assert abs(lo_fit.n1 - 1e5) / 1e5 < 1e-9
        assert abs(hi_fit.n1 - 1e9) / 1e9 < 1e-9


class TestEvaluateModel:
    def test_sota_lines_at_their_n1(self):
        assert tg.evaluate_model(tg.SOTA_2018, 1e9) == 1.0
        assert tg.evaluate_model(tg.SOTA_2017, 1e8) == 1.0

    def test_sota_2018_is_linear(self):
        assert tg.evaluate_model(tg.SOTA_2018, 2e9) == 2.0
        assert tg.evaluate_model(tg.SOTA_2018, 1e6) == pytest.approx(1e-3)

    def test_fit_at_own_n1_is_one_second(self):
        fit = tg.fit_loglog(line_points(1e9, 1.0, [1e6, 1e7, 1e8]), min_edges=0)
        assert tg.evaluate_model(fit, fit.n1) == pytest.approx(1.0, rel=1e-12)

    def test_strictly_increasing(self):
        for model in (tg.SOTA_2017, tg.SOTA_2018):
            values = [tg.evaluate_model(model, ne) for ne in np.logspace(3, 12, 40)]
            assert all(b > a for a, b in zip(values, values[1:]))

    def test_nonpositive_edges_rejected(self):
        with pytest.raises(ValueError):
            tg.evaluate_model(tg.SOTA_2018, 0)


def _record(graph_id, n_edges, t):
    return tg.BenchRecord(
        graph_id=graph_id,
        n_edges=n_edges,
        algorithm="adj2",
        t_tri_seconds=t,
        rate_eps=n_edges / t,
        repetitions=1,
        triangle_count=0,
        timestamp="2026-01-01T00:00:00+00:00",
    )


class TestCompareSota:
    def test_on_the_2018_line(self):
        rows = tg.compare_sota([_record("a", 10**9, 1.0)])
        assert rows[0].ratio_2018 == 1.0

    def test_twice_as_slow(self):
        rows = tg.compare_sota([_record("a", 10**9, 2.0)])
        assert rows[0].ratio_2018 == 0.5

    def test_beating_2017(self):
        rows = tg.compare_sota([_record("a", 10**8, 0.5)])
        assert rows[0].ratio_2017 == 2.0

    def test_sorted_by_edges(self):
        rows = tg.compare_sota([_record("big", 10**8, 1.0), _record("small", 10**4, 1.0)])
        assert [r.graph_id for r in rows] == ["small", "big"]

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            tg.compare_sota([])


class TestTables:
    def test_table_rows_match_published_precision(self):
        fits = {
            "bisson-like": tg.ModelFit(
                n1=3.2e8, beta=1.02, beta_snapped=1.0, fit_min_edges=1e6,
                residual_rms=0.01, n_points=9, max_edges=1.8e9,
            ),
            "pearce-like": tg.ModelFit(
                n1=5.4e5, beta=0.51, beta_snapped=0.5, fit_min_edges=1e6,
                residual_rms=0.02, n_points=7, max_edges=1.1e12,
            ),
        }
        table = emit_fit_table(fits)
        lines = table.splitlines()
        assert lines[0].split() == ["submission", "max_Ne", "N1", "beta"]
        assert lines[1].split() == ["bisson-like", "1.8e9", "3e8", "1"]
        assert lines[2].split() == ["pearce-like", "1.1e12", "5e5", "1/2"]

    def test_one_significant_digit_rounding(self):
        fit = tg.ModelFit(
            n1=9.7e7, beta=1.0, beta_snapped=1.0, fit_min_edges=0,
            residual_rms=0, n_points=2, max_edges=9.96e7,
        )
        table = emit_fit_table({"x": fit})
        assert "1e8" in table  # 9.7e7 rounds up a decade at one digit
        assert "1.0e8" in table

    def test_empty_mapping_rejected(self):
        with pytest.raises(ValueError):
            emit_fit_table({})
        with pytest.raises(ValueError):
            fit_table_csv({})

    def test_csv_table_full_precision(self):
        fit = tg.fit_loglog(line_points(1e9, 1.0, [1e6, 1e7, 1e8]), min_edges=0)
        text = fit_table_csv({"adj2": fit})
        header, row = text.splitlines()
        cols = dict(zip(header.split(","), row.split(",")))
        assert cols["submission"] == "adj2"
        assert float(cols["n1"]) == fit.n1
        assert cols["beta_fraction"] == "1"
        assert int(cols["n_points"]) == 3


class TestPlotData:
    def test_columns_and_reference_lines(self):
        fit = tg.fit_loglog(line_points(1e9, 1.0, [1e6, 1e7, 1e8]), min_edges=0)
        recs = [_record("a", 10**8, 0.1), _record("b", 10**9, 1.0)]
        text = plot_data_csv({"adj2": (recs, fit)})
        lines = text.splitlines()
        assert lines[0] == "group,n_edges,t_observed,t_model,t_sota2017,t_sota2018"
        first = lines[1].split(",")
        assert first[0] == "adj2"
        assert int(first[1]) == 10**8
        assert float(first[4]) == 1.0  # 2017 line is exactly 1 s at 1e8 edges
        assert float(first[5]) == 0.1
        second = lines[2].split(",")
        assert float(second[5]) == 1.0  # 2018 line at 1e9 edges
