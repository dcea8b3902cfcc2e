import numpy as np
import pytest

from canoma.model import PowerSplit, SystemParams
from canoma.montecarlo import (
    McConfig,
    derive_point_seed,
    estimate_curve,
    estimate_outage,
    outage_events,
    stream_slices,
)
from canoma.outage import Scheme, outage_breakdown_analytic, union_outage_oma
from canoma.sampling import ChannelSampler, SamplerSeed

P20 = SystemParams(snr=100.0, beta=2.0, rate=2.0)
A02 = PowerSplit(0.2)


class TestConfig:
    def test_validation(self):
        McConfig(1)
        with pytest.raises(ValueError):
            McConfig(0)
        with pytest.raises(ValueError):
            McConfig(10, master_seed=-1)
        with pytest.raises(ValueError):
            McConfig(10, n_streams=0)

    def test_stream_slices(self):
        assert stream_slices(10, 1) == [(0, 10)]
        assert stream_slices(10, 3) == [(0, 4), (4, 3), (7, 3)]
        assert stream_slices(2, 4) == [(0, 1), (1, 1), (2, 0), (2, 0)]


class TestEstimate:
    def test_matches_closed_form_at_reference_point(self):
        bd = estimate_outage(P20, A02, Scheme.CA_NOMA, McConfig(1_000_000, 2024))
        assert abs(bd.p_union - 0.0396872536649896) <= 3 * bd.se_union
        assert bd.source == "empirical"

    def test_certain_outage_is_exact(self):
        for a in (0.25, 0.3, 0.9):
            bd = estimate_outage(P20, PowerSplit(a), Scheme.CA_NOMA, McConfig(10_000, 7))
            assert bd.p_union == 1.0
            assert bd.p_a21 == 1.0
            assert bd.se_union == 0.0

    def test_oma_matches_closed_form(self):
        bd = estimate_outage(P20, None, Scheme.OMA, McConfig(1_000_000, 99))
        assert abs(bd.p_union - union_outage_oma(P20)) <= 3 * bd.se_union
        assert bd.p_a21 == 0.0

    def test_union_dominates_marginals_exactly(self):
        rng = np.random.default_rng(61)
        for _ in range(20):
            p = SystemParams(snr=rng.uniform(1, 1e3), beta=rng.uniform(0.2, 5), rate=rng.uniform(0.5, 4))
            a = PowerSplit(rng.uniform(0.01, 0.99))
            scheme = rng.choice([Scheme.CA_NOMA, Scheme.NOMA])
            bd = estimate_outage(p, a, scheme, McConfig(5_000, int(rng.integers(1 << 32))))
            assert bd.p_union >= max(bd.p_a1, bd.p_a2, bd.p_a21)

    def test_rerun_is_identical(self):
        cfg = McConfig(50_000, 31337, n_streams=2)
        b1 = estimate_outage(P20, A02, Scheme.NOMA, cfg)
        b2 = estimate_outage(P20, A02, Scheme.NOMA, cfg)
        assert b1 == b2

    def test_counts_invariant_to_stream_count(self):
        reference = estimate_outage(P20, A02, Scheme.CA_NOMA, McConfig(100_001, 555, n_streams=1))
        for streams in (4, 16):
            got = estimate_outage(P20, A02, Scheme.CA_NOMA, McConfig(100_001, 555, n_streams=streams))
            assert got == reference

    def test_requires_power_split_for_noma(self):
        with pytest.raises(ValueError):
            estimate_outage(P20, None, Scheme.CA_NOMA, McConfig(10, 1))


class TestEventEvaluation:
    def test_capacity_and_threshold_routes_agree_per_draw(self):
        rng = np.random.default_rng(67)
        for _ in range(30):
            p = SystemParams(
                snr=rng.uniform(1, 1e4), beta=rng.uniform(0.1, 10), rate=rng.uniform(0.5, 5)
            )
            g1, g2 = ChannelSampler(p, SamplerSeed(int(rng.integers(1 << 32)))).sample_pairs(100_000)
            a = PowerSplit(rng.uniform(0.01, 0.99))
            for scheme in Scheme:
                split = None if scheme is Scheme.OMA else a
                by_capacity = outage_events(p, split, scheme, g1, g2, method="capacity")
                by_threshold = outage_events(p, split, scheme, g1, g2, method="threshold")
                for c, t in zip(by_capacity, by_threshold):
                    assert np.array_equal(c, t)

    def test_unknown_method_rejected(self):
        g1, g2 = ChannelSampler(P20, SamplerSeed(1)).sample_pairs(10)
        with pytest.raises(ValueError):
            outage_events(P20, A02, Scheme.CA_NOMA, g1, g2, method="nope")


class TestCurve:
    def test_rerun_identical(self):
        points = [(P20, PowerSplit(a)) for a in (0.05, 0.1, 0.2)]
        cfg = McConfig(5_000, 404, n_streams=2)
        assert estimate_curve(points, Scheme.CA_NOMA, cfg) == estimate_curve(
            points, Scheme.CA_NOMA, cfg
        )

    def test_point_seeds_make_rows_rederivable(self):
        points = [(P20, PowerSplit(a)) for a in (0.05, 0.1, 0.2)]
        cfg = McConfig(5_000, 404)
        curve = estimate_curve(points, Scheme.CA_NOMA, cfg)
        for i, (params, a) in enumerate(points):
            alone = estimate_outage(
                params, a, Scheme.CA_NOMA, McConfig(5_000, derive_point_seed(404, i))
            )
            assert alone == curve[i]

    def test_single_point_matches_estimate_outage(self):
        cfg = McConfig(2_000, 11)
        curve = estimate_curve([(P20, A02)], Scheme.CA_NOMA, cfg)
        direct = estimate_outage(P20, A02, Scheme.CA_NOMA, McConfig(2_000, derive_point_seed(11, 0)))
        assert curve == [direct]

    def test_empty_grid_rejected(self):
        with pytest.raises(ValueError):
            estimate_curve([], Scheme.CA_NOMA, McConfig(10, 1))

    def test_point_errors_carry_grid_index(self):
        points = [(P20, A02), (P20, None)]
        with pytest.raises(ValueError, match="grid point 1"):
            estimate_curve(points, Scheme.CA_NOMA, McConfig(10, 1))

    def test_curve_tracks_analytic_across_grid(self):
        grid = np.linspace(0.008, 0.248, 25)
        points = [(P20, PowerSplit(float(a))) for a in grid]
        curve = estimate_curve(points, Scheme.CA_NOMA, McConfig(20_000, 314))
        for (params, a), bd in zip(points, curve):
            truth = outage_breakdown_analytic(params, a, Scheme.CA_NOMA).p_union
            assert abs(bd.p_union - truth) <= max(3 * bd.se_union, 0.005)
