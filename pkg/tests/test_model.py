import math

import numpy as np
import pytest

from canoma.model import (
    INFEASIBLE,
    ChannelPair,
    PowerSplit,
    SystemParams,
    ca_noma_capacity_user1,
    ca_noma_capacity_user2,
    db_to_linear,
    oma_capacity,
    oma_gain_threshold,
    power_split_cap,
    sic_capacity,
    sic_feasible,
    sic_power_limit,
    threshold_b1,
    threshold_b2,
    threshold_b21,
)

P20 = SystemParams(snr=100.0, beta=2.0, rate=2.0)


def random_params(rng):
    return SystemParams(
        snr=rng.uniform(1.0, 1e4),
        beta=rng.uniform(0.1, 10.0),
        rate=rng.uniform(0.5, 5.0),
    )


class TestTypes:
    def test_from_db(self):
        assert SystemParams.from_db(20, 2, 2) == P20
        assert db_to_linear(0) == 1.0

    def test_rate_factor(self):
        assert P20.rate_factor == 3.0
        p = SystemParams(snr=1.0, beta=1.0, rate=0.5)
        assert p.rate_factor == pytest.approx(math.sqrt(2) - 1, rel=1e-15)

    @pytest.mark.parametrize("bad", [0.0, -1.0, math.inf, math.nan])
    def test_params_reject_bad_values(self, bad):
        for field in ("snr", "beta", "rate"):
            kwargs = {"snr": 1.0, "beta": 1.0, "rate": 1.0, field: bad}
            with pytest.raises(ValueError):
                SystemParams(**kwargs)

    @pytest.mark.parametrize("bad", [0.0, 1.0, -0.2, 1.5, math.nan, math.inf])
    def test_power_split_open_interval(self, bad):
        with pytest.raises(ValueError):
            PowerSplit(bad)
        PowerSplit(0.5)  # interior values are fine

    def test_channel_pair_ordering(self):
        ChannelPair(0.0, 0.0)  # ties allowed
        ChannelPair(1.0, 1.0)
        with pytest.raises(ValueError):
            ChannelPair(2.0, 1.0)
        with pytest.raises(ValueError):
            ChannelPair(-1.0, 1.0)
        with pytest.raises(ValueError):
            ChannelPair(0.0, math.inf)


class TestCapacities:
    def test_oma_known_values(self):
        assert oma_capacity(P20, 0.0) == 0.0
        # 0.15 is the boundary gain where the half-slot link carries rate 2
        assert oma_capacity(P20, 0.15) == pytest.approx(2.0, rel=1e-12)
        assert oma_capacity(P20, 0.03) == pytest.approx(1.0, rel=1e-12)

    def test_user1_known_values(self):
        a = PowerSplit(0.2)
        assert ca_noma_capacity_user1(P20, PowerSplit(0.5), 0.0) == 0.0
        assert ca_noma_capacity_user1(P20, a, 0.0375) == pytest.approx(2.0, rel=1e-12)
        assert ca_noma_capacity_user1(P20, a, 0.075) == pytest.approx(2.8073549220576, rel=1e-12)

    def test_user2_known_values(self):
        assert ca_noma_capacity_user2(P20, PowerSplit(0.2), 0.15) == pytest.approx(2.0, rel=1e-12)
        assert ca_noma_capacity_user2(P20, PowerSplit(0.7), 0.0) == 0.0
        assert ca_noma_capacity_user2(P20, PowerSplit(0.5), 0.06) == pytest.approx(2.0, rel=1e-12)

    def test_sic_known_values(self):
        a = PowerSplit(0.2)
        assert sic_capacity(P20, a, 0.0) == 0.0
        assert sic_capacity(P20, a, 0.75) == pytest.approx(2.24792751344359, rel=1e-12)
        # saturates at log2(1/a) for huge gains
        assert sic_capacity(P20, a, 1e12) == pytest.approx(2.32192809488736, rel=1e-6)

    def test_capacities_reject_bad_gains(self):
        a = PowerSplit(0.3)
        for fn in (
            lambda g: oma_capacity(P20, g),
            lambda g: ca_noma_capacity_user1(P20, a, g),
            lambda g: ca_noma_capacity_user2(P20, a, g),
            lambda g: sic_capacity(P20, a, g),
        ):
            with pytest.raises(ValueError):
                fn(-0.1)
            with pytest.raises(ValueError):
                fn(math.nan)
            with pytest.raises(ValueError):
                fn(math.inf)

    def test_array_inputs_match_scalars(self):
        a = PowerSplit(0.2)
        gains = np.array([0.0, 0.0375, 0.15, 0.75])
        batch = sic_capacity(P20, a, gains)
        assert batch.shape == gains.shape
        for g, c in zip(gains, batch):
            assert sic_capacity(P20, a, float(g)) == c

    def test_oma_strictly_increasing(self):
        gains = np.linspace(0.0, 5.0, 200)
        caps = oma_capacity(P20, gains)
        assert np.all(np.diff(caps) > 0)

    def test_interference_strictly_reduces_capacity(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            p = random_params(rng)
            a = PowerSplit(rng.uniform(0.01, 0.99))
            g = rng.uniform(1e-6, 50.0)
            assert sic_capacity(p, a, g) < ca_noma_capacity_user1(p, a, g)


class TestThresholds:
    def test_known_values(self):
        a = PowerSplit(0.2)
        assert threshold_b1(P20, a) == pytest.approx(0.0375, rel=1e-12)
        assert threshold_b2(P20, a) == pytest.approx(0.15, rel=1e-12)
        assert threshold_b21(P20, a) == pytest.approx(0.15, rel=1e-12)
        a = PowerSplit(0.1)
        assert threshold_b2(P20, a) == pytest.approx(0.3, rel=1e-12)
        assert threshold_b21(P20, a) == pytest.approx(0.05, rel=1e-12)

    def test_infeasible_at_and_above_limit(self):
        assert threshold_b21(P20, PowerSplit(0.25)) == INFEASIBLE
        assert threshold_b21(P20, PowerSplit(0.26)) == INFEASIBLE
        assert not sic_feasible(P20, PowerSplit(0.25))
        assert sic_feasible(P20, PowerSplit(0.24))

    def test_capacity_at_threshold_equals_rate(self):
        rng = np.random.default_rng(11)
        for _ in range(300):
            p = random_params(rng)
            a = PowerSplit(rng.uniform(0.01, 0.99))
            assert ca_noma_capacity_user1(p, a, threshold_b1(p, a)) == pytest.approx(
                p.rate, rel=1e-12
            )
            assert ca_noma_capacity_user2(p, a, threshold_b2(p, a)) == pytest.approx(
                p.rate, rel=1e-12
            )
            b21 = threshold_b21(p, a)
            if math.isfinite(b21):
                assert sic_capacity(p, a, b21) == pytest.approx(p.rate, rel=1e-12)
            assert oma_capacity(p, oma_gain_threshold(p)) == pytest.approx(p.rate, rel=1e-12)

    def test_b2_decreasing_b21_increasing(self):
        rng = np.random.default_rng(13)
        for _ in range(100):
            p = random_params(rng)
            limit = sic_power_limit(p)
            grid = np.linspace(0.01 * limit, 0.99 * limit, 50)
            b2s = [threshold_b2(p, PowerSplit(float(a))) for a in grid]
            b21s = [threshold_b21(p, PowerSplit(float(a))) for a in grid]
            assert np.all(np.diff(b2s) < 0)
            assert np.all(np.diff(b21s) > 0)

    def test_thresholds_coincide_at_cap(self):
        rng = np.random.default_rng(17)
        for _ in range(300):
            p = random_params(rng)
            cap = PowerSplit(power_split_cap(p))
            meeting = oma_gain_threshold(p)
            assert threshold_b2(p, cap) == pytest.approx(meeting, rel=1e-12)
            assert threshold_b21(p, cap) == pytest.approx(meeting, rel=1e-12)

    def test_threshold_ordering_below_cap(self):
        # b21 <= (4**rate - 1)/snr <= b2 for every split at or below the cap
        rng = np.random.default_rng(19)
        for _ in range(500):
            p = random_params(rng)
            cap = power_split_cap(p)
            a = PowerSplit(rng.uniform(1e-6, cap))
            mid = oma_gain_threshold(p)
            assert threshold_b21(p, a) <= mid * (1 + 1e-12)
            assert mid <= threshold_b2(p, a) * (1 + 1e-12)
