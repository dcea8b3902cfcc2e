"""Seeded Monte Carlo estimation of outage probabilities.

Each estimate draws ordered gain pairs and tests the scheme's rate conditions
by evaluating the capacities directly against the QoS rate (not by comparing
gains to precomputed thresholds), so the simulation independently validates
the threshold algebra used by the closed forms.

Determinism contract: a run is a single logical sample sequence fixed by
``master_seed``; ``n_streams`` only partitions that sequence into contiguous
slices (even split, remainder on the lowest stream indices), each produced by
a sampler skipped ahead to its slice start.  Counts are therefore invariant
to the stream count and to execution order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .model import (
    PowerSplit,
    SystemParams,
    ca_noma_capacity_user1,
    ca_noma_capacity_user2,
    oma_capacity,
    oma_gain_threshold,
    sic_capacity,
    threshold_b1,
    threshold_b2,
    threshold_b21,
)
from .outage import OutageBreakdown, Scheme
from .sampling import ChannelSampler, SamplerSeed

__all__ = [
    "McConfig",
    "estimate_outage",
    "estimate_curve",
    "outage_events",
    "stream_slices",
    "derive_point_seed",
]

_BATCH_PAIRS = 1 << 19  # cap per-chunk memory; chunking never moves draw positions


@dataclass(frozen=True)
class McConfig:
    """Sample count, master seed, and parallel decomposition of one estimate."""

    n_samples: int
    master_seed: int = 12345
    n_streams: int = 1

    def __post_init__(self):
        if self.n_samples < 1:
            raise ValueError("n_samples must be at least 1")
        if not (0 <= self.master_seed < 2**64):
            raise ValueError("master_seed must be a 64-bit unsigned integer")
        if self.n_streams < 1:
            raise ValueError("n_streams must be at least 1")


def stream_slices(n_samples: int, n_streams: int) -> list[tuple[int, int]]:
    """(start, count) per stream: even split, remainder on the lowest indices."""
    base, rem = divmod(n_samples, n_streams)
    slices = []
    start = 0
    for k in range(n_streams):
        count = base + (1 if k < rem else 0)
        slices.append((start, count))
        start += count
    return slices


def derive_point_seed(master_seed: int, point_index: int) -> int:
    """Per-point seed for grid sweeps, usable directly as a master seed."""
    ss = np.random.SeedSequence((master_seed, point_index))
    return int(ss.generate_state(1, np.uint64)[0])


def outage_events(
    p: SystemParams,
    a: PowerSplit | None,
    scheme: Scheme,
    g1: np.ndarray,
    g2: np.ndarray,
    method: str = "capacity",
):
    """Per-draw outage indicators (weak-rate, strong-rate, SIC) for a scheme.

    ``method="capacity"`` compares achieved capacities against the QoS rate;
    ``method="threshold"`` compares gains against the closed-form thresholds.
    The two must agree draw for draw.
    """
    if scheme is not Scheme.OMA and a is None:
        raise ValueError(f"scheme {scheme.value} requires a power split")
    r = p.rate
    if method == "capacity":
        if scheme is Scheme.OMA:
            out1 = oma_capacity(p, g1) < r
            out2 = oma_capacity(p, g2) < r
            out21 = np.zeros_like(out1)
        elif scheme is Scheme.CA_NOMA:
            out1 = ca_noma_capacity_user1(p, a, g1) < r
            out2 = ca_noma_capacity_user2(p, a, g2) < r
            out21 = sic_capacity(p, a, g2) < r
        elif scheme is Scheme.NOMA:
            out1 = sic_capacity(p, a, g1) < r  # weak user decodes under interference
            out2 = ca_noma_capacity_user2(p, a, g2) < r
            out21 = sic_capacity(p, a, g2) < r
        else:
            raise ValueError(f"unknown scheme: {scheme!r}")
    elif method == "threshold":
        if scheme is Scheme.OMA:
            t = oma_gain_threshold(p)
            out1 = g1 < t
            out2 = g2 < t
            out21 = np.zeros_like(out1)
        else:
            b21 = threshold_b21(p, a)
            out1 = g1 < (threshold_b1(p, a) if scheme is Scheme.CA_NOMA else b21)
            out2 = g2 < threshold_b2(p, a)
            out21 = g2 < b21
    else:
        raise ValueError(f"unknown method: {method!r}")
    return out1, out2, out21


def estimate_outage(
    p: SystemParams, a: PowerSplit | None, scheme: Scheme, cfg: McConfig
) -> OutageBreakdown:
    """Empirical outage breakdown over cfg.n_samples ordered pairs."""
    c_a1 = c_a2 = c_a21 = c_union = 0
    for start, count in stream_slices(cfg.n_samples, cfg.n_streams):
        if count == 0:
            continue
        sampler = ChannelSampler(p, SamplerSeed(cfg.master_seed, 0))
        sampler.skip(start)
        remaining = count
        while remaining > 0:
            chunk = min(remaining, _BATCH_PAIRS)
            g1, g2 = sampler.sample_pairs(chunk)
            out1, out2, out21 = outage_events(p, a, scheme, g1, g2)
            c_a1 += int(out1.sum())
            c_a2 += int(out2.sum())
            c_a21 += int(out21.sum())
            c_union += int((out1 | out2 | out21).sum())
            remaining -= chunk
    n = cfg.n_samples
    p_union = c_union / n
    return OutageBreakdown(
        p_a1=c_a1 / n,
        p_a2=c_a2 / n,
        p_a21=c_a21 / n,
        p_union=p_union,
        source="empirical",
        se_union=math.sqrt(p_union * (1.0 - p_union) / n),
    )


def estimate_curve(
    points: Sequence[tuple[SystemParams, PowerSplit | None]],
    scheme: Scheme,
    cfg: McConfig,
) -> list[OutageBreakdown]:
    """One estimate per grid point, each under its own derived seed.

    Point ``i`` runs with master seed ``derive_point_seed(cfg.master_seed, i)``,
    so the curve is reproducible point by point regardless of evaluation
    order, and every point can be re-derived in isolation.
    """
    if len(points) == 0:
        raise ValueError("grid must be non-empty")
    results = []
    for i, (params, a) in enumerate(points):
        point_cfg = McConfig(
            n_samples=cfg.n_samples,
            master_seed=derive_point_seed(cfg.master_seed, i),
            n_streams=cfg.n_streams,
        )
        try:
            results.append(estimate_outage(params, a, scheme, point_cfg))
        except ValueError as err:
            raise ValueError(f"grid point {i}: {err}") from err
    return results
