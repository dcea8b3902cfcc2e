"""Closed-form outage probabilities for the three multiple-access schemes.

Union outage is the probability that at least one required rate condition
falls below the QoS rate: the weak user's own rate, the strong user's own
rate, and (for the NOMA schemes) the strong user's SIC decoding rate.  All
probabilities below are exact expressions over the ordered exponential pair,
evaluated through cancellation-free expm1 forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .model import (
    PowerSplit,
    SystemParams,
    oma_gain_threshold,
    power_split_cap,
    sic_power_limit,
    threshold_b1,
    threshold_b2,
    threshold_b21,
)
from .sampling import ordered_pair_outage

__all__ = [
    "Scheme",
    "OutageBreakdown",
    "union_outage_ca_noma",
    "union_outage_noma",
    "union_outage_oma",
    "outage_breakdown_analytic",
    "weak_user_outage_marginal",
    "strong_user_outage_marginal",
]


class Scheme(Enum):
    """Multiple-access scheme under evaluation."""

    CA_NOMA = "ca_noma"
    NOMA = "noma"
    OMA = "oma"


@dataclass(frozen=True)
class OutageBreakdown:
    """Per-event and union outage probabilities for one operating point.

    ``p_a1``: weak user's own-rate event, ``p_a2``: strong user's own-rate
    event, ``p_a21``: SIC event (0 for OMA, which needs no SIC).  ``source``
    is "analytic" or "empirical"; ``se_union`` is the binomial standard error
    of the union estimate (0 for analytic values).
    """

    p_a1: float
    p_a2: float
    p_a21: float
    p_union: float
    source: str
    se_union: float = 0.0

    def __post_init__(self):
        if self.source not in ("analytic", "empirical"):
            raise ValueError(f"source must be 'analytic' or 'empirical', got {self.source!r}")
        for name in ("p_a1", "p_a2", "p_a21", "p_union"):
            v = getattr(self, name)
            if not (0.0 <= v <= 1.0):
                raise ValueError(f"{name} must be a probability in [0, 1], got {v!r}")
        if self.se_union < 0.0:
            raise ValueError("se_union must be non-negative")
        slack = 3.0 * self.se_union + 1e-12
        if self.p_union + slack < max(self.p_a1, self.p_a2, self.p_a21):
            raise ValueError("union probability cannot fall below its largest component")


def weak_user_outage_marginal(p: SystemParams, t: float) -> float:
    """Pr{g1 < t} for the ordered pair: the min of two exponentials, 1 - exp(-2t/beta)."""
    if math.isnan(t) or t < 0:
        raise ValueError(f"threshold must be non-negative, got {t!r}")
    return -math.expm1(-2.0 * t / p.beta)


def strong_user_outage_marginal(p: SystemParams, t: float) -> float:
    """Pr{g2 < t} for the ordered pair: the max of two exponentials, (1 - exp(-t/beta))**2."""
    if math.isnan(t) or t < 0:
        raise ValueError(f"threshold must be non-negative, got {t!r}")
    return math.expm1(-t / p.beta) ** 2


def union_outage_ca_noma(p: SystemParams, a: PowerSplit) -> float:
    """Cache-aided union-outage probability, exact over the full power range.

    Three regimes in the power split ``a``:

    * a <= 1/(1 + 2**rate): the strong user's own-rate condition dominates
      its SIC condition and the union collapses to the two own-rate events.
      In that region the probability has the closed form
      ``1 + exp(-2*F/(a*beta*snr)) - 2*exp(-F/(a*(1-a)*beta*snr))`` with
      F = 2**rate - 1, which is what this function evaluates (rearranged
      through expm1 so tiny probabilities keep full precision).
    * 1/(1 + 2**rate) < a < 2**(-rate): the SIC condition takes over as the
      binding constraint on g2.
    * a >= 2**(-rate): SIC fails for every finite gain; the probability is
      exactly 1.
    """
    limit = sic_power_limit(p)
    if a.a >= limit:
        return 1.0
    if a.a <= power_split_cap(p):
        # direct closed form in (a, rate_factor); deliberately not routed
        # through joint survival so the two derivations cross-check
        scale = p.rate_factor / (p.beta * p.snr)
        u = 2.0 * scale / a.a
        v = scale / (a.a * (1.0 - a.a))
        w = 2.0 * scale / (1.0 - a.a)
        if w > 30.0:
            # probability is O(1) here; the plain form is exact enough and
            # the expm1 rearrangement would overflow
            return min(max(1.0 + math.exp(-u) - 2.0 * math.exp(-v), 0.0), 1.0)
        both = math.expm1(-v) ** 2
        tail = math.exp(-2.0 * v) * math.expm1(w)
        return min(both + tail, 1.0)
    binding = max(threshold_b2(p, a), threshold_b21(p, a))
    return ordered_pair_outage(p, threshold_b1(p, a), binding)


def union_outage_noma(p: SystemParams, a: PowerSplit) -> float:
    """Regular-NOMA union-outage probability.

    Without a cache the weak user decodes through the strong user's
    interference, so its own-rate threshold has the same algebraic form as
    the SIC threshold (applied to g1).  For a >= 2**(-rate) both conditions
    are unsatisfiable and the probability is exactly 1.
    """
    if a.a >= sic_power_limit(p):
        return 1.0
    own_weak = threshold_b21(p, a)
    binding = max(threshold_b2(p, a), threshold_b21(p, a))
    return ordered_pair_outage(p, own_weak, binding)


def union_outage_oma(p: SystemParams) -> float:
    """Orthogonal-access union outage: both users need g >= (4**rate - 1)/snr.

    Since the gains are ordered, the union reduces to the weak user's
    marginal: 1 - exp(-2*(4**rate - 1)/(beta*snr)).
    """
    return weak_user_outage_marginal(p, oma_gain_threshold(p))


def outage_breakdown_analytic(
    p: SystemParams, a: PowerSplit | None, scheme: Scheme
) -> OutageBreakdown:
    """Closed-form per-event and union probabilities for one operating point.

    ``a`` is ignored for OMA (pass None); the NOMA schemes require it.
    """
    if scheme is Scheme.OMA:
        t = oma_gain_threshold(p)
        return OutageBreakdown(
            p_a1=weak_user_outage_marginal(p, t),
            p_a2=strong_user_outage_marginal(p, t),
            p_a21=0.0,
            p_union=union_outage_oma(p),
            source="analytic",
        )
    if a is None:
        raise ValueError(f"scheme {scheme.value} requires a power split")
    b2 = threshold_b2(p, a)
    b21 = threshold_b21(p, a)
    p_a21 = 1.0 if math.isinf(b21) else strong_user_outage_marginal(p, b21)
    if scheme is Scheme.CA_NOMA:
        p_a1 = weak_user_outage_marginal(p, threshold_b1(p, a))
        p_union = union_outage_ca_noma(p, a)
    elif scheme is Scheme.NOMA:
        p_a1 = 1.0 if math.isinf(b21) else weak_user_outage_marginal(p, b21)
        p_union = union_outage_noma(p, a)
    else:
        raise ValueError(f"unknown scheme: {scheme!r}")
    return OutageBreakdown(
        p_a1=p_a1,
        p_a2=strong_user_outage_marginal(p, b2),
        p_a21=p_a21,
        p_union=p_union,
        source="analytic",
    )
