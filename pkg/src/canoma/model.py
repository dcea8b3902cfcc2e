"""Two-user downlink model: parameters, channel-gain pairs, capacities, thresholds.

Everything here works at the channel-gain / capacity abstraction.  A base
station splits its transmit power between two users: the user with the weaker
channel (gain ``g1``) gets the fraction ``1 - a``, the stronger user (gain
``g2``) gets ``a``.  In the cache-aided scheme both links are interference
free; in the regular scheme the weak user decodes through the strong user's
interference.  The strong user must additionally decode-and-subtract the weak
user's signal (SIC) before decoding its own.

SNR is stored linear; convert from dB only at interface boundaries with
:func:`db_to_linear`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "INFEASIBLE",
    "SystemParams",
    "PowerSplit",
    "ChannelPair",
    "db_to_linear",
    "linear_to_db",
    "oma_capacity",
    "ca_noma_capacity_user1",
    "ca_noma_capacity_user2",
    "sic_capacity",
    "threshold_b1",
    "threshold_b2",
    "threshold_b21",
    "sic_feasible",
    "power_split_cap",
    "sic_power_limit",
    "oma_gain_threshold",
]

# Distinguished threshold value: the SIC rate condition cannot be met by any
# finite channel gain, so the corresponding outage event is certain.
INFEASIBLE = math.inf


def db_to_linear(db: float) -> float:
    return 10.0 ** (db / 10.0)


def linear_to_db(x: float) -> float:
    return 10.0 * math.log10(x)


def _require_positive_finite(name: str, value: float) -> None:
    if not (math.isfinite(value) and value > 0):
        raise ValueError(f"{name} must be finite and > 0, got {value!r}")


@dataclass(frozen=True)
class SystemParams:
    """Transmit SNR (linear), mean channel power, and minimum QoS rate.

    Attributes
    ----------
    snr : float
        Total transmit SNR, linear scale (> 0).
    beta : float
        Mean of the exponentially distributed squared channel gains (> 0).
    rate : float
        Minimum rate every served user must reach, in bps/Hz (> 0).
    """

    snr: float
    beta: float
    rate: float

    def __post_init__(self):
        _require_positive_finite("snr", self.snr)
        _require_positive_finite("beta", self.beta)
        _require_positive_finite("rate", self.rate)

    @property
    def rate_factor(self) -> float:
        """SNR required to carry ``rate`` on a unit-bandwidth link: 2**rate - 1."""
        return 2.0 ** self.rate - 1.0

    @classmethod
    def from_db(cls, snr_db: float, beta: float, rate: float) -> "SystemParams":
        return cls(snr=db_to_linear(snr_db), beta=beta, rate=rate)


@dataclass(frozen=True)
class PowerSplit:
    """Fraction ``a`` of transmit power on the strong user's signal, 0 < a < 1."""

    a: float

    def __post_init__(self):
        if not (math.isfinite(self.a) and 0.0 < self.a < 1.0):
            raise ValueError(f"power split must lie in (0, 1), got {self.a!r}")


@dataclass(frozen=True)
class ChannelPair:
    """Ordered squared channel gains, weak user first (0 <= g1 <= g2).

    Ties (g1 == g2) are permitted; the continuous fading model assigns them
    probability zero and the ordering is then arbitrary.
    """

    g1: float
    g2: float

    def __post_init__(self):
        ok = (
            math.isfinite(self.g1)
            and math.isfinite(self.g2)
            and 0.0 <= self.g1 <= self.g2
        )
        if not ok:
            raise ValueError(
                f"need finite gains with 0 <= g1 <= g2, got ({self.g1!r}, {self.g2!r})"
            )


def _checked_gain(g):
    """Validate gain(s) and return them as a float array (scalar-in, 0-d out)."""
    arr = np.asarray(g, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any(arr < 0):
        raise ValueError("channel gain must be finite and non-negative")
    return arr


def _as_input_kind(arr, g):
    return float(arr) if np.isscalar(g) or np.ndim(g) == 0 else arr


def oma_capacity(p: SystemParams, g):
    """Single-user capacity over half the resource: 0.5 * log2(1 + snr * g).

    Each user gets its own half slot at full transmit SNR, hence the 1/2.
    Accepts a scalar gain or an array of gains.
    """
    arr = _checked_gain(g)
    return _as_input_kind(0.5 * np.log2(1.0 + p.snr * arr), g)


def ca_noma_capacity_user1(p: SystemParams, a: PowerSplit, g1):
    """Weak-user capacity with the strong user's signal already cached out.

    The cache lets user 1 rebuild and subtract user 2's signal, leaving an
    interference-free link: log2(1 + (1-a) * snr * g1).
    """
    arr = _checked_gain(g1)
    return _as_input_kind(np.log2(1.0 + (1.0 - a.a) * p.snr * arr), g1)


def ca_noma_capacity_user2(p: SystemParams, a: PowerSplit, g2):
    """Strong-user own-signal capacity after SIC: log2(1 + a * snr * g2)."""
    arr = _checked_gain(g2)
    return _as_input_kind(np.log2(1.0 + a.a * p.snr * arr), g2)


def sic_capacity(p: SystemParams, a: PowerSplit, g):
    """Rate at which a receiver decodes the weak user's signal under interference.

    log2(1 + (1-a) * snr * g / (a * snr * g + 1)).  Called with g = g2 this is
    the strong user's SIC decoding capacity; called with g = g1 it is also the
    weak user's own-signal capacity in regular (cache-free) NOMA, where user
    2's signal remains as interference.  Saturates at log2(1/a) as g grows.
    """
    arr = _checked_gain(g)
    x = p.snr * arr
    return _as_input_kind(np.log2(1.0 + (1.0 - a.a) * x / (a.a * x + 1.0)), g)


def threshold_b1(p: SystemParams, a: PowerSplit) -> float:
    """Gain below which the cache-aided weak user misses the QoS rate."""
    return p.rate_factor / ((1.0 - a.a) * p.snr)


def threshold_b2(p: SystemParams, a: PowerSplit) -> float:
    """Gain below which the strong user's own signal misses the QoS rate."""
    return p.rate_factor / (a.a * p.snr)


def threshold_b21(p: SystemParams, a: PowerSplit) -> float:
    """Gain below which SIC fails, or INFEASIBLE when it fails for every gain.

    The SIC rate condition solves to g < rate_factor / (snr * (1 - a * 2**rate))
    only while a < 2**(-rate).  At or above that power split the condition
    cannot be met by any finite gain (the threshold diverges), so INFEASIBLE
    is returned and the event is certain.
    """
    headroom = 1.0 - a.a * 2.0 ** p.rate
    if headroom <= 0.0:
        return INFEASIBLE
    return p.rate_factor / (p.snr * headroom)


def sic_feasible(p: SystemParams, a: PowerSplit) -> bool:
    """True when SIC succeeds with non-zero probability (a < 2**(-rate))."""
    return math.isfinite(threshold_b21(p, a))


def power_split_cap(p: SystemParams) -> float:
    """Upper end of the useful power-split range, 1/(1 + 2**rate).

    Below this value the strong user's own-rate condition is the binding
    constraint on g2; past it the SIC condition dominates instead.
    """
    return 1.0 / (1.0 + 2.0 ** p.rate)


def sic_power_limit(p: SystemParams) -> float:
    """Power split at and above which SIC is certain to fail: 2**(-rate)."""
    return 2.0 ** (-p.rate)


def oma_gain_threshold(p: SystemParams) -> float:
    """Gain a user needs to reach the QoS rate in its half slot: (4**rate - 1)/snr."""
    return (4.0 ** p.rate - 1.0) / p.snr
