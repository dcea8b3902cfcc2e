"""Outage-minimizing power allocation.

Two routes to the cache-aided minimizer: a closed-form approximation obtained
by solving a depressed cubic (valid for small normalized threshold
a0 = (2**rate - 1)/(beta*snr)), and an exact numeric minimizer of the true
union-outage curve used to judge the approximation.  A third optimizer finds
the regular-NOMA baseline split.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import PowerSplit, SystemParams, power_split_cap, sic_power_limit
from .outage import union_outage_ca_noma, union_outage_noma

__all__ = [
    "ApproximationDomainError",
    "CubicIntermediates",
    "ClosedFormSplit",
    "cubic_intermediates",
    "a_min_closed_form",
    "a_min_numeric",
    "a_star_noma_numeric",
]

DEFAULT_TOL = 1e-6
_A0_LIMIT = 27.0 / 4.0


class ApproximationDomainError(ValueError):
    """The closed-form solution is out of model: a0 > 27/4 makes it complex."""


def _real_cbrt(x: float) -> float:
    return math.copysign(abs(x) ** (1.0 / 3.0), x)


@dataclass(frozen=True)
class CubicIntermediates:
    """Quantities arising in the closed-form cubic solution.

    a0 is the normalized rate threshold; a1, a3 are the depressed cubic's
    constant and linear coefficients; a2 = sqrt(a1**2 + (4/27)*a3**3) in its
    simplified radical form; s and q are the cube roots whose difference
    solves the depressed cubic.
    """

    a0: float
    a1: float
    a2: float
    a3: float
    s: float
    q: float


@dataclass(frozen=True)
class ClosedFormSplit:
    """Closed-form outage-minimizing split with its derivation intermediates."""

    a_min: float
    unclamped_root: float
    cap: float
    intermediates: CubicIntermediates

    @property
    def clamped(self) -> bool:
        return self.a_min < self.unclamped_root

    @property
    def power_split(self) -> PowerSplit:
        return PowerSplit(self.a_min)


def cubic_intermediates(p: SystemParams) -> CubicIntermediates:
    a0 = p.rate_factor / (p.beta * p.snr)
    if a0 > _A0_LIMIT:
        raise ApproximationDomainError(
            f"normalized threshold {a0:.6g} exceeds 27/4; SNR too low for the "
            "closed-form approximation"
        )
    a1 = (2.0 / 27.0) * a0**3 - (2.0 / 3.0) * a0**2 + a0
    a3 = 2.0 * a0 - a0**2 / 3.0
    a2 = a0 * math.sqrt(1.0 - (4.0 / 27.0) * a0)
    # s**3 = (a1+a2)/2 and q**3 = (-a1+a2)/2; whichever involves subtracting
    # nearly equal magnitudes is replaced by the identity
    # (a2 - a1)(a2 + a1) = (4/27)*a3**3 to dodge the cancellation
    if a1 > 0.0:
        s3 = 0.5 * (a1 + a2)
        q3 = (2.0 / 27.0) * a3**3 / (a1 + a2)
    elif a1 < 0.0:
        q3 = 0.5 * (a2 - a1)
        s3 = (2.0 / 27.0) * a3**3 / (a2 - a1)
    else:
        s3 = q3 = 0.5 * a2
    return CubicIntermediates(a0=a0, a1=a1, a2=a2, a3=a3, s=_real_cbrt(s3), q=_real_cbrt(q3))


def a_min_closed_form(p: SystemParams) -> ClosedFormSplit:
    """Closed-form approximation of the cache-aided outage-minimizing split.

    The unclamped value is the unique real root of
    ``a**3 - a0*a**2 + 2*a0*a - a0 = 0`` (the stationary point of the
    small-threshold expansion of the union-outage curve); the returned
    ``a_min`` clamps it to the useful range cap 1/(1 + 2**rate).
    """
    ci = cubic_intermediates(p)
    root = ci.a0 / 3.0 + ci.s - ci.q
    cap = power_split_cap(p)
    return ClosedFormSplit(a_min=min(root, cap), unclamped_root=root, cap=cap, intermediates=ci)


def _golden_section(f, lo: float, hi: float, tol: float) -> float:
    """Golden-section minimum of a unimodal f on [lo, hi], to width tol."""
    ratio = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = hi - ratio * (hi - lo)
    x2 = lo + ratio * (hi - lo)
    f1, f2 = f(x1), f(x2)
    while hi - lo > tol:
        if f1 < f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - ratio * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + ratio * (hi - lo)
            f2 = f(x2)
    return 0.5 * (lo + hi)


def _grid_then_golden(f, lo: float, hi: float, n_grid: int, tol: float) -> float:
    """Bracket the minimum on a coarse grid, refine it, and honor boundary wins.

    The coarse grid guards against a bad bracket if f is not quite unimodal;
    the final comparison returns a boundary point exactly when it is at least
    as good as the refined interior candidate.
    """
    step = (hi - lo) / (n_grid - 1)
    xs = [lo + i * step for i in range(n_grid)]
    fs = [f(x) for x in xs]
    j = min(range(n_grid), key=fs.__getitem__)
    bracket_lo = xs[max(j - 1, 0)]
    bracket_hi = xs[min(j + 1, n_grid - 1)]
    refined = _golden_section(f, bracket_lo, bracket_hi, tol)
    best = refined
    for candidate in (xs[j], lo, hi):
        if f(candidate) < f(best):
            best = candidate
    return best


def a_min_numeric(p: SystemParams, tol: float = DEFAULT_TOL) -> PowerSplit:
    """Exact minimizer of the cache-aided union outage over (0, cap].

    Bracketing on a 64-point grid followed by golden-section refinement;
    the result is within ``tol`` of the true minimizer of the unimodal
    objective (and exactly the cap when the boundary wins).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    cap = power_split_cap(p)
    f = lambda a: union_outage_ca_noma(p, PowerSplit(a))
    lo = cap / 64.0
    best = _grid_then_golden(f, lo, cap, 64, tol)
    return PowerSplit(best)


def a_star_noma_numeric(p: SystemParams, tol: float = DEFAULT_TOL) -> PowerSplit:
    """Minimizer of the regular-NOMA union outage over (0, 2**(-rate)).

    The outage tends to 1 at both ends of the interval, so the minimum is
    interior; a 256-point grid brackets it before refinement.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    limit = sic_power_limit(p)
    f = lambda a: union_outage_noma(p, PowerSplit(a))
    lo = limit / 256.0
    hi = limit * (1.0 - 1e-9)
    best = _grid_then_golden(f, lo, hi, 256, tol)
    return PowerSplit(best)
