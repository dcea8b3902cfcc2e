"""Cache-aided NOMA outage analysis.

Closed-form capacities, outage probabilities, and power-allocation optimizers
for a two-user downlink where the weak user caches the strong user's content,
cross-checked by a seeded Monte Carlo simulator over ordered Rayleigh-fading
gain pairs.
"""

from .harness import TOOL_VERSION as __version__
from .model import (
    INFEASIBLE,
    ChannelPair,
    PowerSplit,
    SystemParams,
    ca_noma_capacity_user1,
    ca_noma_capacity_user2,
    db_to_linear,
    linear_to_db,
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
from .montecarlo import McConfig, derive_point_seed, estimate_curve, estimate_outage
from .optimize import (
    ApproximationDomainError,
    ClosedFormSplit,
    CubicIntermediates,
    a_min_closed_form,
    a_min_numeric,
    a_star_noma_numeric,
    cubic_intermediates,
)
from .outage import (
    OutageBreakdown,
    Scheme,
    outage_breakdown_analytic,
    strong_user_outage_marginal,
    union_outage_ca_noma,
    union_outage_noma,
    union_outage_oma,
    weak_user_outage_marginal,
)
from .sampling import ChannelSampler, SamplerSeed, joint_survival, ordered_pair_outage
