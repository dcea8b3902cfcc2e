"""Experiment drivers producing machine-readable sweep datasets.

Three sweeps cover the standard experiments: union outage versus the power
split at fixed SNR, scheme comparison versus SNR at each scheme's optimized
split, and the closed-form versus numeric optimal split across SNR.  Every
row carries the exact seed that regenerates its empirical numbers, and all
floats are quantized to 9 significant digits at row construction so written
files round-trip exactly.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, fields

import numpy as np

from .model import (
    PowerSplit,
    SystemParams,
    oma_gain_threshold,
    sic_feasible,
    sic_power_limit,
    threshold_b1,
    threshold_b2,
    threshold_b21,
)
from .montecarlo import McConfig, derive_point_seed, estimate_outage
from .optimize import a_min_closed_form, a_min_numeric, a_star_noma_numeric
from .outage import (
    OutageBreakdown,
    Scheme,
    outage_breakdown_analytic,
    union_outage_ca_noma,
)

__all__ = [
    "TOOL_VERSION",
    "CSV_COLUMNS",
    "SweepRow",
    "RunConfig",
    "run_eval",
    "run_sweep_a",
    "run_sweep_snr",
    "run_sweep_amin",
    "rows_to_csv_text",
    "rows_to_json_text",
    "read_rows_csv",
    "read_rows_json",
]

TOOL_VERSION = "0.1.0"

CSV_COLUMNS = [
    "scheme",
    "a",
    "snr_db",
    "beta",
    "rate_bps_hz",
    "p_analytic",
    "p_empirical",
    "se",
    "n_samples",
    "seed",
]

EXPERIMENTS = ("eval", "sweep-a", "sweep-snr", "sweep-amin")

# series labels used in the scheme column of sweep outputs
EVENT_SERIES_SUFFIXES = ("user1", "user2", "sic")
AMIN_SERIES = ("amin_closed", "amin_unclamped", "amin_numeric")


def _sig9(v: float) -> float:
    """Quantize to 9 significant digits (the file serialization precision)."""
    return float(f"{float(v):.9g}")


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return f"{v:.9g}"
    return str(v)


@dataclass(frozen=True)
class SweepRow:
    """One record of a sweep; blank (None) fields mean "not applicable"."""

    scheme: str
    a: float | None
    snr_db: float
    beta: float
    rate_bps_hz: float
    p_analytic: float | None
    p_empirical: float | None
    se: float | None
    n_samples: int | None
    seed: int | None

    def __post_init__(self):
        for name in ("a", "snr_db", "beta", "rate_bps_hz", "p_analytic", "p_empirical", "se"):
            v = getattr(self, name)
            if v is not None:
                object.__setattr__(self, name, _sig9(v))
        if self.p_analytic is None and self.p_empirical is None:
            raise ValueError("row needs at least one of p_analytic, p_empirical")
        for name in ("p_analytic", "p_empirical"):
            v = getattr(self, name)
            if v is not None and not (0.0 <= v <= 1.0):
                raise ValueError(f"{name} must lie in [0, 1], got {v!r}")


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved configuration of one harness invocation."""

    experiment: str
    snr_db: float = 20.0
    beta: float = 2.0
    rate: float = 2.0
    a: float = 0.2
    scheme: Scheme = Scheme.CA_NOMA
    samples: int = 100_000
    seed: int = 12345
    streams: int = 1
    grid_start: float = 0.0
    grid_stop: float = 1.0
    grid_points: int = 2
    out: str | None = None
    format: str = "csv"

    def __post_init__(self):
        if self.experiment not in EXPERIMENTS:
            raise ValueError(f"unknown experiment {self.experiment!r}")
        if self.format not in ("csv", "json"):
            raise ValueError(f"format must be csv or json, got {self.format!r}")
        if self.samples < 1:
            raise ValueError("samples must be at least 1")
        if self.streams < 1:
            raise ValueError("streams must be at least 1")
        if not (0 <= self.seed < 2**64):
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.experiment != "eval":
            if self.grid_points < 2:
                raise ValueError("sweeps need at least 2 grid points")
            if not (self.grid_start < self.grid_stop):
                raise ValueError("grid start must be below grid stop")

    def system_params(self) -> SystemParams:
        return SystemParams.from_db(self.snr_db, self.beta, self.rate)

    def mc_config(self, master_seed: int | None = None) -> McConfig:
        return McConfig(
            n_samples=self.samples,
            master_seed=self.seed if master_seed is None else master_seed,
            n_streams=self.streams,
        )

    def grid(self) -> list[float]:
        return [float(x) for x in np.linspace(self.grid_start, self.grid_stop, self.grid_points)]

    def echo(self) -> dict:
        d = asdict(self)
        d["scheme"] = self.scheme.value
        return d


def _event_se(p_hat: float, n: int) -> float:
    return math.sqrt(p_hat * (1.0 - p_hat) / n)


def _breakdown_rows(
    label: str,
    a_value: float | None,
    cfg: RunConfig,
    analytic: OutageBreakdown,
    empirical: OutageBreakdown,
    n: int,
    seed: int,
    include_sic: bool,
) -> list[SweepRow]:
    """Union row plus one row per outage event, analytic next to empirical."""
    common = dict(a=a_value, snr_db=cfg.snr_db, beta=cfg.beta, rate_bps_hz=cfg.rate)
    rows = [
        SweepRow(
            scheme=label,
            p_analytic=analytic.p_union,
            p_empirical=empirical.p_union,
            se=empirical.se_union,
            n_samples=n,
            seed=seed,
            **common,
        )
    ]
    pairs = [("user1", "p_a1"), ("user2", "p_a2")]
    if include_sic:
        pairs.append(("sic", "p_a21"))
    for suffix, attr in pairs:
        p_hat = getattr(empirical, attr)
        rows.append(
            SweepRow(
                scheme=f"{label}_{suffix}",
                p_analytic=getattr(analytic, attr),
                p_empirical=p_hat,
                se=_event_se(p_hat, n),
                n_samples=n,
                seed=seed,
                **common,
            )
        )
    return rows


def run_eval(cfg: RunConfig) -> tuple[str, list[SweepRow]]:
    """Single-point evaluation: report text plus the corresponding rows."""
    params = cfg.system_params()
    scheme = cfg.scheme
    split = None if scheme is Scheme.OMA else PowerSplit(cfg.a)
    analytic = outage_breakdown_analytic(params, split, scheme)
    empirical = estimate_outage(params, split, scheme, cfg.mc_config())

    lines = [
        f"scheme: {scheme.value}",
        f"snr: {cfg.snr_db:g} dB (linear {params.snr:.6g})",
        f"beta: {cfg.beta:g}   rate: {cfg.rate:g} bps/Hz",
    ]
    if scheme is Scheme.OMA:
        lines.append(f"gain threshold (per user, half slot): {oma_gain_threshold(params):.6g}")
        lines.append("feasibility: no SIC stage")
    else:
        b21 = threshold_b21(params, split)
        lines.append(f"power split a: {cfg.a:g}")
        lines.append(f"threshold b1 (weak-user rate):   {threshold_b1(params, split):.6g}")
        lines.append(f"threshold b2 (strong-user rate): {threshold_b2(params, split):.6g}")
        lines.append(
            "threshold b21 (SIC):             "
            + (f"{b21:.6g}" if math.isfinite(b21) else "infeasible")
        )
        if sic_feasible(params, split):
            lines.append(f"feasibility: SIC feasible (a < 2^-rate = {sic_power_limit(params):g})")
        else:
            lines.append(
                "feasibility: SIC infeasible, certain outage "
                f"(a >= 2^-rate = {sic_power_limit(params):g})"
            )
    lines.append(
        "analytic : "
        f"p_a1={analytic.p_a1:.9g} p_a2={analytic.p_a2:.9g} "
        f"p_a21={analytic.p_a21:.9g} p_union={analytic.p_union:.9g}"
    )
    lines.append(
        "empirical: "
        f"p_a1={empirical.p_a1:.9g} p_a2={empirical.p_a2:.9g} "
        f"p_a21={empirical.p_a21:.9g} p_union={empirical.p_union:.9g} "
        f"(se={empirical.se_union:.3g}, n={cfg.samples}, seed={cfg.seed})"
    )

    rows = _breakdown_rows(
        scheme.value,
        None if scheme is Scheme.OMA else cfg.a,
        cfg,
        analytic,
        empirical,
        cfg.samples,
        cfg.seed,
        include_sic=scheme is not Scheme.OMA,
    )
    return "\n".join(lines), rows


def run_sweep_a(cfg: RunConfig) -> list[SweepRow]:
    """Union and per-event outage versus the power split, for the cached scheme."""
    params = cfg.system_params()
    rows: list[SweepRow] = []
    for i, a_value in enumerate(cfg.grid()):
        split = PowerSplit(a_value)
        point_seed = derive_point_seed(cfg.seed, i)
        analytic = outage_breakdown_analytic(params, split, Scheme.CA_NOMA)
        empirical = estimate_outage(params, split, Scheme.CA_NOMA, cfg.mc_config(point_seed))
        rows.extend(
            _breakdown_rows(
                Scheme.CA_NOMA.value,
                a_value,
                cfg,
                analytic,
                empirical,
                cfg.samples,
                point_seed,
                include_sic=True,
            )
        )
    return rows


def run_sweep_snr(cfg: RunConfig) -> list[SweepRow]:
    """Scheme comparison versus SNR, each scheme at its optimized power split."""
    rows: list[SweepRow] = []
    point_index = 0
    for snr_db in cfg.grid():
        params = SystemParams.from_db(snr_db, cfg.beta, cfg.rate)
        ca_split = a_min_closed_form(params).power_split
        noma_split = a_star_noma_numeric(params)
        for scheme, split in (
            (Scheme.CA_NOMA, ca_split),
            (Scheme.NOMA, noma_split),
            (Scheme.OMA, None),
        ):
            point_seed = derive_point_seed(cfg.seed, point_index)
            point_index += 1
            analytic = outage_breakdown_analytic(params, split, scheme)
            empirical = estimate_outage(params, split, scheme, cfg.mc_config(point_seed))
            rows.append(
                SweepRow(
                    scheme=scheme.value,
                    a=None if split is None else split.a,
                    snr_db=snr_db,
                    beta=cfg.beta,
                    rate_bps_hz=cfg.rate,
                    p_analytic=analytic.p_union,
                    p_empirical=empirical.p_union,
                    se=empirical.se_union,
                    n_samples=cfg.samples,
                    seed=point_seed,
                )
            )
    return rows


def run_sweep_amin(cfg: RunConfig) -> list[SweepRow]:
    """Closed-form versus numeric optimal split across SNR (analytic only)."""
    rows: list[SweepRow] = []
    for snr_db in cfg.grid():
        params = SystemParams.from_db(snr_db, cfg.beta, cfg.rate)
        closed = a_min_closed_form(params)
        numeric = a_min_numeric(params)
        series = (
            ("amin_closed", closed.a_min),
            ("amin_unclamped", closed.unclamped_root),
            ("amin_numeric", numeric.a),
        )
        for label, a_value in series:
            rows.append(
                SweepRow(
                    scheme=label,
                    a=a_value,
                    snr_db=snr_db,
                    beta=cfg.beta,
                    rate_bps_hz=cfg.rate,
                    p_analytic=union_outage_ca_noma(params, PowerSplit(a_value)),
                    p_empirical=None,
                    se=None,
                    n_samples=None,
                    seed=None,
                )
            )
    return rows


def rows_to_csv_text(rows: list[SweepRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([_cell(getattr(row, col)) for col in CSV_COLUMNS])
    return buf.getvalue()


def rows_to_json_text(rows: list[SweepRow], cfg: RunConfig) -> str:
    doc = {
        "tool_version": TOOL_VERSION,
        "config": cfg.echo(),
        "rows": [{col: getattr(row, col) for col in CSV_COLUMNS} for row in rows],
    }
    return json.dumps(doc, indent=2) + "\n"


_INT_COLUMNS = {"n_samples", "seed"}


def _parse_cell(col: str, text: str):
    if text == "":
        return None
    if col == "scheme":
        return text
    if col in _INT_COLUMNS:
        return int(text)
    return float(text)


def read_rows_csv(path: str) -> list[SweepRow]:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != CSV_COLUMNS:
            raise ValueError(f"unexpected CSV header: {header!r}")
        return [
            SweepRow(**{col: _parse_cell(col, cell) for col, cell in zip(CSV_COLUMNS, line)})
            for line in reader
            if line
        ]


def read_rows_json(path: str) -> tuple[dict, list[SweepRow]]:
    with open(path) as fh:
        doc = json.load(fh)
    rows = [SweepRow(**{col: obj[col] for col in CSV_COLUMNS}) for obj in doc["rows"]]
    return doc["config"], rows


# referenced so the dataclass field order stays the single source of truth
assert [f.name for f in fields(SweepRow)] == CSV_COLUMNS
