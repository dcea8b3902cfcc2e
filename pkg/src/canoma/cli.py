"""Command-line front end.

Subcommands ``eval``, ``sweep-a``, ``sweep-snr``, ``sweep-amin``; every
setting is available as a flag and as a ``key = value`` line in a config file
(``--config``), with flags taking precedence over the file.

Exit codes: 0 success, 2 configuration error (unparseable flags, config file,
or output path), 3 domain validation error (values rejected by the model).
"""

from __future__ import annotations

import argparse
import sys

from .harness import (
    RunConfig,
    TOOL_VERSION,
    rows_to_csv_text,
    rows_to_json_text,
    run_eval,
    run_sweep_a,
    run_sweep_amin,
    run_sweep_snr,
)
from .outage import Scheme

__all__ = ["main", "ConfigError"]

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DOMAIN = 3


class ConfigError(Exception):
    """A flag/config-file value could not be parsed or understood."""


_SCHEME_TOKENS = {
    "ca-noma": Scheme.CA_NOMA,
    "ca_noma": Scheme.CA_NOMA,
    "noma": Scheme.NOMA,
    "oma": Scheme.OMA,
}

# key -> converter for config files and flag post-processing
_KEY_PARSERS = {
    "snr_db": float,
    "beta": float,
    "rate": float,
    "a": float,
    "scheme": str,
    "samples": int,
    "seed": int,
    "streams": int,
    "grid_start": float,
    "grid_stop": float,
    "grid_points": int,
    "out": str,
    "format": str,
}

_COMMON_DEFAULTS = {
    "snr_db": 20.0,
    "beta": 2.0,
    "rate": 2.0,
    "a": 0.2,
    "scheme": "ca-noma",
    "seed": 12345,
    "streams": 1,
    "out": None,
    "format": "csv",
}

_EXPERIMENT_DEFAULTS = {
    "eval": {"samples": 1_000_000, "grid_start": 0.0, "grid_stop": 1.0, "grid_points": 2},
    "sweep-a": {"samples": 100_000, "grid_start": 0.005, "grid_stop": 0.30, "grid_points": 100},
    "sweep-snr": {"samples": 100_000, "grid_start": 5.0, "grid_stop": 40.0, "grid_points": 15},
    "sweep-amin": {"samples": 100_000, "grid_start": 5.0, "grid_stop": 40.0, "grid_points": 15},
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="canoma",
        description="Cache-aided NOMA outage experiments: closed forms vs seeded Monte Carlo.",
    )
    parser.add_argument("--version", action="version", version=f"canoma {TOOL_VERSION}")
    sub = parser.add_subparsers(dest="experiment", required=True)
    helps = {
        "eval": "evaluate one operating point (analytic + empirical breakdown)",
        "sweep-a": "union outage vs power split at fixed SNR",
        "sweep-snr": "scheme comparison vs SNR at optimized splits",
        "sweep-amin": "closed-form vs numeric optimal split across SNR",
    }
    for name, help_text in helps.items():
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--snr-db", dest="snr_db", type=float)
        sp.add_argument("--beta", type=float)
        sp.add_argument("--rate", type=float, help="QoS rate in bps/Hz")
        sp.add_argument("--a", type=float, help="power split on the strong user")
        sp.add_argument("--scheme", choices=sorted(_SCHEME_TOKENS))
        sp.add_argument("--samples", type=int, help="Monte Carlo draws (per grid point)")
        sp.add_argument("--seed", type=int, help="64-bit master seed")
        sp.add_argument("--streams", type=int, help="parallel stream count")
        sp.add_argument("--grid-start", dest="grid_start", type=float)
        sp.add_argument("--grid-stop", dest="grid_stop", type=float)
        sp.add_argument("--grid-points", dest="grid_points", type=int)
        sp.add_argument("--config", help="key = value config file; flags override it")
        sp.add_argument("--out", help="output file path")
        sp.add_argument("--format", choices=["csv", "json"])
    return parser


def parse_config_file(path: str) -> dict:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as err:
        raise ConfigError(f"cannot read config file {path}: {err}") from err
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip().replace("-", "_")
        value = value.strip()
        if key not in _KEY_PARSERS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        try:
            values[key] = _KEY_PARSERS[key](value)
        except ValueError as err:
            raise ConfigError(f"{path}:{lineno}: bad value for {key}: {value!r}") from err
    return values


def resolve_config(args: argparse.Namespace) -> RunConfig:
    merged = dict(_COMMON_DEFAULTS)
    merged.update(_EXPERIMENT_DEFAULTS[args.experiment])
    if args.config is not None:
        merged.update(parse_config_file(args.config))
    for key in _KEY_PARSERS:
        flag_value = getattr(args, key, None)
        if flag_value is not None:
            merged[key] = flag_value
    scheme_token = str(merged["scheme"]).replace("_", "-")
    if scheme_token not in _SCHEME_TOKENS:
        raise ConfigError(f"unknown scheme {merged['scheme']!r}")
    merged["scheme"] = _SCHEME_TOKENS[scheme_token]
    if merged["format"] not in ("csv", "json"):
        raise ConfigError(f"format must be csv or json, got {merged['format']!r}")
    return RunConfig(experiment=args.experiment, **merged)


def _write_output(cfg: RunConfig, rows) -> None:
    text = (
        rows_to_csv_text(rows) if cfg.format == "csv" else rows_to_json_text(rows, cfg)
    )
    with open(cfg.out, "w", newline="") as fh:
        fh.write(text)


def run(cfg: RunConfig) -> int:
    if cfg.experiment == "eval":
        report, rows = run_eval(cfg)
        print(report)
    elif cfg.experiment == "sweep-a":
        rows = run_sweep_a(cfg)
    elif cfg.experiment == "sweep-snr":
        rows = run_sweep_snr(cfg)
    else:
        rows = run_sweep_amin(cfg)
    if cfg.out is not None:
        _write_output(cfg, rows)
    elif cfg.experiment != "eval":
        sys.stdout.write(rows_to_csv_text(rows) if cfg.format == "csv" else rows_to_json_text(rows, cfg))
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits 2 on unparseable flags
    try:
        cfg = resolve_config(args)
    except ConfigError as err:
        print(f"canoma: config error: {err}", file=sys.stderr)
        return EXIT_CONFIG
    except ValueError as err:
        print(f"canoma: invalid value: {err}", file=sys.stderr)
        return EXIT_DOMAIN
    try:
        return run(cfg)
    except ValueError as err:
        print(f"canoma: invalid value: {err}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as err:
        print(f"canoma: cannot write output: {err}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
