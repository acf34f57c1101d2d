#  Copyright 2026 toeplitz-norm contributors
#
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.

# -----------------------------------------------------------------------------
# System Imports
# -----------------------------------------------------------------------------

from typing import Optional, Tuple
from pathlib import Path

# -----------------------------------------------------------------------------
# Public Imports
# -----------------------------------------------------------------------------

import click

# -----------------------------------------------------------------------------
# Private Imports
# -----------------------------------------------------------------------------

from toeplitz_norm.errors import ConfigError, InvariantViolation
from toeplitz_norm.logger import get_logger
from toeplitz_norm.experiments import ExperimentConfig, run_sweep, summarize_rows

from .cli_main import cli
from .cli_opts import opt_seed, opt_tol, opt_input
from .cli_config import parse_config
from .cli_report import emit_report, read_csv_rows

# -----------------------------------------------------------------------------
# Exports
# -----------------------------------------------------------------------------

__all__ = ["cli_sweep", "cli_report", "run_metadata"]

# -----------------------------------------------------------------------------
#
#                                 CODE BEGINS
#
# -----------------------------------------------------------------------------

_FORMATS = ("csv", "json", "svg")


def run_metadata(config: ExperimentConfig) -> dict:
    """the header fields that make a result file reproducible"""
    return dict(
        seed=config.master_seed,
        ensemble=config.ensemble.value,
        dist=",".join(spec.label for spec in config.specs),
        mean_shift=config.mean_shift,
        replications=config.replications,
        method=config.norm_method,
        tol=config.tol,
        grid_factor=config.grid_factor,
    )


def _parse_formats(text: str) -> list[str]:
    formats = [f.strip() for f in text.split(",") if f.strip()]
    if bad := [f for f in formats if f not in _FORMATS]:
        raise ConfigError(f"unknown report format(s) {bad}; choose from {_FORMATS}")
    return formats


@cli.command("sweep")
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="Experiment config JSON",
)
@click.option(
    "--out-dir",
    type=click.Path(file_okay=False, path_type=Path),
    required=True,
    help="Directory for sweep.csv / sweep.json / sweep.svg",
)
@click.option("--format", "formats", default="csv,json", show_default=True)
@opt_seed(help="Master seed (overrides the config)")
@click.option("--n", "n_list", type=int, multiple=True, help="Dimension; repeatable")
@click.option("--replications", type=click.IntRange(min=1))
@click.option("--method", type=click.Choice(["dense", "iterative", "auto"]))
def cli_sweep(
    config_path: Optional[Path],
    out_dir: Path,
    formats: str,
    seed: Optional[int],
    n_list: Tuple[int],
    replications: Optional[int],
    method: Optional[str],
):
    """
    Run a Monte Carlo sweep and write its reports
    """
    log = get_logger()
    formats = _parse_formats(formats)

    config = parse_config(
        config_path,
        master_seed=seed,
        n_list=list(n_list) or None,
        replications=replications,
        norm_method=method,
    )
    log.info(f"master seed: {config.master_seed}")

    records, summary = run_sweep(config)
    rows = [rec.to_row() for rec in records]
    meta = run_metadata(config)

    out_dir.mkdir(parents=True, exist_ok=True)
    for fmt in formats:
        path = emit_report(rows, summary, fmt, out_dir / f"sweep.{fmt}", meta)
        log.info(f"wrote {path}")

    if summary.sandwich_violations:
        raise InvariantViolation(
            f"{summary.sandwich_violations} of {summary.n_records} trials "
            "violate fejer_lower <= norm <= certified upper"
        )


@cli.command("report")
@opt_input(help="Sweep CSV")
@click.option(
    "--svg",
    "svg_path",
    type=click.Path(dir_okay=False, path_type=Path),
    help="SVG plot output",
)
@click.option(
    "--json",
    "json_path",
    type=click.Path(dir_okay=False, path_type=Path),
    help="JSON summary output",
)
@opt_tol(help="Relative tolerance used to flag uncertified rows")
def cli_report(
    in_path: Path, svg_path: Optional[Path], json_path: Optional[Path], tol: float
):
    """
    Re-summarize a sweep CSV and plot it
    """
    log = get_logger()
    rows = read_csv_rows(in_path)
    summary = summarize_rows(rows, tol)

    for each in summary.per_n:
        if stats := each.ratio_sqrt_nlogn:
            log.info(f"n={each.n}: mean ratio {stats.mean:.4f} [{stats.q05:.4f}, {stats.q95:.4f}]")

    if svg_path:
        emit_report(rows, summary, "svg", svg_path)
    if json_path:
        emit_report(rows, summary, "json", json_path)

    if summary.sandwich_violations:
        raise InvariantViolation(f"{summary.sandwich_violations} rows violate the sandwich")
