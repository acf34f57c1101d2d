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

from typing import Callable, TypeVar, Optional
import asyncio
import time

# -----------------------------------------------------------------------------
# Public Imports
# -----------------------------------------------------------------------------

import numpy as np

# -----------------------------------------------------------------------------
# Private Imports
# -----------------------------------------------------------------------------

from toeplitz_norm.errors import ConfigError
from toeplitz_norm.logger import get_logger
from toeplitz_norm.settings import g_settings
from toeplitz_norm.entries import EntrySequence, sample_entries
from toeplitz_norm.ensembles import SYMMETRIC_KINDS, StructuredMatrix, build_matrix
from toeplitz_norm.linalg import spectral_norm
from toeplitz_norm.trigpoly import TrigProcessKind, certified_sup, default_grid_size

from .exp_config import ExperimentConfig
from .exp_records import TrialRecord, SweepSummary, summarize_rows, sqrt_nlogn

# -----------------------------------------------------------------------------
# Exports
# -----------------------------------------------------------------------------

__all__ = [
    "trial_seed",
    "trial_matrix",
    "dist_label",
    "run_trial",
    "run_cells",
    "run_sweep",
]

# -----------------------------------------------------------------------------
#
#                                 CODE BEGINS
#
# -----------------------------------------------------------------------------

T = TypeVar("T")


def trial_seed(master_seed: int, n: int, replication: int) -> int:
    """
    The substream seed of cell (n, replication).  It depends on nothing
    else, so adding a dimension to a sweep leaves the other cells unchanged.
    """
    seq = np.random.SeedSequence(master_seed, spawn_key=(n, replication))
    return int(seq.generate_state(1, dtype=np.uint64)[0])


def trial_matrix(
    config: ExperimentConfig, n: int, seed: int
) -> tuple[EntrySequence, StructuredMatrix]:
    """sampled entries (mean shift applied) and the matrix built from them"""
    entries = sample_entries(config.specs, config.entry_length(n), seed)

    if config.mean_shift:
        entries = EntrySequence(
            values=entries.values + config.mean_shift,
            specs=entries.specs,
            master_seed=seed,
        )

    return entries, build_matrix(config.ensemble, entries, n)


def dist_label(config: ExperimentConfig) -> str:
    """the CSV "dist" cell: spec labels joined by "|", then any mean shift"""
    label = "|".join(spec.label for spec in config.specs)
    return f"{label}{config.mean_shift:+g}" if config.mean_shift else label


def run_trial(config: ExperimentConfig, n: int, replication: int) -> TrialRecord:
    """
    One replication: sample, build, take the norm, and evaluate whichever
    trigonometric processes the config asks for.  upper_Y and fejer_lower
    are formed from the matrix coefficients, so they apply to every
    symmetric kind; plain_Z reads the raw X_1..X_n.
    """
    started = time.perf_counter()
    seed = trial_seed(config.master_seed, n, replication)
    entries, matrix = trial_matrix(config, n, seed)

    norm = spectral_norm(
        matrix, method=config.norm_method, tol=config.tol, probe_seed=seed
    )
    grid = default_grid_size(n, config.grid_factor)

    upper_Y_sup = fejer_lower = plain_Z_sup = None

    if matrix.kind in SYMMETRIC_KINDS:
        coeffs = EntrySequence.from_values(matrix.coeffs)
        if config.wants(TrigProcessKind.upper_Y):
            upper_Y_sup = certified_sup(coeffs, TrigProcessKind.upper_Y, n, grid)
        if config.wants(TrigProcessKind.fejer_lower):
            fejer_lower = certified_sup(
                coeffs, TrigProcessKind.fejer_lower, n, grid
            ).grid_max

    if config.wants(TrigProcessKind.plain_Z):
        plain_Z_sup = certified_sup(entries, TrigProcessKind.plain_Z, n, grid)

    elapsed_ms = (time.perf_counter() - started) * 1e3 if config.record_timing else 0.0

    return TrialRecord(
        n=n,
        replication=replication,
        seed=seed,
        ensemble=config.ensemble,
        dist=dist_label(config),
        norm=norm,
        ratio_sqrt_nlogn=norm.value / sqrt_nlogn(n) if n > 1 else None,
        ratio_n=norm.value / n,
        upper_Y_sup=upper_Y_sup,
        fejer_lower=fejer_lower,
        plain_Z_sup=plain_Z_sup,
        elapsed_ms=elapsed_ms,
    )


def run_cells(
    config: ExperimentConfig,
    trial: Callable[[ExperimentConfig, int, int], T],
    threads: Optional[int] = None,
) -> list[T]:
    """
    Run `trial(config, n, r)` for every (n, r) cell on worker threads and
    return the results in (n, r) order regardless of completion order.
    """
    if threads is None:
        threads = g_settings.config.threads
    if threads < 1:
        raise ConfigError(f"threads must be >= 1, got {threads}")
    cells = [(n, r) for n in config.n_list for r in range(config.replications)]

    async def run():
        """run the cells in an asyncio context"""
        sem = asyncio.Semaphore(threads)

        async def one(n: int, r: int) -> T:
            async with sem:
                return await asyncio.to_thread(trial, config, n, r)

        return await asyncio.gather(*(one(n, r) for n, r in cells))

    return list(asyncio.run(run()))


def run_sweep(
    config: ExperimentConfig, threads: Optional[int] = None
) -> tuple[list[TrialRecord], SweepSummary]:
    """
    Run R replications for every n of the config.

    Parameters
    ----------
    config:
        The experiment.

    threads:
        Worker count; defaults to the harness settings.

    Returns
    -------
    The records sorted by (n, replication) and their summary.  Uncertified
    iterative norms are kept and flagged, never dropped.
    """
    log = get_logger()
    log.info(
        f"sweep {config.ensemble.value}: n={config.n_list}, "
        f"R={config.replications}, seed={config.master_seed}"
    )

    records = run_cells(config, run_trial, threads)
    records.sort(key=lambda rec: (rec.n, rec.replication))

    plain_Z = {
        n: [r for rec in records if rec.n == n and (r := rec.plain_Z_ratio) is not None]
        for n in config.n_list
    }
    summary = summarize_rows(
        [rec.to_row() for rec in records], config.tol, plain_Z_ratios=plain_Z
    )

    for each in summary.per_n:
        ratio = each.ratio_sqrt_nlogn.mean if each.ratio_sqrt_nlogn else float("nan")
        log.info(
            f"n={each.n}: {each.count} trials, mean ||T||={each.mean_norm:.4f}, "
            f"mean ratio={ratio:.4f}"
        )

    if summary.flagged:
        log.warning(f"{summary.flagged} trials did not certify to tol={config.tol}")

    if summary.sandwich_violations:
        log.warning(f"{summary.sandwich_violations} trials violate the sandwich")

    return records, summary
