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

from typing import Optional
import math

import numpy as np
from pydantic import BaseModel
from pydantic.dataclasses import dataclass

from toeplitz_norm.errors import ConfigError
from toeplitz_norm.logger import get_logger
from toeplitz_norm.linalg import spectral_norm
from toeplitz_norm.bounds import GrowthRegime, mean_growth_regime

from .exp_config import ExperimentConfig
from .exp_sweep import run_cells, trial_seed, trial_matrix

__all__ = ["MeanShiftTrial", "MeanShiftCell", "MeanShiftReport", "mean_shift_experiment"]


@dataclass(frozen=True)
class MeanShiftTrial:
    n: int
    replication: int
    norm: float
    centered_norm: float


class MeanShiftCell(BaseModel, extra="forbid"):
    """
    Trajectories at one n.  ratio_n = ||T_n|| / n tends to |m|;
    centered_ratio = ||T_n - m J_n|| / (sqrt(n) ln n) stays bounded;
    norm_over_mean = ||T_n|| / ||E T_n|| tends to 1.
    """

    n: int
    ratio_n: list[float]
    centered_ratio: list[float]
    norm_over_mean: list[float]
    mean_ratio_n: float
    max_centered_ratio: float
    mean_norm_over_mean: float
    regime: GrowthRegime


class MeanShiftReport(BaseModel, extra="forbid"):
    m: float
    per_n: list[MeanShiftCell]

    def cell(self, n: int) -> Optional[MeanShiftCell]:
        return next((each for each in self.per_n if each.n == n), None)


def mean_shift_experiment(
    config: ExperimentConfig, threads: Optional[int] = None
) -> MeanShiftReport:
    """
    The strong law for entries with common mean m != 0.  T_n - m J_n is the
    same structured matrix built from the centered coefficients, so it is
    obtained by shifting every stored coefficient by -m.
    """
    m = config.effective_mean
    if m == 0.0:
        raise ConfigError("mean shift experiment needs a nonzero mean m")
    if config.n_list[0] < 2:
        raise ConfigError("mean shift experiment needs every n >= 2")

    def trial(cfg: ExperimentConfig, n: int, r: int) -> MeanShiftTrial:
        seed = trial_seed(cfg.master_seed, n, r)
        _, matrix = trial_matrix(cfg, n, seed)
        kw = dict(method=cfg.norm_method, tol=cfg.tol, probe_seed=seed)
        return MeanShiftTrial(
            n=n,
            replication=r,
            norm=spectral_norm(matrix, **kw).value,
            centered_norm=spectral_norm(matrix.shifted(-m), **kw).value,
        )

    trials = run_cells(config, trial, threads)
    log = get_logger()
    report = MeanShiftReport(m=m, per_n=[])

    for n in config.n_list:
        cell = [t for t in trials if t.n == n]
        mean_norm = abs(m) * n
        ratio_n = [t.norm / n for t in cell]
        centered = [t.centered_norm / (math.sqrt(n) * math.log(n)) for t in cell]
        over_mean = [t.norm / mean_norm for t in cell]

        report.per_n.append(
            MeanShiftCell(
                n=n,
                ratio_n=ratio_n,
                centered_ratio=centered,
                norm_over_mean=over_mean,
                mean_ratio_n=float(np.mean(ratio_n)),
                max_centered_ratio=float(np.max(centered)),
                mean_norm_over_mean=float(np.mean(over_mean)),
                regime=mean_growth_regime(mean_norm, n),
            )
        )
        log.info(
            f"n={n}: mean ||T||/n={report.per_n[-1].mean_ratio_n:.4f} "
            f"(|m|={abs(m):g}), max centered ratio={max(centered):.4f}"
        )

    return report
