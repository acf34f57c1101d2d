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

from typing import Optional, Sequence
import math

import numpy as np
from pydantic import BaseModel

from toeplitz_norm.errors import ConfigError
from toeplitz_norm.logger import get_logger
from toeplitz_norm.bounds import Hypothesis, concentration_tail_bound

from .exp_config import ExperimentConfig
from .exp_sweep import run_cells, run_trial

__all__ = ["TailPoint", "TailProfile", "tail_profile", "concentration_constant"]

# allowed excess of the empirical tail over the bound, in binomial SEs
SE_SLACK = 3.0


class TailPoint(BaseModel, extra="forbid"):
    n: int
    t: float
    empirical_tail: float
    analytic_bound: float
    std_error: float
    dominated: bool


class TailProfile(BaseModel, extra="forbid"):
    hypothesis: Hypothesis
    A: float
    points: list[TailPoint]

    @property
    def all_dominated(self) -> bool:
        return all(p.dominated for p in self.points)


def concentration_constant(config: ExperimentConfig, hypothesis: Hypothesis) -> float:
    """
    A for the chosen hypothesis: the largest a.s. bound |X_j| <= A for
    "bounded", the largest log-Sobolev constant for "lsi".
    """
    match hypothesis:
        case "bounded":
            values = [spec.as_bound for spec in config.specs]
        case "lsi":
            values = [spec.lsi_constant for spec in config.specs]
        case _:
            raise ConfigError(f"unknown hypothesis {hypothesis!r}")

    if None in values:
        raise ConfigError(
            f"the {hypothesis} concentration bound does not apply to "
            f"{[spec.label for spec in config.specs]}"
        )
    if not (A := max(values)) > 0:
        raise ConfigError("concentration constant A must be positive")
    return A


def tail_profile(
    config: ExperimentConfig,
    thresholds: Sequence[float],
    hypothesis: Hypothesis = "bounded",
    threads: Optional[int] = None,
) -> TailProfile:
    """
    Empirical P[||T_n|| >= mean + t] over the R replications of each n,
    against the concentration bound.  A point is dominated when the
    empirical fraction is at most the bound plus three binomial standard
    errors.  t = 0 is reported with the trivial bound 1.
    """
    A = concentration_constant(config, hypothesis)
    log = get_logger()

    bare = config.model_copy(update=dict(compute_processes=[]))
    records = run_cells(bare, run_trial, threads)
    R = config.replications
    points = []

    for n in config.n_list:
        norms = np.array([rec.norm.value for rec in records if rec.n == n])
        mean = float(norms.mean())

        for t in thresholds:
            p_hat = float(np.mean(norms >= mean + t))
            bound = concentration_tail_bound(hypothesis, A, n, t) if t > 0 else 1.0
            se = math.sqrt(p_hat * (1.0 - p_hat) / R)
            point = TailPoint(
                n=n,
                t=t,
                empirical_tail=p_hat,
                analytic_bound=bound,
                std_error=se,
                dominated=p_hat <= bound + SE_SLACK * se,
            )
            if not point.dominated:
                log.warning(
                    f"n={n}, t={t:g}: empirical tail {p_hat:.4g} exceeds "
                    f"bound {bound:.4g}"
                )
            points.append(point)

    return TailProfile(hypothesis=hypothesis, A=A, points=points)
