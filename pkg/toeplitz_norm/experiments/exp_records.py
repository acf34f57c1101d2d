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

from typing import Optional, Sequence, Mapping
from dataclasses import astuple, fields
import math

# -----------------------------------------------------------------------------
# Public Imports
# -----------------------------------------------------------------------------

import numpy as np
from pydantic import BaseModel, Field
from pydantic.dataclasses import dataclass

# -----------------------------------------------------------------------------
# Private Imports
# -----------------------------------------------------------------------------

from toeplitz_norm.ensembles import EnsembleKind
from toeplitz_norm.linalg import SpectralEstimate, NormMethod
from toeplitz_norm.trigpoly import SupEstimate

# -----------------------------------------------------------------------------
# Exports
# -----------------------------------------------------------------------------

__all__ = [
    "TrialRecord",
    "TrialRow",
    "CSV_COLUMNS",
    "RatioStats",
    "DimensionSummary",
    "SweepSummary",
    "sqrt_nlogn",
    "sandwich_slack",
    "summarize_rows",
]

# -----------------------------------------------------------------------------
#
#                                 CODE BEGINS
#
# -----------------------------------------------------------------------------

# absolute floor of the sandwich tolerance
SANDWICH_ABS_TOL = 1e-9


def sqrt_nlogn(n: int) -> float:
    """sqrt(n ln n); zero at n = 1, which is excluded from ratio statistics"""
    return math.sqrt(n * math.log(n))


def sandwich_slack(norm: float, residual: float, tol: float) -> float:
    return max(SANDWICH_ABS_TOL, tol * norm) + residual


@dataclass(frozen=True)
class TrialRow:
    """
    The CSV view of one trial; field order is the column order.  Optional
    columns are written as empty cells.
    """

    n: int
    replication: int
    seed: int
    ensemble: EnsembleKind
    dist: str
    method: NormMethod
    norm: float
    residual: float
    iterations: int
    ratio_sqrt_nlogn: Optional[float]
    ratio_n: float
    fejer_lower: Optional[float]
    upper_Y_certified: Optional[float]
    elapsed_ms: float

    def csv_cells(self) -> list[str]:
        cells = []
        for value in astuple(self):
            match value:
                case None:
                    cells.append("")
                case float():
                    cells.append(repr(value))
                case EnsembleKind() | NormMethod():
                    cells.append(value.value)
                case _:
                    cells.append(str(value))
        return cells

    @classmethod
    def from_csv_cells(cls, row: Mapping[str, str]) -> "TrialRow":
        return cls(**{col: (row[col] if row[col] != "" else None) for col in CSV_COLUMNS})

    def flagged(self, tol: float) -> bool:
        """True when the norm is not certified to relative accuracy tol"""
        return self.residual > 0 and self.residual > tol * self.norm

    def sandwich_ok(self, tol: float) -> bool:
        if self.fejer_lower is None or self.upper_Y_certified is None:
            return True
        slack = sandwich_slack(self.norm, self.residual, tol)
        return (
            self.fejer_lower <= self.norm + slack
            and self.norm <= self.upper_Y_certified + slack
        )


CSV_COLUMNS = tuple(f.name for f in fields(TrialRow))


@dataclass(frozen=True)
class TrialRecord:
    """
    One replication at one dimension.  `ratio_sqrt_nlogn` is None at n = 1.
    When both processes were computed the record satisfies

        fejer_lower <= norm.value + tol  and  norm.value <= upper certified + tol
    """

    n: int
    replication: int
    seed: int
    ensemble: EnsembleKind
    dist: str
    norm: SpectralEstimate
    ratio_sqrt_nlogn: Optional[float]
    ratio_n: float
    upper_Y_sup: Optional[SupEstimate] = None
    fejer_lower: Optional[float] = None
    plain_Z_sup: Optional[SupEstimate] = None
    elapsed_ms: float = 0.0

    @property
    def plain_Z_ratio(self) -> Optional[float]:
        if self.plain_Z_sup is None or self.n < 2:
            return None
        return self.plain_Z_sup.certified_upper / sqrt_nlogn(self.n)

    def to_row(self) -> TrialRow:
        return TrialRow(
            n=self.n,
            replication=self.replication,
            seed=self.seed,
            ensemble=self.ensemble,
            dist=self.dist,
            method=self.norm.method,
            norm=self.norm.value,
            residual=self.norm.residual,
            iterations=self.norm.iterations,
            ratio_sqrt_nlogn=self.ratio_sqrt_nlogn,
            ratio_n=self.ratio_n,
            fejer_lower=self.fejer_lower,
            upper_Y_certified=(
                self.upper_Y_sup.certified_upper if self.upper_Y_sup else None
            ),
            elapsed_ms=self.elapsed_ms,
        )


# -----------------------------------------------------------------------------
#
#                                 Summary
#
# -----------------------------------------------------------------------------


class RatioStats(BaseModel, extra="forbid"):
    mean: float
    std: float
    min: float
    max: float
    q05: float
    q95: float

    @classmethod
    def from_values(cls, values: Sequence[float]) -> "RatioStats":
        arr = np.asarray(values, dtype=float)
        q05, q95 = np.quantile(arr, [0.05, 0.95])
        return cls(
            mean=float(arr.mean()),
            std=float(arr.std(ddof=1)) if arr.size > 1 else 0.0,
            min=float(arr.min()),
            max=float(arr.max()),
            q05=float(q05),
            q95=float(q95),
        )


class DimensionSummary(BaseModel, extra="forbid"):
    n: int
    count: int
    mean_norm: float
    ratio_sqrt_nlogn: Optional[RatioStats] = None
    ratio_n: RatioStats
    plain_Z_ratio_mean: Optional[float] = None


class SweepSummary(BaseModel, extra="forbid"):
    """
    Aggregates of a sweep.  Flagged (uncertified) rows are excluded from the
    statistics and counted in `flagged`; `n_records` counts every row.
    """

    per_n: list[DimensionSummary] = Field(default_factory=list)
    fitted_c: Optional[float] = None
    fitted_exponent: Optional[float] = None
    sandwich_violations: int = 0
    flagged: int = 0
    n_records: int = 0

    def dimension(self, n: int) -> DimensionSummary:
        return next(each for each in self.per_n if each.n == n)


def summarize_rows(
    rows: Sequence[TrialRow],
    tol: float,
    plain_Z_ratios: Optional[Mapping[int, Sequence[float]]] = None,
) -> SweepSummary:
    """
    Aggregate trial rows into a SweepSummary.

    Parameters
    ----------
    rows:
        The trial rows, in any order; they are sorted by (n, replication).

    tol:
        Relative tolerance used to flag uncertified rows and to check the
        sandwich.

    plain_Z_ratios:
        Optional per-n sup|Z| / sqrt(n ln n) values, which are not part of
        the CSV schema.
    """
    rows = sorted(rows, key=lambda r: (r.n, r.replication))
    plain_Z_ratios = plain_Z_ratios or {}

    kept = [row for row in rows if not row.flagged(tol)]
    summary = SweepSummary(
        n_records=len(rows),
        flagged=len(rows) - len(kept),
        sandwich_violations=sum(not row.sandwich_ok(tol) for row in rows),
    )

    for n in sorted({row.n for row in kept}):
        cell = [row for row in kept if row.n == n]
        ratios = [row.ratio_sqrt_nlogn for row in cell if row.ratio_sqrt_nlogn is not None]
        z_ratios = plain_Z_ratios.get(n)
        summary.per_n.append(
            DimensionSummary(
                n=n,
                count=len(cell),
                mean_norm=float(np.mean([row.norm for row in cell])),
                ratio_sqrt_nlogn=RatioStats.from_values(ratios) if ratios else None,
                ratio_n=RatioStats.from_values([row.ratio_n for row in cell]),
                plain_Z_ratio_mean=float(np.mean(z_ratios)) if z_ratios else None,
            )
        )

    # least squares of norm ~ c sqrt(n ln n) through the origin
    fit = [(row.norm, sqrt_nlogn(row.n)) for row in kept if row.n > 1]
    if fit and (denom := sum(s * s for _, s in fit)) > 0:
        summary.fitted_c = sum(v * s for v, s in fit) / denom

    growth = [(each.n, each.mean_norm) for each in summary.per_n if each.mean_norm > 0]
    if len(growth) >= 2:
        log_n, log_norm = np.log(np.array(growth, dtype=float)).T
        summary.fitted_exponent = float(np.polyfit(log_n, log_norm, 1)[0])

    return summary
