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

from typing import Literal

# -----------------------------------------------------------------------------
# Public Imports
# -----------------------------------------------------------------------------

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    PositiveFloat,
    field_validator,
)

# -----------------------------------------------------------------------------
# Private Imports
# -----------------------------------------------------------------------------

from toeplitz_norm.errors import ConfigError
from toeplitz_norm.entries import DistributionSpec
from toeplitz_norm.ensembles import EnsembleKind, SYMMETRIC_KINDS, coeff_count
from toeplitz_norm.trigpoly import TrigProcessKind, DEFAULT_GRID_FACTOR
from toeplitz_norm.linalg import DEFAULT_TOL

# -----------------------------------------------------------------------------
# Exports
# -----------------------------------------------------------------------------

__all__ = ["ExperimentConfig", "SweepMethod", "find_mismatched_fields"]

# -----------------------------------------------------------------------------
#
#                                 CODE BEGINS
#
# -----------------------------------------------------------------------------

SweepMethod = Literal["dense", "iterative", "auto"]


def find_mismatched_fields(me: BaseModel, other: BaseModel) -> set[str]:
    """used by config models to detect field differences"""
    return {
        field
        for field in type(me).model_fields
        if getattr(me, field) != getattr(other, field)
    }


class ExperimentConfig(BaseModel):
    """
    One Monte Carlo experiment: which ensemble, which entry laws, which
    dimensions, how many replications, and what to compute per trial.

    The JSON form uses "dist" for the spec list and "seed" for the master
    seed; the attribute names are accepted as well.

        {"ensemble": "sym_toeplitz", "dist": [{"kind": "rademacher"}],
         "n_list": [64], "replications": 1, "seed": 7}
    """

    model_config = ConfigDict(extra="forbid", populate_by_name=True, frozen=True)

    ensemble: EnsembleKind
    specs: list[DistributionSpec] = Field(alias="dist", min_length=1)
    n_list: list[int] = Field(min_length=1)
    replications: int = Field(1, ge=1)
    master_seed: int = Field(0, alias="seed", ge=0)
    norm_method: SweepMethod = "auto"
    compute_processes: list[TrigProcessKind] = Field(default_factory=list)
    mean_shift: float = Field(0.0, allow_inf_nan=False)
    tol: PositiveFloat = DEFAULT_TOL

    # M = grid_factor * max(n, 8); at least 4 keeps M above pi * n
    grid_factor: int = Field(DEFAULT_GRID_FACTOR, ge=4)

    record_timing: bool = False

    @field_validator("n_list")
    @classmethod
    def _check_n_list(cls, n_list: list[int]) -> list[int]:
        if bad := [n for n in n_list if n < 1]:
            raise ValueError(f"dimension must be ≥ 1, got {bad[0]}")
        if any(a >= b for a, b in zip(n_list, n_list[1:])):
            raise ValueError(f"n_list must be strictly ascending, got {n_list}")
        return n_list

    @field_validator("compute_processes")
    @classmethod
    def _check_processes(cls, kinds: list[TrigProcessKind]) -> list[TrigProcessKind]:
        if len(set(kinds)) != len(kinds):
            raise ValueError(f"compute_processes has duplicates: {kinds}")
        return kinds

    def __sub__(self, other: "ExperimentConfig") -> set[str]:
        """find field differences"""
        return find_mismatched_fields(self, other)

    # -------------------------------------------------------------------------
    # derived values
    # -------------------------------------------------------------------------

    def wants(self, kind: TrigProcessKind) -> bool:
        return kind in self.compute_processes

    @property
    def sandwich_enabled(self) -> bool:
        return (
            self.ensemble in SYMMETRIC_KINDS
            and self.wants(TrigProcessKind.upper_Y)
            and self.wants(TrigProcessKind.fejer_lower)
        )

    def entry_length(self, n: int) -> int:
        """entries drawn per trial; plain_Z needs X_1..X_n"""
        count = coeff_count(self.ensemble, n)
        if self.wants(TrigProcessKind.plain_Z):
            count = max(count, n + 1)
        return count

    @property
    def effective_mean(self) -> float:
        """
        The common mean m of every coefficient (spec means plus mean_shift),
        so that E T_n = m J_n.
        """
        means = {spec.mean for spec in self.specs}
        if len(means) != 1:
            raise ConfigError(
                f"entry laws have different means {sorted(means)}; "
                "E T_n is not a multiple of the all-ones matrix"
            )
        return means.pop() + self.mean_shift

    def to_json_dict(self) -> dict:
        return self.model_dump(mode="json", by_alias=True)
