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

from typing import Annotated, Optional
import math

# -----------------------------------------------------------------------------
# Public Imports
# -----------------------------------------------------------------------------

import numpy as np
from pydantic import Field
from pydantic.dataclasses import dataclass

# -----------------------------------------------------------------------------
# Private Imports
# -----------------------------------------------------------------------------

from toeplitz_norm.errors import GridError, EnsembleError
from toeplitz_norm.entries import EntrySequence
from toeplitz_norm.ensembles import EnsembleKind, StructuredMatrix
from .trig_process import TrigProcessKind, process_degree, evaluate_process_grid

# -----------------------------------------------------------------------------
# Exports
# -----------------------------------------------------------------------------

__all__ = [
    "SupEstimate",
    "certified_sup",
    "rayleigh_lower_bound",
    "default_grid_size",
    "DEFAULT_GRID_FACTOR",
]

# -----------------------------------------------------------------------------
#
#                                 CODE BEGINS
#
# -----------------------------------------------------------------------------

DEFAULT_GRID_FACTOR = 64


def default_grid_size(n: int, grid_factor: int = DEFAULT_GRID_FACTOR) -> int:
    """M = grid_factor * max(n, 8); with the default factor 1/(1 - pi d/M) < 1.052"""
    return grid_factor * max(n, 8)


@dataclass(frozen=True)
class SupEstimate:
    """
    Grid maximum of |p| for a degree-d cosine polynomial p on x = i/M.

    grid_max is attained by p, so it is a lower bound on sup|p|.  Bernstein's
    inequality |p'| <= 2 pi d sup|p| and a worst-case offset of 1/(2M) from
    the nearest grid point give sup|p| <= grid_max / (1 - pi d / M).
    """

    grid_max: Annotated[float, Field(ge=0.0)]
    argmax_x: float
    certified_upper: float
    grid_size: int
    degree: int


def certified_sup(
    entries: EntrySequence,
    kind: TrigProcessKind,
    n: int,
    M: Optional[int] = None,
) -> SupEstimate:
    """
    Grid supremum of the process together with its Bernstein enclosure.

    Parameters
    ----------
    entries:
        Coefficient source; see `process_coefficients` for the indices read.

    kind:
        Which process.

    n:
        Matrix dimension the process belongs to.

    M:
        Grid size, must exceed pi * d.  Defaults to `default_grid_size(n)`.
    """
    d = process_degree(kind, n)
    if M is None:
        M = default_grid_size(n)

    if M <= math.pi * d:
        raise GridError(f"grid size {M} must exceed pi*d = {math.pi * d:.3f}")

    values = np.abs(evaluate_process_grid(entries, kind, n, M))
    idx = int(np.argmax(values))
    grid_max = float(values[idx])

    return SupEstimate(
        grid_max=grid_max,
        argmax_x=idx / M,
        certified_upper=grid_max / (1.0 - math.pi * d / M),
        grid_size=M,
        degree=d,
    )


def rayleigh_lower_bound(M_struct: StructuredMatrix, M: Optional[int] = None) -> float:
    """
    Largest Fejer-weighted Rayleigh quotient of a symmetric Toeplitz matrix
    over the grid; never above its spectral norm.
    """
    if M_struct.kind != EnsembleKind.sym_toeplitz:
        raise EnsembleError(f"expected a sym_toeplitz matrix, got {M_struct.kind.value}")

    entries = EntrySequence.from_values(M_struct.coeffs)
    return certified_sup(entries, TrigProcessKind.fejer_lower, M_struct.n, M).grid_max
