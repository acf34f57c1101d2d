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

# =============================================================================
# Tail inequalities for weighted sums and for ||T_n||, and the almost sure
# growth thresholds derived from them via Borel-Cantelli.
# =============================================================================

# -----------------------------------------------------------------------------
# System Imports
# -----------------------------------------------------------------------------

from typing import Literal
import math

# -----------------------------------------------------------------------------
# Public Imports
# -----------------------------------------------------------------------------

import numpy as np

# -----------------------------------------------------------------------------
# Private Imports
# -----------------------------------------------------------------------------

from toeplitz_norm.errors import BoundInputError

# -----------------------------------------------------------------------------
# Exports
# -----------------------------------------------------------------------------

__all__ = [
    "Hypothesis",
    "GrowthRegime",
    "hoeffding_tail_bound",
    "concentration_tail_bound",
    "lipschitz_norm_bound",
    "limsup_threshold",
    "weak_limsup_threshold",
    "mean_growth_regime",
]

# -----------------------------------------------------------------------------
#
#                                 CODE BEGINS
#
# -----------------------------------------------------------------------------

Hypothesis = Literal["bounded", "lsi"]

GrowthRegime = Literal["mean_dominated", "fluctuation_dominated", "intermediate"]


def _positive(**values: float):
    for name, value in values.items():
        if not value > 0:
            raise BoundInputError(f"{name} must be positive, got {value}")


def _nlogn(n: int) -> float:
    if n < 2:
        raise BoundInputError(f"n must be >= 2 for n log n rates, got {n}")
    return n * math.log(n)


def hoeffding_tail_bound(a_vec, t: float, b: float) -> float:
    """
    P[|sum_j a_j X_j| >= t] <= 2 exp(-b t^2 / sum_j a_j^2) for independent,
    symmetric, uniformly subgaussian X_j.  Capped at 1.
    """
    _positive(t=t, b=b)
    a = np.asarray(a_vec, dtype=float)
    if not (sq_sum := float(a @ a)) > 0:
        raise BoundInputError("weight vector must not be all zero")

    return min(1.0, 2.0 * math.exp(-b * t * t / sq_sum))


def concentration_tail_bound(
    hypothesis: Hypothesis, A: float, n: int, t: float
) -> float:
    """
    Deviation bound P[||T_n|| >= E||T_n|| + t].

    The norm is a convex 2 sqrt(n)-Lipschitz function of (X_0..X_{n-1}), so
    entries bounded by A give exp(-t^2 / (32 A^2 n)), and entries satisfying
    a log-Sobolev inequality with constant A give exp(-t^2 / (4 A n)).
    """
    _positive(A=A, t=t, n=n)

    match hypothesis:
        case "bounded":
            exponent = t * t / (32.0 * A * A * n)
        case "lsi":
            exponent = t * t / (4.0 * A * n)
        case _:
            raise BoundInputError(f"unknown hypothesis {hypothesis!r}")

    return min(1.0, math.exp(-exponent))


def lipschitz_norm_bound(coeffs) -> float:
    """
    ||T_n|| <= 2 sqrt(n sum_j X_j^2) for the symmetric Toeplitz matrix with
    first row `coeffs`, from T_n = sum_j X_j M_j and ||M_j|| <= 2.
    """
    x = np.asarray(coeffs, dtype=float)
    return 2.0 * math.sqrt(x.size * float(x @ x))


def limsup_threshold(
    n: int, c1: float, A: float, hypothesis: Hypothesis = "bounded"
) -> tuple[float, float]:
    """
    The level c1 sqrt(n log n) + t_n exceeded with probability at most
    1/n^2, with t_n solving concentration_tail_bound(...) = 1/n^2.

    Returns
    -------
    (level, probability)
    """
    _positive(c1=c1, A=A)
    nlogn = _nlogn(n)

    match hypothesis:
        case "bounded":
            t = 8.0 * A * math.sqrt(nlogn)
        case "lsi":
            t = math.sqrt(8.0 * A * nlogn)
        case _:
            raise BoundInputError(f"unknown hypothesis {hypothesis!r}")

    level = c1 * math.sqrt(nlogn) + t
    return level, concentration_tail_bound(hypothesis, A, n, t)


def weak_limsup_threshold(n: int, c: float, c1: float) -> tuple[float, float]:
    """
    Symmetrization threshold at the sqrt(n) log n scale for mean-zero
    subgaussian entries.  With an independent copy T'_n,

        P[||T'_n|| <= s] P[||T_n|| >= s + t] <= 2 exp(-c t^2 / (n log n)),

    and Chebyshev gives P[||T'_n|| <= s] >= 1 - c1 sqrt(n log n) / s.  The
    choices s = 2 c1 sqrt(n log n), t = sqrt(2n/c) log n give 4/n^2.

    Returns
    -------
    (s + t, probability bound)
    """
    _positive(c=c, c1=c1)
    nlogn = _nlogn(n)

    s = 2.0 * c1 * math.sqrt(nlogn)
    t = math.sqrt(2.0 * n / c) * math.log(n)
    symmetric_tail = min(1.0, 2.0 * math.exp(-c * t * t / nlogn))
    copy_below_s = 1.0 - c1 * math.sqrt(nlogn) / s

    return s + t, min(1.0, symmetric_tail / copy_below_s)


def mean_growth_regime(
    mean_norm: float, n: int, small: float = 0.1
) -> GrowthRegime:
    """
    Compare ||E T_n|| with the two fluctuation scales.  "mean_dominated" when
    sqrt(n) log n / ||E T_n|| <= small (the strong law ||T_n|| / ||E T_n|| -> 1
    applies), "fluctuation_dominated" when ||E T_n|| / sqrt(n log n) <= small,
    else "intermediate".
    """
    _positive(small=small)
    nlogn = _nlogn(n)

    if mean_norm > 0 and math.sqrt(n) * math.log(n) / mean_norm <= small:
        return "mean_dominated"
    if mean_norm / math.sqrt(nlogn) <= small:
        return "fluctuation_dominated"
    return "intermediate"
