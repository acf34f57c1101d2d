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

from fractions import Fraction
import math

import numpy as np

from toeplitz_norm.errors import BoundInputError

__all__ = ["fejer_weights", "fejer_norm_inequalities", "kt_lower_bound"]


def fejer_weights(n: int) -> np.ndarray:
    """
    Weights of the lower-bound process written as sum_j a_j X_j phi_j(x)
    with unit-norm trigonometric phi_j: a_0 = 1, a_j = sqrt(2) (1 - j/n).
    """
    if n < 1:
        raise BoundInputError(f"n must be >= 1, got {n}")

    a = math.sqrt(2.0) * (1.0 - np.arange(n) / n)
    a[0] = 1.0
    return a


def _power_sum(m: int, p: int) -> int:
    """sum_{k=1}^m k^p for p in (2, 4)"""
    match p:
        case 2:
            return m * (m + 1) * (2 * m + 1) // 6
        case 4:
            return m * (m + 1) * (2 * m + 1) * (3 * m * m + 3 * m - 1) // 30
    raise ValueError(p)


def fejer_norm_inequalities(n: int) -> tuple[bool, bool]:
    """
    Exact rational check of ||a||_2 > sqrt(n)/2 and ||a||_4 < 2 n^{1/4} for
    the Fejer weights, compared as ||a||_2^2 > n/4 and ||a||_4^4 < 16 n.

    With k = n - j, sum_{j=1}^{n-1} (1 - j/n)^p = n^{-p} sum_{k=1}^{n-1} k^p.
    """
    if n < 1:
        raise BoundInputError(f"n must be >= 1, got {n}")

    l2_sq = 1 + Fraction(2 * _power_sum(n - 1, 2), n**2)
    l4_4 = 1 + Fraction(4 * _power_sum(n - 1, 4), n**4)

    return l2_sq > Fraction(n, 4), l4_4 < 16 * n


def kt_lower_bound(a_vec, K: float) -> float:
    """
    K ||a||_2 sqrt(log(||a||_2 / ||a||_4)), the lower bound on
    E sup_x |sum_j a_j X_j phi_j(x)|.  Zero when ||a||_2 = ||a||_4.
    """
    if K <= 0:
        raise BoundInputError(f"K must be positive, got {K}")

    a = np.asarray(a_vec, dtype=float)
    if not np.any(a):
        raise BoundInputError("weight vector must not be all zero")

    l2 = float(np.linalg.norm(a, 2))
    l4 = float(np.linalg.norm(a, 4))
    return K * l2 * math.sqrt(max(0.0, math.log(l2 / l4)))
