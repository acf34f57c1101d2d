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

from enum import Enum

__all__ = ["EnsembleKind", "SYMMETRIC_KINDS", "coeff_count"]


class EnsembleKind(str, Enum):
    """
    The structured matrix families.  Entry rules, with 1-based (j, k):

        sym_toeplitz          X_{|j-k|}
        nonsym_toeplitz       X_{k-j}
        hankel                X_{j+k-1}
        sym_circulant         X_{|j-k|} with X_{n-j} = X_j
        palindromic_toeplitz  X_{|j-k|} with X_{n-j-1} = X_j
    """

    sym_toeplitz = "sym_toeplitz"
    nonsym_toeplitz = "nonsym_toeplitz"
    hankel = "hankel"
    sym_circulant = "sym_circulant"
    palindromic_toeplitz = "palindromic_toeplitz"


SYMMETRIC_KINDS = frozenset(
    {
        EnsembleKind.sym_toeplitz,
        EnsembleKind.sym_circulant,
        EnsembleKind.palindromic_toeplitz,
    }
)


def coeff_count(kind: EnsembleKind, n: int) -> int:
    """number of stored coefficients (and of entries consumed) for dimension n"""
    return n if kind in SYMMETRIC_KINDS else 2 * n - 1
