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
from typing import Annotated

from pydantic import Field
from pydantic.dataclasses import dataclass

__all__ = ["NormMethod", "SpectralEstimate"]


class NormMethod(str, Enum):
    dense = "dense"
    lanczos = "lanczos"
    golub_kahan = "golub_kahan"
    dft_exact = "dft_exact"


@dataclass(frozen=True)
class SpectralEstimate:
    """
    An operator norm value and how it was obtained.

    For the iterative methods `value` is a Ritz value, hence never above the
    true norm, and `residual` bounds the distance from the extreme Ritz
    values to eigenvalues (singular values) of the matrix.  The dense and DFT
    methods report residual 0.
    """

    value: Annotated[float, Field(ge=0.0)]
    method: NormMethod
    residual: float = Field(0.0, ge=0.0)
    iterations: int = 0
    matvecs: int = 0

    def is_certified(self, tol: float) -> bool:
        """True when the residual certifies relative accuracy tol"""
        return self.residual == 0.0 or self.residual <= tol * self.value
