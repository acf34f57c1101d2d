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

from typing import Sequence

from pydantic import BaseModel, PositiveFloat

from toeplitz_norm.entries import DistributionSpec

__all__ = ["BoundConstants", "CLASSICAL_B"]

# Hoeffding / Gaussian value of b for Rademacher or standard normal entries
CLASSICAL_B = 0.5


class BoundConstants(BaseModel, extra="forbid", frozen=True):
    """
    The unspecified absolute constants of the bound calculators.  None of
    them has a known value; all default to 1 so the calculators report the
    shape of each bound, and experiments fit empirical constants separately.

    Attributes
    ----------
    K_dudley:
        Constant of the Dudley entropy bound.

    b_subg:
        Constant b of the Hoeffding-type tail for weighted sums.

    c_tail:
        Constant c of the Dudley tail inequality.

    K_kt:
        Constant of the Kashin-Tzafriri lower bound.

    A_conc:
        Constant A of the concentration hypotheses (a.s. bound or LSI).

    B_abs:
        Lower bound B on E|X_j|.
    """

    K_dudley: PositiveFloat = 1.0
    b_subg: PositiveFloat = 1.0
    c_tail: PositiveFloat = 1.0
    K_kt: PositiveFloat = 1.0
    A_conc: PositiveFloat = 1.0
    B_abs: PositiveFloat = 1.0

    @classmethod
    def for_entries(cls, specs: Sequence[DistributionSpec], **overrides):
        """
        Defaults adjusted to an entry family: b = 1/2 when every law is
        Rademacher or standard Gaussian, A from the a.s. bounds when all laws
        are bounded, B from the smallest E|X|.
        """
        values = dict()
        kinds = {spec.root_kind for spec in specs}
        if kinds <= {"rademacher", "gaussian_std"}:
            values["b_subg"] = CLASSICAL_B

        bounds = [spec.centered_bound for spec in specs]
        if None not in bounds and max(bounds) > 0:
            values["A_conc"] = max(bounds)

        if (b_abs := min(spec.abs_mean for spec in specs)) > 0:
            values["B_abs"] = b_abs

        values.update(overrides)
        return cls.model_validate(values)
