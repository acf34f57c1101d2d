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

from .bnd_constants import BoundConstants, CLASSICAL_B
from .bnd_covering import covering_number_bound, greedy_cover
from .bnd_dudley import (
    DudleyBound,
    dudley_bound,
    gaussian_tail_moment,
    dudley_tail_bound,
)
from .bnd_tails import (
    Hypothesis,
    GrowthRegime,
    hoeffding_tail_bound,
    concentration_tail_bound,
    lipschitz_norm_bound,
    limsup_threshold,
    weak_limsup_threshold,
    mean_growth_regime,
)
from .bnd_fejer import fejer_weights, fejer_norm_inequalities, kt_lower_bound
