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

from .trig_process import (
    TrigProcessKind,
    process_degree,
    process_coefficients,
    evaluate_process_grid,
    evaluate_process_direct,
)
from .trig_sup import (
    SupEstimate,
    certified_sup,
    rayleigh_lower_bound,
    default_grid_size,
    DEFAULT_GRID_FACTOR,
)
from .trig_metric import pseudometric_d, cosine_features
