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

from .exp_config import ExperimentConfig, SweepMethod, find_mismatched_fields
from .exp_records import (
    TrialRecord,
    TrialRow,
    CSV_COLUMNS,
    RatioStats,
    DimensionSummary,
    SweepSummary,
    sqrt_nlogn,
    summarize_rows,
)
from .exp_sweep import (
    trial_seed,
    trial_matrix,
    dist_label,
    run_trial,
    run_cells,
    run_sweep,
)
from .exp_mean_shift import (
    MeanShiftTrial,
    MeanShiftCell,
    MeanShiftReport,
    mean_shift_experiment,
)
from .exp_tails import TailPoint, TailProfile, tail_profile, concentration_constant
from .exp_equivalence import EquivalenceCase, EquivalenceReport, equivalence_suite
