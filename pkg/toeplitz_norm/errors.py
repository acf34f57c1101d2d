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
# Exports
# -----------------------------------------------------------------------------

__all__ = [
    "ToeplitzNormError",
    "ConfigError",
    "EntriesError",
    "EnsembleError",
    "DenseCapError",
    "GridError",
    "BoundInputError",
    "InvariantViolation",
    "ReportError",
]

# -----------------------------------------------------------------------------
#
#                                 CODE BEGINS
#
# -----------------------------------------------------------------------------


class ToeplitzNormError(Exception):
    """
    Base class for every error raised by this package.  The `exit_code` is
    used by the CLI to translate the error into a process exit status.
    """

    exit_code = 3


class ConfigError(ToeplitzNormError, ValueError):
    """malformed, invalid, or contradictory configuration"""

    exit_code = 2


class EntriesError(ToeplitzNormError, ValueError):
    """empty spec list, zero length, or too few sampled entries"""


class EnsembleError(ToeplitzNormError, ValueError):
    """wrong ensemble kind, bad dimension, or index out of range"""


class DenseCapError(ToeplitzNormError, ValueError):
    """a dense O(n^2) path was requested for n above the configured cap"""


class GridError(ToeplitzNormError, ValueError):
    """trigonometric evaluation grid is too coarse for the polynomial degree"""


class BoundInputError(ToeplitzNormError, ValueError):
    """invalid input to one of the bound calculators"""


class ReportError(ToeplitzNormError):
    """nothing to report, or the output path cannot be written"""


class InvariantViolation(ToeplitzNormError):
    """an inequality that must hold on every trial did not"""

    exit_code = 4
