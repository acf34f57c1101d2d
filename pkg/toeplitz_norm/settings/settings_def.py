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
# Public Imports
# -----------------------------------------------------------------------------

from pydantic import BaseModel, Field

# -----------------------------------------------------------------------------
# Exports
# -----------------------------------------------------------------------------

__all__ = ["HarnessSettings", "DEFAULT_DENSE_CAP"]

# -----------------------------------------------------------------------------
#
#                                 CODE BEGINS
#
# -----------------------------------------------------------------------------

DEFAULT_DENSE_CAP = 4096

# -----------------------------------------------------------------------------
# Use pydantic models to validate the harness settings.  Configure pydantic to
# prevent the User from providing (accidentally) any fields that are not
# specifically supported; via the extra="forbid" config.
# -----------------------------------------------------------------------------


class HarnessSettings(BaseModel, extra="forbid", frozen=True):
    """
    Process-wide knobs that are not part of an experiment definition.

    Attributes
    ----------
    threads:
        Number of worker threads used to run sweep replications.  Taken from
        the TNORM_THREADS environment variable when present.

    dense_cap:
        Largest dimension for which a dense n x n array may be formed.

    probe_attempts:
        Number of Krylov runs (each with a fresh probe vector) that the
        iterative norm solver makes before reporting an uncertified value.

    log_level:
        Level name for the package logger.
    """

    threads: int = Field(1, ge=1)
    dense_cap: int = Field(DEFAULT_DENSE_CAP, ge=1)
    probe_attempts: int = Field(2, ge=1)
    log_level: str = "INFO"
