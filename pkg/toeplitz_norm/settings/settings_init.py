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

from os import environ
from typing import Optional

from pydantic import ValidationError

from toeplitz_norm.errors import ConfigError
from .settings_def import HarnessSettings
from .settings_globals import g_settings

ENV_THREADS = "TNORM_THREADS"


def settings_init(overrides: Optional[dict] = None) -> HarnessSettings:
    """
    Build the harness settings from defaults, the TNORM_THREADS environment
    variable, and any explicit overrides (highest precedence).  The result
    is stored in `g_settings.config` and returned.
    """

    values = dict()
    if threads := environ.get(ENV_THREADS):
        values["threads"] = threads

    values.update({k: v for k, v in (overrides or {}).items() if v is not None})

    try:
        g_settings.config = HarnessSettings.model_validate(values)

    except ValidationError as exc:
        raise ConfigError(f"Failed to load harness settings: {str(exc)}")

    return g_settings.config
