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
# System Imports
# -----------------------------------------------------------------------------

from dataclasses import dataclass, field

# -----------------------------------------------------------------------------
# Private Imports
# -----------------------------------------------------------------------------

from .settings_def import HarnessSettings

# -----------------------------------------------------------------------------
# Exports
# -----------------------------------------------------------------------------

__all__ = ["g_settings"]


@dataclass
class HarnessGlobals:
    """
    Define a class to encapsulate the global variables used by this package.

    Attributes
    ----------
    config: HarnessSettings
        The active harness settings.  Defaults apply until `settings_init` is
        called, typically by the CLI at startup.
    """

    config: HarnessSettings = field(default_factory=HarnessSettings)


# -----------------------------------------------------------------------------
# Globals
# -----------------------------------------------------------------------------

# the global variables used by this package
g_settings = HarnessGlobals()
