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

import logging

# -----------------------------------------------------------------------------
# Public Imports
# -----------------------------------------------------------------------------

from rich.console import Console
from rich.logging import RichHandler

# -----------------------------------------------------------------------------
# Exports
# -----------------------------------------------------------------------------

__all__ = ["get_logger", "setup_logging"]

# -----------------------------------------------------------------------------
#
#                                 CODE BEGINS
#
# -----------------------------------------------------------------------------

_g_logger_name = "toeplitz_norm"


def setup_logging(level: int | str = logging.INFO) -> logging.Logger:
    """
    Configure the package logger to write through a rich handler on stderr.
    Calling this more than once only changes the level; stdout is left free
    for the JSON documents that the CLI commands emit.
    """
    log = logging.getLogger(_g_logger_name)
    log.setLevel(level)

    if not any(isinstance(h, RichHandler) for h in log.handlers):
        handler = RichHandler(
            console=Console(stderr=True), show_path=False, show_time=False
        )
        handler.setFormatter(logging.Formatter("%(message)s"))
        log.addHandler(handler)

    return log


def get_logger() -> logging.Logger:
    """return the package logger"""
    return logging.getLogger(_g_logger_name)
