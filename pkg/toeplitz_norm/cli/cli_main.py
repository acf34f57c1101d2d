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

from typing import Optional

# -----------------------------------------------------------------------------
# Public Imports
# -----------------------------------------------------------------------------

import click

# -----------------------------------------------------------------------------
# Private Imports
# -----------------------------------------------------------------------------

from toeplitz_norm.errors import ToeplitzNormError
from toeplitz_norm.logger import get_logger, setup_logging
from toeplitz_norm.settings import settings_init

# -----------------------------------------------------------------------------
# Exports
# -----------------------------------------------------------------------------

__all__ = ["cli"]

# -----------------------------------------------------------------------------
#
#                                 CODE BEGINS
#
# -----------------------------------------------------------------------------


class ToeplitzNormGroup(click.Group):
    """
    Translate package errors into a logged message and the error's exit
    code: 2 for configuration errors, 3 for runtime errors, 4 for invariant
    violations.
    """

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except ToeplitzNormError as exc:
            get_logger().error(f"{type(exc).__name__}: {exc}")
            ctx.exit(exc.exit_code)


@click.group(cls=ToeplitzNormGroup)
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"]),
    default="INFO",
    help="Logging level",
)
@click.option(
    "--threads",
    type=int,
    help="Worker threads for sweeps (overrides $TNORM_THREADS)",
)
def cli(log_level: str, threads: Optional[int]):
    """
    Random structured matrices, their spectral norms, and the bounds on them
    """
    setup_logging(log_level)
    settings_init(dict(threads=threads, log_level=log_level))
