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

from pathlib import Path

import click

from toeplitz_norm.linalg import DEFAULT_TOL

__all__ = ["opt_seed", "opt_out", "opt_tol", "opt_input"]


def opt_seed(**kwargs):
    """master seed option, the one input that fixes every random draw"""
    default_kw = dict(type=click.IntRange(min=0), help="Master seed")
    default_kw.update(kwargs)
    return click.option("--seed", "seed", **default_kw)


def opt_out(**kwargs):
    default_kw = dict(
        type=click.Path(dir_okay=False, writable=True, path_type=Path),
        help="Output file (default: stdout)",
    )
    default_kw.update(kwargs)
    return click.option("--out", "out_path", **default_kw)


def opt_tol(**kwargs):
    default_kw = dict(
        type=click.FloatRange(min=0, min_open=True),
        default=DEFAULT_TOL,
        show_default=True,
        help="Relative tolerance",
    )
    default_kw.update(kwargs)
    return click.option("--tol", **default_kw)


def opt_input(**kwargs):
    default_kw = dict(
        type=click.Path(exists=True, dir_okay=False, path_type=Path),
        required=True,
        help="Input file",
    )
    default_kw.update(kwargs)
    return click.option("--in", "in_path", **default_kw)
