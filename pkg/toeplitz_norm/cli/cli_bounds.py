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

import json
import math

import click
import numpy as np

from toeplitz_norm.bounds import (
    BoundConstants,
    covering_number_bound,
    dudley_bound,
    dudley_tail_bound,
    gaussian_tail_moment,
    concentration_tail_bound,
    fejer_weights,
    fejer_norm_inequalities,
    kt_lower_bound,
    limsup_threshold,
    weak_limsup_threshold,
)

from .cli_main import cli

__all__ = ["cli_bounds", "bounds_document"]


def bounds_document(n: int, consts: BoundConstants, c1: float = 1.0) -> dict:
    """
    Every bound value at dimension n.  Rates in n log n are reported as None
    at n = 1.
    """
    dudley = dudley_bound(n, consts)
    alpha = dudley.integral_value / consts.K_dudley
    s = math.sqrt(2.0 * math.log(2.0 * n))
    tail_bound, tail_exact = gaussian_tail_moment(s)

    a = fejer_weights(n)
    l2_ok, l4_ok = fejer_norm_inequalities(n)

    doc = dict(
        n=n,
        constants=consts.model_dump(),
        covering_number_eps_1=covering_number_bound(n, 1.0),
        dudley=dudley._asdict(),
        dudley_tail_at_alpha=dudley_tail_bound(alpha, alpha, consts.c_tail),
        gaussian_tail_moment=dict(s=s, bound=tail_bound, exact=tail_exact),
        fejer=dict(
            l2=float(np.linalg.norm(a, 2)),
            l4=float(np.linalg.norm(a, 4)),
            l2_inequality=l2_ok,
            l4_inequality=l4_ok,
            kt_lower_bound=kt_lower_bound(a, consts.K_kt),
        ),
        concentration=None,
        limsup=None,
        weak_limsup=None,
    )

    if n < 2:
        return doc

    t = math.sqrt(n * math.log(n))
    doc["concentration"] = dict(
        t=t,
        bounded=concentration_tail_bound("bounded", consts.A_conc, n, t),
        lsi=concentration_tail_bound("lsi", consts.A_conc, n, t),
    )
    level, prob = limsup_threshold(n, c1, consts.A_conc, "bounded")
    doc["limsup"] = dict(c1=c1, level=level, probability=prob)
    level, prob = weak_limsup_threshold(n, consts.c_tail, c1)
    doc["weak_limsup"] = dict(c1=c1, level=level, probability=prob)
    return doc


_POSITIVE = click.FloatRange(min=0, min_open=True)


@cli.command("bounds")
@click.option("--n", type=click.IntRange(min=1), required=True, help="Dimension")
@click.option("--K", "K", type=_POSITIVE, default=1.0, help="Dudley constant K")
@click.option("--b", "b", type=_POSITIVE, default=1.0, help="Hoeffding constant b")
@click.option("--c", "c", type=_POSITIVE, default=1.0, help="Dudley tail constant c")
@click.option("--A", "A", type=_POSITIVE, default=1.0, help="Concentration constant A")
@click.option("--B", "B", type=_POSITIVE, default=1.0, help="Lower bound B on E|X|")
@click.option("--K-kt", "K_kt", type=_POSITIVE, default=1.0, help="Kashin-Tzafriri constant")
@click.option("--c1", type=_POSITIVE, default=1.0, help="Mean growth constant c1")
def cli_bounds(n: int, K: float, b: float, c: float, A: float, B: float, K_kt: float, c1: float):
    """
    Evaluate every bound calculator at dimension n
    """
    consts = BoundConstants(
        K_dudley=K, b_subg=b, c_tail=c, K_kt=K_kt, A_conc=A, B_abs=B
    )
    click.echo(json.dumps(bounds_document(n, consts, c1), indent=2, sort_keys=True))
