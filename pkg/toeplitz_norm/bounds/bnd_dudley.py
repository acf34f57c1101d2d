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

from typing import NamedTuple
import math

# -----------------------------------------------------------------------------
# Public Imports
# -----------------------------------------------------------------------------

import numpy as np
from scipy import integrate

# -----------------------------------------------------------------------------
# Private Imports
# -----------------------------------------------------------------------------

from toeplitz_norm.errors import BoundInputError
from .bnd_constants import BoundConstants

# -----------------------------------------------------------------------------
# Exports
# -----------------------------------------------------------------------------

__all__ = [
    "DudleyBound",
    "dudley_bound",
    "gaussian_tail_moment",
    "dudley_tail_bound",
    "QUAD_RELTOL",
]

# -----------------------------------------------------------------------------
#
#                                 CODE BEGINS
#
# -----------------------------------------------------------------------------

QUAD_RELTOL = 1e-10

SQRT_2PI = math.sqrt(2.0 * math.pi)


class DudleyBound(NamedTuple):
    integral_value: float
    closed_form: float


def _scaled_tail_moment(s: float) -> float:
    """
    e^{s^2/2} * int_s^inf t^2 e^{-t^2/2} dt, written as
    int_0^inf (s + u)^2 e^{-s u - u^2/2} du so the integrand stays O(s^2)
    for every s and never underflows.
    """
    value, _ = integrate.quad(
        lambda u: (s + u) ** 2 * math.exp(-s * u - 0.5 * u * u),
        0.0,
        np.inf,
        epsabs=0.0,
        epsrel=QUAD_RELTOL,
        limit=200,
    )
    return value


def gaussian_tail_moment(s: float) -> tuple[float, float]:
    """
    The estimate int_s^inf t^2 e^{-t^2/2} dt <= (s + sqrt(2 pi)) e^{-s^2/2}.

    Returns
    -------
    (bound, exact) with exact obtained by quadrature.
    """
    if s <= 0:
        raise BoundInputError(f"s must be positive, got {s}")

    gauss = math.exp(-0.5 * s * s)
    return (s + SQRT_2PI) * gauss, gauss * _scaled_tail_moment(s)


def dudley_bound(n: int, consts: BoundConstants | None = None) -> DudleyBound:
    """
    The entropy integral K int_0^{2 sqrt n} sqrt(log(4 n^{3/2} / eps)) d eps
    for the upper-bound process, and its closed-form majorant.

    The substitution eps = 4 n^{3/2} e^{-t^2} removes the endpoint
    singularity and turns the integral into

        2 sqrt(2) n^{3/2} int_s^inf t^2 e^{-t^2/2} dt,   s = sqrt(2 ln 2n),

    and e^{-s^2/2} = 1/(2n) turns that into sqrt(2 n) times the scaled tail
    moment.  Inserting the tail-moment estimate gives the closed form
    sqrt(2) K sqrt(n) (sqrt(2 ln 2n) + sqrt(2 pi)).

    Parameters
    ----------
    n:
        Matrix dimension, n >= 1.

    consts:
        Supplies K_dudley; defaults to all-ones constants.
    """
    if n < 1:
        raise BoundInputError(f"n must be >= 1, got {n}")

    K = (consts or BoundConstants()).K_dudley
    s = math.sqrt(2.0 * math.log(2.0 * n))
    scale = math.sqrt(2.0) * K * math.sqrt(n)

    return DudleyBound(
        integral_value=scale * _scaled_tail_moment(s),
        closed_form=scale * (s + SQRT_2PI),
    )


def dudley_tail_bound(alpha: float, t: float, c: float) -> float:
    """min(1, 2 exp(-c t^2 / alpha^2))"""
    if alpha <= 0 or t <= 0 or c <= 0:
        raise BoundInputError(
            f"alpha, t and c must be positive, got {alpha}, {t}, {c}"
        )
    return min(1.0, 2.0 * math.exp(-c * t * t / (alpha * alpha)))
