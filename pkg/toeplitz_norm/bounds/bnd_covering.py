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

import math

import numpy as np

from toeplitz_norm.errors import BoundInputError
from toeplitz_norm.trigpoly import cosine_features

__all__ = ["covering_number_bound", "greedy_cover"]


def covering_number_bound(n: int, eps: float) -> float:
    """
    Bound on N([0,1], d, eps).  Every distance is below 2 sqrt(n), so one
    ball suffices from there on; below that, d <= 4 n^{3/2} |x - y| turns an
    interval cover of mesh eps / (4 n^{3/2}) into a d-cover.
    """
    if eps <= 0:
        raise BoundInputError(f"eps must be positive, got {eps}")
    if n < 1:
        raise BoundInputError(f"n must be >= 1, got {n}")

    if eps >= 2.0 * math.sqrt(n):
        return 1.0
    return max(1.0, 4.0 * n**1.5 / eps)


def greedy_cover(n: int, eps: float, grid_size: int = 2048) -> int:
    """
    Size of a greedy eps-cover of the grid {i / grid_size} under the
    pseudometric d: repeatedly take the first uncovered point as a centre and
    drop everything within eps of it.  The centres are eps-separated.
    """
    if eps <= 0:
        raise BoundInputError(f"eps must be positive, got {eps}")

    features = cosine_features(np.arange(grid_size) / grid_size, n)
    uncovered = np.ones(grid_size, dtype=bool)
    centres = 0

    while uncovered.any():
        i = int(np.argmax(uncovered))
        dist = np.linalg.norm(features - features[i], axis=1)
        uncovered &= dist > eps
        centres += 1

    return centres
