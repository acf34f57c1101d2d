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

import numpy as np

__all__ = ["pseudometric_d", "cosine_features"]


def cosine_features(xs, n: int) -> np.ndarray:
    """
    Rows (cos(2 pi j x))_{j=1..n-1} for each x; the pseudometric is the
    Euclidean distance between rows.
    """
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    return np.cos(2.0 * np.pi * np.outer(xs, np.arange(1, n)))


def pseudometric_d(x: float, y: float, n: int) -> float:
    """
    d(x, y) = sqrt(sum_{j=1}^{n-1} [cos(2 pi j x) - cos(2 pi j y)]^2), the
    canonical distance of the upper-bound process for unit-variance entries.
    """
    diff = cosine_features(x, n)[0] - cosine_features(y, n)[0]
    return float(np.sqrt(diff @ diff))
