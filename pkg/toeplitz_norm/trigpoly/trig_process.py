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

# =============================================================================
# The three random cosine polynomials tied to the norm of a symmetric
# Toeplitz matrix T_n = [X_{|j-k|}]:
#
#   upper_Y      X_0 + 2 sum_{j<n} X_j cos(2 pi j x)      sup |.| >= ||T_n||
#   fejer_lower  X_0 + 2 sum_{j<n} (1 - j/n) X_j cos(..)  every value <= ||T_n||
#   plain_Z      sum_{j=1..n} X_j cos(2 pi j x)
#
# upper_Y is the symbol of the banded Laurent operator containing T_n;
# fejer_lower is the Rayleigh quotient of T_n at (e^{2 pi i j x})_j / sqrt(n).
# =============================================================================

# -----------------------------------------------------------------------------
# System Imports
# -----------------------------------------------------------------------------

from enum import Enum

# -----------------------------------------------------------------------------
# Public Imports
# -----------------------------------------------------------------------------

import numpy as np
import scipy.fft

# -----------------------------------------------------------------------------
# Private Imports
# -----------------------------------------------------------------------------

from toeplitz_norm.errors import GridError, EnsembleError
from toeplitz_norm.entries import EntrySequence

# -----------------------------------------------------------------------------
# Exports
# -----------------------------------------------------------------------------

__all__ = [
    "TrigProcessKind",
    "process_degree",
    "process_coefficients",
    "evaluate_process_grid",
    "evaluate_process_direct",
]

# -----------------------------------------------------------------------------
#
#                                 CODE BEGINS
#
# -----------------------------------------------------------------------------


class TrigProcessKind(str, Enum):
    upper_Y = "upper_Y"
    fejer_lower = "fejer_lower"
    plain_Z = "plain_Z"


def process_degree(kind: TrigProcessKind, n: int) -> int:
    return n if TrigProcessKind(kind) == TrigProcessKind.plain_Z else n - 1


def process_coefficients(
    entries: EntrySequence, kind: TrigProcessKind, n: int
) -> np.ndarray:
    """
    Cosine coefficients b_0..b_d so that the process is sum_j b_j cos(2 pi j x).
    upper_Y and fejer_lower read X_0..X_{n-1}; plain_Z reads X_1..X_n.
    """
    if n < 1:
        raise EnsembleError(f"dimension must be >= 1, got {n}")

    match TrigProcessKind(kind):
        case TrigProcessKind.upper_Y:
            b = np.array(entries.coefficients(0, n))
            b[1:] *= 2.0
        case TrigProcessKind.fejer_lower:
            b = np.array(entries.coefficients(0, n))
            b[1:] *= 2.0 * (1.0 - np.arange(1, n) / n)
        case TrigProcessKind.plain_Z:
            b = np.concatenate(([0.0], entries.coefficients(1, n + 1)))

    return b


def evaluate_process_grid(
    entries: EntrySequence, kind: TrigProcessKind, n: int, M: int
) -> np.ndarray:
    """
    Values of the process at x = i/M, i = 0..M-1, from one zero-padded FFT of
    the cosine coefficients.  Requires M >= 2d + 1.
    """
    d = process_degree(kind, n)
    if M < 2 * d + 1:
        raise GridError(f"grid size {M} is below 2d+1 = {2 * d + 1}")

    b = process_coefficients(entries, kind, n)
    return scipy.fft.fft(b, n=M).real


def evaluate_process_direct(
    entries: EntrySequence, kind: TrigProcessKind, n: int, xs: np.ndarray
) -> np.ndarray:
    """reference O(n |xs|) evaluation by direct summation"""
    b = process_coefficients(entries, kind, n)
    xs = np.asarray(xs, dtype=float)
    return np.cos(2.0 * np.pi * np.outer(xs, np.arange(b.size))) @ b
