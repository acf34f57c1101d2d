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
# Public Imports
# -----------------------------------------------------------------------------

import numpy as np
import scipy.fft
from scipy.sparse.linalg import LinearOperator

# -----------------------------------------------------------------------------
# Private Imports
# -----------------------------------------------------------------------------

from toeplitz_norm.errors import EnsembleError
from toeplitz_norm.ensembles import (
    EnsembleKind,
    StructuredMatrix,
    hankel_to_toeplitz,
)

# -----------------------------------------------------------------------------
# Exports
# -----------------------------------------------------------------------------

__all__ = ["CirculantEmbedding", "structured_matvec", "embedding_size"]

# -----------------------------------------------------------------------------
#
#                                 CODE BEGINS
#
# -----------------------------------------------------------------------------


def embedding_size(n: int) -> int:
    """smallest power of two >= 2n - 1"""
    return 1 << (2 * n - 2).bit_length()


def _circulant_column(col: np.ndarray, row: np.ndarray, size: int) -> np.ndarray:
    """
    First column of a circulant of the given size that holds the Toeplitz
    matrix (col, row) as its leading n x n block.
    """
    n = col.size
    embed = np.zeros(size)
    embed[:n] = col
    if n > 1:
        embed[size - n + 1 :] = row[:0:-1]
    return embed


class CirculantEmbedding:
    """
    Matrix-vector products with a structured matrix in O(n log n).

    Toeplitz kinds are embedded in a circulant of size `embedding_size(n)`;
    a product is then rfft, pointwise multiply, irfft.  A Hankel matrix is
    handled as J T where T is its row-reversed Toeplitz matrix, so
    H v = reverse(T v) and H^T v = T^T reverse(v).
    """

    def __init__(self, M: StructuredMatrix):
        self.matrix = M
        self.n = M.n
        self.size = embedding_size(M.n)
        self.matvecs = 0

        self._reversed = M.kind == EnsembleKind.hankel
        toep = hankel_to_toeplitz(M) if self._reversed else M

        col, row = toep.first_column(), toep.first_row()
        self._spec = scipy.fft.rfft(_circulant_column(col, row, self.size))
        self._spec_t = (
            self._spec
            if M.is_symmetric
            else scipy.fft.rfft(_circulant_column(row, col, self.size))
        )

    def _apply(self, spec: np.ndarray, v: np.ndarray) -> np.ndarray:
        v = np.asarray(v, dtype=float)
        if v.shape != (self.n,):
            raise EnsembleError(
                f"vector of shape {v.shape} does not match dimension {self.n}"
            )
        self.matvecs += 1
        prod = scipy.fft.irfft(spec * scipy.fft.rfft(v, n=self.size), n=self.size)
        return prod[: self.n]

    def matvec(self, v: np.ndarray) -> np.ndarray:
        """M v"""
        out = self._apply(self._spec, v)
        return out[::-1].copy() if self._reversed else out

    def rmatvec(self, v: np.ndarray) -> np.ndarray:
        """M^T v"""
        v = np.asarray(v, dtype=float)
        return self._apply(self._spec_t, v[::-1] if self._reversed else v)

    def as_linear_operator(self) -> LinearOperator:
        return LinearOperator(
            shape=(self.n, self.n),
            matvec=self.matvec,
            rmatvec=self.rmatvec,
            dtype=float,
        )


def structured_matvec(M: StructuredMatrix, v: np.ndarray) -> np.ndarray:
    """Compute M v through the circulant embedding"""
    return CirculantEmbedding(M).matvec(v)
