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

from typing import Optional

import numpy as np
import scipy.fft
import scipy.linalg

from toeplitz_norm.errors import EnsembleError
from toeplitz_norm.ensembles import EnsembleKind, StructuredMatrix, densify
from .lin_estimate import NormMethod, SpectralEstimate

__all__ = ["dense_spectral_norm", "circulant_eigenvalues", "dft_spectral_norm"]


def dense_spectral_norm(
    M: StructuredMatrix, cap: Optional[int] = None
) -> SpectralEstimate:
    """
    The oracle norm: max |eigenvalue| from a symmetric eigensolver for the
    symmetric kinds, largest singular value otherwise.
    """
    dense = densify(M, cap=cap)

    if M.is_symmetric:
        value = np.max(np.abs(scipy.linalg.eigvalsh(dense)))
    else:
        value = scipy.linalg.svdvals(dense)[0]

    return SpectralEstimate(value=float(value), method=NormMethod.dense)


def circulant_eigenvalues(M: StructuredMatrix) -> np.ndarray:
    """
    Eigenvalues of a symmetric circulant as the DFT of its first row.  The
    row is even (c[n-j] = c[j]) so the transform is real; the imaginary
    round-off is dropped.
    """
    if M.kind != EnsembleKind.sym_circulant:
        raise EnsembleError(f"expected a sym_circulant matrix, got {M.kind.value}")

    return scipy.fft.fft(M.coeffs).real


def dft_spectral_norm(M: StructuredMatrix) -> SpectralEstimate:
    value = np.max(np.abs(circulant_eigenvalues(M)))
    return SpectralEstimate(value=float(value), method=NormMethod.dft_exact)
