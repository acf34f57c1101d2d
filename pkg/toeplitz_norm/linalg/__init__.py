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

from .lin_estimate import NormMethod, SpectralEstimate
from .lin_matvec import CirculantEmbedding, structured_matvec, embedding_size
from .lin_dense import dense_spectral_norm, circulant_eigenvalues, dft_spectral_norm
from .lin_krylov import (
    iterative_spectral_norm,
    lanczos_norm,
    golub_kahan_norm,
    DEFAULT_TOL,
)
from .lin_norm import spectral_norm, NormChoice
