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

from typing import Literal, Optional

from toeplitz_norm.errors import ConfigError
from toeplitz_norm.ensembles import EnsembleKind, StructuredMatrix
from toeplitz_norm.settings import g_settings
from .lin_estimate import SpectralEstimate
from .lin_dense import dense_spectral_norm, dft_spectral_norm
from .lin_krylov import iterative_spectral_norm, DEFAULT_TOL

__all__ = ["spectral_norm", "NormChoice"]

NormChoice = Literal["dense", "iterative", "auto", "dft"]


def spectral_norm(
    M: StructuredMatrix,
    method: NormChoice = "auto",
    tol: float = DEFAULT_TOL,
    max_iter: Optional[int] = None,
    probe_seed: int = 0,
    cap: Optional[int] = None,
) -> SpectralEstimate:
    """
    Dispatch to a norm method.  "auto" uses the dense oracle up to the dense
    cap and the iterative solver above it; "dft" is only valid for the
    symmetric circulant.
    """
    if cap is None:
        cap = g_settings.config.dense_cap

    match method:
        case "dense":
            return dense_spectral_norm(M, cap=cap)
        case "iterative":
            return iterative_spectral_norm(M, tol, max_iter, probe_seed)
        case "dft":
            if M.kind != EnsembleKind.sym_circulant:
                raise ConfigError("the dft method only applies to sym_circulant")
            return dft_spectral_norm(M)
        case "auto":
            if M.n <= cap:
                return dense_spectral_norm(M, cap=cap)
            return iterative_spectral_norm(M, tol, max_iter, probe_seed)

    raise ConfigError(f"unknown norm method: {method!r}")
