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
# Cross-ensemble identities that hold exactly in exact arithmetic:
#
#   - a Hankel matrix and its row reversal (a Toeplitz matrix) have the same
#     singular values
#   - the eigenvalues of a symmetric circulant are the DFT of its first row
#   - a palindromic Toeplitz matrix is symmetric, and its dense and
#     iterative norms agree
# =============================================================================

from typing import Optional, Sequence

import numpy as np
import scipy.linalg
from pydantic import BaseModel

from toeplitz_norm.logger import get_logger
from toeplitz_norm.entries import DistributionSpec, sample_entries
from toeplitz_norm.ensembles import (
    EnsembleKind,
    build_matrix,
    densify,
    hankel_to_toeplitz,
)
from toeplitz_norm.linalg import (
    dense_spectral_norm,
    iterative_spectral_norm,
    circulant_eigenvalues,
)

__all__ = ["EquivalenceCase", "EquivalenceReport", "equivalence_suite"]

_RADEMACHER = DistributionSpec(kind="rademacher")


class EquivalenceCase(BaseModel, extra="forbid"):
    n: int
    seed: int
    hankel_norm_gap: float
    hankel_singular_gap: float
    circulant_gap: float
    palindromic_asymmetry: float
    palindromic_iterative_gap: float


class EquivalenceReport(BaseModel, extra="forbid"):
    """maximum discrepancies over all cases; the iterative gap is relative"""

    cases: list[EquivalenceCase]
    hankel_max: float
    circulant_max: float
    palindromic_symmetry_max: float
    palindromic_iterative_max: float


def _check_case(
    n: int, seed: int, specs: Sequence[DistributionSpec]
) -> EquivalenceCase:
    entries = sample_entries(specs, 2 * n - 1, seed)

    hankel = build_matrix(EnsembleKind.hankel, entries, n)
    reversed_rows = hankel_to_toeplitz(hankel)
    sv_h = scipy.linalg.svdvals(densify(hankel))
    sv_t = scipy.linalg.svdvals(densify(reversed_rows))

    circ = build_matrix(EnsembleKind.sym_circulant, entries, n)
    dft_norm = float(np.max(np.abs(circulant_eigenvalues(circ))))

    pal = build_matrix(EnsembleKind.palindromic_toeplitz, entries, n)
    dense_pal = densify(pal)
    pal_norm = dense_spectral_norm(pal).value
    iter_norm = iterative_spectral_norm(pal, probe_seed=seed).value

    return EquivalenceCase(
        n=n,
        seed=seed,
        hankel_norm_gap=abs(
            dense_spectral_norm(hankel).value
            - dense_spectral_norm(reversed_rows).value
        ),
        hankel_singular_gap=float(np.max(np.abs(sv_h - sv_t))),
        circulant_gap=abs(dft_norm - dense_spectral_norm(circ).value),
        palindromic_asymmetry=float(np.max(np.abs(dense_pal - dense_pal.T))),
        palindromic_iterative_gap=(
            abs(pal_norm - iter_norm) / pal_norm if pal_norm > 0 else iter_norm
        ),
    )


def equivalence_suite(
    n_list: Sequence[int],
    seeds: Sequence[int],
    specs: Optional[Sequence[DistributionSpec]] = None,
) -> EquivalenceReport:
    """
    Check the identities for every (n, seed) pair, sampling 2n-1 entries
    per pair (Rademacher unless `specs` is given) and building every kind
    from the same entries.  Each n must be within the dense cap.
    """
    specs = specs or [_RADEMACHER]
    cases = [_check_case(n, seed, specs) for n in n_list for seed in seeds]

    report = EquivalenceReport(
        cases=cases,
        hankel_max=max(max(c.hankel_norm_gap, c.hankel_singular_gap) for c in cases),
        circulant_max=max(c.circulant_gap for c in cases),
        palindromic_symmetry_max=max(c.palindromic_asymmetry for c in cases),
        palindromic_iterative_max=max(c.palindromic_iterative_gap for c in cases),
    )

    get_logger().info(
        f"equivalence over {len(cases)} cases: hankel {report.hankel_max:.2e}, "
        f"circulant {report.circulant_max:.2e}, palindromic "
        f"{report.palindromic_symmetry_max:.2e} / "
        f"{report.palindromic_iterative_max:.2e}"
    )
    return report
