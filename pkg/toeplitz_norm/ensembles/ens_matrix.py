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

from dataclasses import dataclass
from typing import Optional

# -----------------------------------------------------------------------------
# Public Imports
# -----------------------------------------------------------------------------

import numpy as np
import scipy.linalg

# -----------------------------------------------------------------------------
# Private Imports
# -----------------------------------------------------------------------------

from toeplitz_norm.errors import EnsembleError, DenseCapError
from toeplitz_norm.entries import EntrySequence
from toeplitz_norm.settings import g_settings
from .ens_kind import EnsembleKind, SYMMETRIC_KINDS, coeff_count

# -----------------------------------------------------------------------------
# Exports
# -----------------------------------------------------------------------------

__all__ = [
    "StructuredMatrix",
    "build_matrix",
    "entry_at",
    "densify",
    "hankel_to_toeplitz",
    "shift_basis",
]

# -----------------------------------------------------------------------------
#
#                                 CODE BEGINS
#
# -----------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class StructuredMatrix:
    """
    A structured n x n matrix held in coefficient form; the dense array is
    never stored.

    Coefficient layout per kind:

        sym_toeplitz, sym_circulant, palindromic_toeplitz
            length n, coeffs[d] = X_d (after constraint folding)
        nonsym_toeplitz
            length 2n-1, coeffs[i] = X_{i-(n-1)}
        hankel
            length 2n-1, coeffs[i] = X_{i+1}
    """

    kind: EnsembleKind
    n: int
    coeffs: np.ndarray

    def __post_init__(self):
        kind = EnsembleKind(self.kind)
        object.__setattr__(self, "kind", kind)

        if self.n < 1:
            raise EnsembleError(f"dimension must be >= 1, got {self.n}")

        coeffs = np.array(self.coeffs, dtype=float)
        if coeffs.shape != (coeff_count(kind, self.n),):
            raise EnsembleError(
                f"{kind.value} with n={self.n} needs {coeff_count(kind, self.n)} "
                f"coefficients, got shape {coeffs.shape}"
            )
        if not np.all(np.isfinite(coeffs)):
            raise EnsembleError("coefficients must be finite")

        n = self.n
        if kind == EnsembleKind.sym_circulant:
            j = np.arange(1, n)
            if not np.array_equal(coeffs[n - j], coeffs[j]):
                raise EnsembleError("circulant coefficients violate X_{n-j} = X_j")

        elif kind == EnsembleKind.palindromic_toeplitz:
            if not np.array_equal(coeffs[::-1], coeffs):
                raise EnsembleError("palindromic coefficients violate X_{n-j-1} = X_j")

        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)

    # -------------------------------------------------------------------------
    # Structure views
    # -------------------------------------------------------------------------

    @property
    def is_symmetric(self) -> bool:
        return self.kind in SYMMETRIC_KINDS

    def first_column(self) -> np.ndarray:
        """entries (j, 1) for j = 1..n"""
        n = self.n
        match self.kind:
            case EnsembleKind.nonsym_toeplitz:
                return self.coeffs[n - 1 :: -1]
            case EnsembleKind.hankel:
                return self.coeffs[:n]
            case _:
                return self.coeffs

    def first_row(self) -> np.ndarray:
        """entries (1, k) for k = 1..n"""
        n = self.n
        match self.kind:
            case EnsembleKind.nonsym_toeplitz:
                return self.coeffs[n - 1 :]
            case EnsembleKind.hankel:
                return self.coeffs[:n]
            case _:
                return self.coeffs

    # -------------------------------------------------------------------------
    # Derived matrices
    # -------------------------------------------------------------------------

    def scaled(self, c: float) -> "StructuredMatrix":
        """the matrix c * M"""
        return StructuredMatrix(self.kind, self.n, c * self.coeffs)

    def shifted(self, delta: float) -> "StructuredMatrix":
        """
        the matrix M + delta * J_n, where J_n is all-ones; every kind stores
        each entry as exactly one coefficient so this is a coefficient shift.
        """
        return StructuredMatrix(self.kind, self.n, self.coeffs + delta)

    # -------------------------------------------------------------------------
    # JSON form
    # -------------------------------------------------------------------------

    def to_dict(self) -> dict:
        return dict(kind=self.kind.value, n=self.n, coeffs=self.coeffs.tolist())

    @classmethod
    def from_dict(cls, data: dict) -> "StructuredMatrix":
        if missing := {"kind", "n", "coeffs"} - set(data):
            raise EnsembleError(f"matrix document missing keys: {sorted(missing)}")

        try:
            kind = EnsembleKind(data["kind"])
        except ValueError:
            raise EnsembleError(f"unknown ensemble kind: {data['kind']!r}")

        return cls(kind=kind, n=int(data["n"]), coeffs=np.asarray(data["coeffs"]))


# -----------------------------------------------------------------------------
#
#                                 Operations
#
# -----------------------------------------------------------------------------


def build_matrix(
    kind: EnsembleKind, entries: EntrySequence, n: int
) -> StructuredMatrix:
    """
    Build a structured matrix from the leading entries of a sequence.

    The symmetric kinds consume n values X_0..X_{n-1}; nonsym_toeplitz and
    hankel consume 2n-1 values.  Constrained kinds are folded: the leading
    coefficients are free (X_0..X_{floor(n/2)} for the circulant,
    X_0..X_{ceil(n/2)-1} for the palindromic kind) and the rest are
    overwritten by the constraint, so dependent coefficients appear twice.
    """
    kind = EnsembleKind(kind)
    if n < 1:
        raise EnsembleError(f"dimension must be >= 1, got {n}")

    needed = coeff_count(kind, n)
    if len(entries) < needed:
        raise EnsembleError(
            f"{kind.value} with n={n} needs {needed} entries, got {len(entries)}"
        )

    coeffs = np.array(entries.values[:needed])

    match kind:
        case EnsembleKind.sym_circulant:
            j = np.arange(n // 2 + 1, n)
            coeffs[j] = coeffs[n - j]
        case EnsembleKind.palindromic_toeplitz:
            j = np.arange((n + 1) // 2, n)
            coeffs[j] = coeffs[n - 1 - j]

    return StructuredMatrix(kind=kind, n=n, coeffs=coeffs)


def entry_at(M: StructuredMatrix, j: int, k: int) -> float:
    """entry (j, k) of M using 1-based indices"""
    n = M.n
    if not (1 <= j <= n and 1 <= k <= n):
        raise EnsembleError(f"index ({j}, {k}) out of range for n={n}")

    match M.kind:
        case EnsembleKind.nonsym_toeplitz:
            return float(M.coeffs[k - j + n - 1])
        case EnsembleKind.hankel:
            return float(M.coeffs[j + k - 2])
        case _:
            return float(M.coeffs[abs(j - k)])


def densify(M: StructuredMatrix, cap: Optional[int] = None) -> np.ndarray:
    """
    Form the dense n x n array.  Refuses when n exceeds the dense cap so that
    large experiments cannot allocate O(n^2) memory by accident.
    """
    if cap is None:
        cap = g_settings.config.dense_cap
    if M.n > cap:
        raise DenseCapError(f"n={M.n} exceeds the dense cap {cap}")

    if M.kind == EnsembleKind.hankel:
        return scipy.linalg.hankel(M.coeffs[: M.n], M.coeffs[M.n - 1 :])

    return scipy.linalg.toeplitz(M.first_column(), M.first_row())


def hankel_to_toeplitz(H: StructuredMatrix) -> StructuredMatrix:
    """
    Reverse the row order of a Hankel matrix.  Row j of the result is row
    n+1-j of H, whose (j, k) entry is X_{n-j+k}; as a Toeplitz matrix in
    X_{k-j} form it has exactly the same coefficient vector.
    """
    if H.kind != EnsembleKind.hankel:
        raise EnsembleError(f"expected a hankel matrix, got {H.kind.value}")

    return StructuredMatrix(EnsembleKind.nonsym_toeplitz, H.n, H.coeffs.copy())


def shift_basis(n: int, j: int) -> StructuredMatrix:
    """
    The matrix M_j with ones where |row - col| = j, so that a symmetric
    Toeplitz matrix is the sum of X_j M_j.
    """
    if not 0 <= j < n:
        raise EnsembleError(f"shift index {j} out of range for n={n}")

    coeffs = np.zeros(n)
    coeffs[j] = 1.0
    return StructuredMatrix(EnsembleKind.sym_toeplitz, n, coeffs)
