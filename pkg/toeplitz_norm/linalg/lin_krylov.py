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
# Krylov solvers for the spectral norm.  Both keep every basis vector and
# reorthogonalise against all of them (twice) at each step, which is
# affordable at the dimensions this package targets and removes ghost Ritz
# values.  Convergence is checked every step from the small projected
# problem:
#
#   Lanczos        T_k s = theta s,  residual = beta_k |s_k|   (both ends)
#   Golub-Kahan    B_k = P S Q^T,    residual = beta_k |p_k|   (largest)
# =============================================================================

# -----------------------------------------------------------------------------
# System Imports
# -----------------------------------------------------------------------------

from dataclasses import replace
from itertools import count
from typing import Callable, Optional

# -----------------------------------------------------------------------------
# Public Imports
# -----------------------------------------------------------------------------

import numpy as np
import scipy.linalg
from tenacity import retry, retry_if_result, stop_after_attempt

# -----------------------------------------------------------------------------
# Private Imports
# -----------------------------------------------------------------------------

from toeplitz_norm.errors import ConfigError
from toeplitz_norm.ensembles import StructuredMatrix
from toeplitz_norm.logger import get_logger
from toeplitz_norm.settings import g_settings
from .lin_estimate import NormMethod, SpectralEstimate
from .lin_matvec import CirculantEmbedding

# -----------------------------------------------------------------------------
# Exports
# -----------------------------------------------------------------------------

__all__ = ["iterative_spectral_norm", "lanczos_norm", "golub_kahan_norm"]

# -----------------------------------------------------------------------------
#
#                                 CODE BEGINS
#
# -----------------------------------------------------------------------------

DEFAULT_TOL = 1e-8

# relative size of a new Krylov direction below which the space is invariant
_BREAKDOWN = 1e-13


def _reorthogonalize(w: np.ndarray, basis: np.ndarray) -> np.ndarray:
    if basis.shape[0]:
        w = w - basis.T @ (basis @ w)
        w = w - basis.T @ (basis @ w)
    return w


def lanczos_norm(
    op: CirculantEmbedding, tol: float, max_iter: int, probe: np.ndarray
) -> SpectralEstimate:
    """
    Symmetric Lanczos tracking both ends of the Ritz spectrum.  Stops when
    the residuals of the smallest and the largest Ritz values are both below
    tol * max|theta|, or when the Krylov space becomes invariant.
    """
    n = op.n
    depth = min(max_iter, n)
    Q = np.zeros((depth + 1, n))
    Q[0] = probe / np.linalg.norm(probe)

    alphas: list[float] = []
    betas: list[float] = []
    value = residual = 0.0
    k = 0

    for k in range(depth):
        w = op.matvec(Q[k])
        if k:
            w -= betas[-1] * Q[k - 1]

        alpha = float(w @ Q[k])
        w = _reorthogonalize(w - alpha * Q[k], Q[: k + 1])
        beta = float(np.linalg.norm(w))
        alphas.append(alpha)

        if k:
            theta, S = scipy.linalg.eigh_tridiagonal(np.array(alphas), np.array(betas))
        else:
            theta, S = np.array([alpha]), np.ones((1, 1))

        value = float(max(abs(theta[0]), abs(theta[-1])))
        residual = beta * max(abs(S[-1, 0]), abs(S[-1, -1]))

        if residual <= tol * value or beta <= _BREAKDOWN * max(value, 1.0):
            break

        betas.append(beta)
        Q[k + 1] = w / beta

    return SpectralEstimate(
        value=value,
        method=NormMethod.lanczos,
        residual=float(residual),
        iterations=k + 1,
        matvecs=k + 1,
    )


def golub_kahan_norm(
    op: CirculantEmbedding, tol: float, max_iter: int, probe: np.ndarray
) -> SpectralEstimate:
    """
    Golub-Kahan-Lanczos bidiagonalization for the largest singular value,
    using products with M and M^T; this avoids forming M^T M.
    """
    n = op.n
    depth = min(max_iter, n)
    V = np.zeros((depth + 1, n))
    U = np.zeros((depth, n))
    V[0] = probe / np.linalg.norm(probe)

    alphas: list[float] = []
    betas: list[float] = []
    value = residual = 0.0
    k = 0

    for k in range(depth):
        u = op.matvec(V[k])
        if k:
            u -= betas[-1] * U[k - 1]
        u = _reorthogonalize(u, U[:k])
        alpha = float(np.linalg.norm(u))
        alphas.append(alpha)

        B = np.diag(alphas) + np.diag(betas, 1)
        if alpha <= _BREAKDOWN * max(value, 1.0):
            # M v_k lies in the span of the left basis: exact on this space.
            value, residual = float(scipy.linalg.svdvals(B)[0]), 0.0
            break

        U[k] = u / alpha
        w = _reorthogonalize(op.rmatvec(U[k]) - alpha * V[k], V[: k + 1])
        beta = float(np.linalg.norm(w))

        P, sigma, _ = scipy.linalg.svd(B)
        value = float(sigma[0])
        residual = beta * abs(P[-1, 0])

        if residual <= tol * value or beta <= _BREAKDOWN * max(value, 1.0):
            break

        betas.append(beta)
        V[k + 1] = w / beta

    return SpectralEstimate(
        value=value,
        method=NormMethod.golub_kahan,
        residual=float(residual),
        iterations=k + 1,
        matvecs=op.matvecs,
    )


def iterative_spectral_norm(
    M: StructuredMatrix,
    tol: float = DEFAULT_TOL,
    max_iter: Optional[int] = None,
    probe_seed: int = 0,
) -> SpectralEstimate:
    """
    Spectral norm from matrix-vector products only.

    Symmetric kinds use Lanczos on M; the others use Golub-Kahan
    bidiagonalization.  A run that ends without a certified residual is
    restarted with a fresh probe vector (seed probe_seed + attempt), up to
    the configured number of probe attempts.  When no run certifies, the
    best Ritz value is returned with residual > tol and a warning is logged;
    callers test `SpectralEstimate.is_certified(tol)`.

    Parameters
    ----------
    M:
        The matrix.

    tol:
        Relative residual target, must be positive.

    max_iter:
        Krylov depth limit per run, default 4n (a run never exceeds n).

    probe_seed:
        Seed for the first random probe vector.
    """
    if tol <= 0:
        raise ConfigError(f"tol must be positive, got {tol}")

    if not np.any(M.coeffs):
        return SpectralEstimate(value=0.0, method=_method_for(M))

    if max_iter is None:
        max_iter = 4 * M.n
    if max_iter < 1:
        raise ConfigError(f"max_iter must be >= 1, got {max_iter}")
    solver: Callable = lanczos_norm if M.is_symmetric else golub_kahan_norm
    attempts = count()
    history: list[SpectralEstimate] = []

    def _best(_state=None) -> SpectralEstimate:
        best = max(history, key=lambda est: est.value)
        return replace(
            best,
            iterations=sum(est.iterations for est in history),
            matvecs=sum(est.matvecs for est in history),
        )

    @retry(
        retry=retry_if_result(lambda est: not est.is_certified(tol)),
        stop=stop_after_attempt(g_settings.config.probe_attempts),
        retry_error_callback=_best,
    )
    def _run() -> SpectralEstimate:
        """one Krylov run with its own probe vector"""
        rng = np.random.default_rng(probe_seed + next(attempts))
        est = solver(CirculantEmbedding(M), tol, max_iter, rng.standard_normal(M.n))
        history.append(est)
        return est

    est = _run()

    if not est.is_certified(tol):
        get_logger().warning(
            f"{M.kind.value} n={M.n}: no certified norm after {len(history)} probe(s), "
            f"residual {est.residual:.3e} > tol {tol * est.value:.1e}"
        )
        return est

    return replace(
        est,
        iterations=sum(run.iterations for run in history),
        matvecs=sum(run.matvecs for run in history),
    )


def _method_for(M: StructuredMatrix) -> NormMethod:
    return NormMethod.lanczos if M.is_symmetric else NormMethod.golub_kahan
