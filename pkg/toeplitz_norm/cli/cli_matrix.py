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

from typing import Optional, Tuple
from dataclasses import asdict
from pathlib import Path
import json

# -----------------------------------------------------------------------------
# Public Imports
# -----------------------------------------------------------------------------

import click

# -----------------------------------------------------------------------------
# Private Imports
# -----------------------------------------------------------------------------

from toeplitz_norm.errors import ConfigError
from toeplitz_norm.logger import get_logger
from toeplitz_norm.entries import EntrySequence, sample_entries
from toeplitz_norm.ensembles import (
    EnsembleKind,
    StructuredMatrix,
    build_matrix,
    coeff_count,
    SYMMETRIC_KINDS,
)
from toeplitz_norm.linalg import spectral_norm
from toeplitz_norm.trigpoly import (
    TrigProcessKind,
    certified_sup,
    default_grid_size,
    DEFAULT_GRID_FACTOR,
)

from .cli_main import cli
from .cli_opts import opt_seed, opt_out, opt_tol, opt_input
from .cli_config import load_json, parse_dist

# -----------------------------------------------------------------------------
# Exports
# -----------------------------------------------------------------------------

__all__ = ["cli_sample", "cli_norm", "cli_suptrig", "load_matrix_doc"]

# -----------------------------------------------------------------------------
#
#                                 CODE BEGINS
#
# -----------------------------------------------------------------------------


def _emit(doc: dict, out_path: Optional[Path]):
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if out_path:
        out_path.write_text(text)
    else:
        click.echo(text, nl=False)


def load_matrix_doc(path: Path) -> tuple[StructuredMatrix, Optional[EntrySequence]]:
    """
    Read a matrix document: either the output of `sample` (keys "matrix",
    "entries") or a bare {"kind", "n", "coeffs"} object.
    """
    doc = load_json(path)
    if not isinstance(doc, dict):
        raise ConfigError(f"{path}: expected a JSON object")

    if (seed := doc.get("master_seed")) is not None:
        get_logger().info(f"master seed: {seed}")

    matrix = StructuredMatrix.from_dict(doc.get("matrix", doc))
    entries = EntrySequence.from_values(doc["entries"]) if "entries" in doc else None
    return matrix, entries


@cli.command("sample")
@click.option(
    "--ensemble",
    type=click.Choice([k.value for k in EnsembleKind]),
    required=True,
    help="Matrix family",
)
@click.option(
    "--dist",
    "dists",
    multiple=True,
    required=True,
    help="Entry law: a kind name or a JSON spec; repeat for a cyclic list",
)
@click.option("--n", type=click.IntRange(min=1), required=True, help="Dimension")
@opt_seed(required=True)
@opt_out()
def cli_sample(
    ensemble: str, dists: Tuple[str], n: int, seed: int, out_path: Optional[Path]
):
    """
    Draw entries and build one structured matrix
    """
    get_logger().info(f"master seed: {seed}")
    specs = [parse_dist(text) for text in dists]
    kind = EnsembleKind(ensemble)

    # one extra entry so the document also carries X_n for plain_Z
    entries = sample_entries(specs, max(coeff_count(kind, n), n + 1), seed)
    matrix = build_matrix(kind, entries, n)

    _emit(
        dict(
            master_seed=seed,
            dist=[spec.model_dump(mode="json", exclude_defaults=True) for spec in specs],
            entries=entries.values.tolist(),
            matrix=matrix.to_dict(),
        ),
        out_path,
    )


@cli.command("norm")
@opt_input(help="Matrix document (from `sample`)")
@click.option(
    "--method",
    type=click.Choice(["dense", "iterative", "auto", "dft"]),
    default="auto",
    show_default=True,
)
@opt_tol()
def cli_norm(in_path: Path, method: str, tol: float):
    """
    Spectral norm of a structured matrix
    """
    matrix, _ = load_matrix_doc(in_path)
    est = spectral_norm(matrix, method=method, tol=tol)

    if not est.is_certified(tol):
        get_logger().warning(f"norm not certified to tol={tol}: residual {est.residual:.3e}")

    _emit(
        dict(
            kind=matrix.kind.value,
            n=matrix.n,
            value=est.value,
            method=est.method.value,
            residual=est.residual,
            iterations=est.iterations,
            matvecs=est.matvecs,
            certified=est.is_certified(tol),
        ),
        None,
    )


@cli.command("suptrig")
@opt_input(help="Matrix document (from `sample`)")
@click.option(
    "--process",
    type=click.Choice([k.value for k in TrigProcessKind]),
    required=True,
)
@click.option(
    "--grid-factor",
    type=click.IntRange(min=4),
    default=DEFAULT_GRID_FACTOR,
    show_default=True,
)
def cli_suptrig(in_path: Path, process: str, grid_factor: int):
    """
    Certified supremum of a random cosine polynomial
    """
    matrix, entries = load_matrix_doc(in_path)
    kind = TrigProcessKind(process)
    n = matrix.n

    if kind == TrigProcessKind.plain_Z:
        if entries is None:
            raise ConfigError("plain_Z needs the raw entries X_1..X_n; use `sample` output")
        source = entries
    elif matrix.kind in SYMMETRIC_KINDS:
        source = EntrySequence.from_values(matrix.coeffs)
    else:
        raise ConfigError(f"{process} is defined for symmetric kinds, got {matrix.kind.value}")

    est = certified_sup(source, kind, n, default_grid_size(n, grid_factor))
    _emit(dict(process=kind.value, n=n, **asdict(est)), None)
