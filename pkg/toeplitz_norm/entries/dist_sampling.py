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
# Coefficient sampling.  Every value X_j is a pure function of
# (master_seed, j): the master seed is expanded into a Philox key and X_j is
# built from the j-th 64-bit word of that counter-based stream.  Distinct
# indices use distinct counters under one key, so substreams never collide,
# and a sequence can be regenerated in any order or in pieces.
# =============================================================================

# -----------------------------------------------------------------------------
# System Imports
# -----------------------------------------------------------------------------

from dataclasses import dataclass
from typing import Optional, Sequence
import math

# -----------------------------------------------------------------------------
# Public Imports
# -----------------------------------------------------------------------------

import numpy as np
from scipy import special

# -----------------------------------------------------------------------------
# Private Imports
# -----------------------------------------------------------------------------

from toeplitz_norm.errors import EntriesError
from .dist_spec import DistributionSpec

# -----------------------------------------------------------------------------
# Exports
# -----------------------------------------------------------------------------

__all__ = [
    "EntrySequence",
    "sample_entries",
    "symmetrized_entries",
    "substream_key",
]

# -----------------------------------------------------------------------------
#
#                                 CODE BEGINS
#
# -----------------------------------------------------------------------------

_U53 = 2.0**-53


@dataclass(frozen=True, eq=False)
class EntrySequence:
    """
    A finite run of coefficients X_j, X_{j+1}, ... where j = index_offset.

    Attributes
    ----------
    values:
        The read-only coefficient values.

    specs:
        The cyclic spec list the values were drawn from; empty when the
        values were supplied directly (see `from_values`).

    master_seed:
        The seed the values were drawn with, None for supplied values.

    index_offset:
        Which X_j the first value represents.
    """

    values: np.ndarray
    specs: tuple[DistributionSpec, ...] = ()
    master_seed: Optional[int] = None
    index_offset: int = 0

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        if values.ndim != 1 or values.size == 0:
            raise EntriesError("entry sequence must be a non-empty vector")
        if not np.all(np.isfinite(values)):
            raise EntriesError("entry sequence contains non-finite values")

        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_values(cls, values, index_offset: int = 0) -> "EntrySequence":
        """wrap explicitly given coefficient values"""
        return cls(values=np.asarray(values, dtype=float), index_offset=index_offset)

    def __len__(self) -> int:
        return self.values.size

    @property
    def last_index(self) -> int:
        return self.index_offset + len(self) - 1

    def coefficients(self, start: int, stop: int) -> np.ndarray:
        """
        Return X_start, ..., X_{stop-1}.  Raises EntriesError when any of the
        requested indices is not covered by this sequence.
        """
        if start < self.index_offset or stop - 1 > self.last_index:
            raise EntriesError(
                f"need X_{start}..X_{stop - 1}, sequence holds "
                f"X_{self.index_offset}..X_{self.last_index}"
            )
        lo = start - self.index_offset
        return self.values[lo : lo + (stop - start)]


def substream_key(master_seed: int, stream: int = 0) -> np.ndarray:
    """Philox key for one named stream of a master seed"""
    if master_seed < 0:
        raise EntriesError(f"master seed must be non-negative, got {master_seed}")

    seq = np.random.SeedSequence(entropy=master_seed, spawn_key=(stream,))
    return seq.generate_state(2, dtype=np.uint64)


def _raw_words(master_seed: int, stop: int, stream: int) -> np.ndarray:
    bitgen = np.random.Philox(key=substream_key(master_seed, stream))
    return bitgen.random_raw(stop)


def _draw(spec: DistributionSpec, raw: np.ndarray) -> np.ndarray:
    """map raw 64-bit words to variates of `spec`, one word per variate"""
    uniform = ((raw >> np.uint64(11)).astype(float) + 0.5) * _U53

    match spec.root_kind:
        case "rademacher":
            centered = np.where((raw >> np.uint64(63)) == 1, 1.0, -1.0)
        case "gaussian_std":
            centered = special.ndtri(uniform)
        case "uniform_symmetric":
            centered = math.sqrt(3.0) * (2.0 * uniform - 1.0)
        case "degenerate":
            centered = np.zeros(raw.size)
        case _:
            raise EntriesError(f"cannot sample kind {spec.root_kind}")

    return centered + spec.mean


def _sample(
    specs: Sequence[DistributionSpec],
    count: int,
    master_seed: int,
    index_offset: int,
    stream: int,
) -> np.ndarray:
    if not specs:
        raise EntriesError("distribution spec list is empty")
    if count < 1:
        raise EntriesError(f"entry count must be >= 1, got {count}")
    if index_offset < 0:
        raise EntriesError(f"index offset must be >= 0, got {index_offset}")

    raw = _raw_words(master_seed, index_offset + count, stream)[index_offset:]
    slot = np.arange(index_offset, index_offset + count) % len(specs)

    values = np.empty(count)
    for pos, spec in enumerate(specs):
        mask = slot == pos
        values[mask] = _draw(spec, raw[mask])

    return values


def sample_entries(
    specs: Sequence[DistributionSpec],
    L: int,
    master_seed: int,
    index_offset: int = 0,
) -> EntrySequence:
    """
    Draw X_j for j = index_offset, ..., index_offset + L - 1, with X_j taken
    from specs[j mod len(specs)].

    Parameters
    ----------
    specs:
        Non-empty cyclic list of entry laws.

    L:
        Number of values, at least 1.

    master_seed:
        Non-negative seed; the result is a pure function of the inputs.

    index_offset:
        First coefficient index to produce.
    """
    values = _sample(specs, L, master_seed, index_offset, stream=0)
    return EntrySequence(
        values=values,
        specs=tuple(specs),
        master_seed=master_seed,
        index_offset=index_offset,
    )


def symmetrized_entries(
    specs: Sequence[DistributionSpec], L: int, master_seed: int
) -> EntrySequence:
    """
    Return X - X' where X' is an independent copy drawn from a separate
    Philox key.  The differences are symmetric with mean zero.
    """
    values = _sample(specs, L, master_seed, 0, stream=0)
    values = values - _sample(specs, L, master_seed, 0, stream=1)
    return EntrySequence(values=values, specs=tuple(specs), master_seed=master_seed)
