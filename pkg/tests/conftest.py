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

import numpy as np
import pytest

from toeplitz_norm.settings import settings_init, ENV_THREADS
from toeplitz_norm.entries import DistributionSpec, EntrySequence
from toeplitz_norm.experiments import ExperimentConfig


@pytest.fixture(autouse=True)
def default_settings(monkeypatch):
    """every test starts from the built-in harness settings"""
    monkeypatch.delenv(ENV_THREADS, raising=False)
    settings_init()
    yield
    monkeypatch.delenv(ENV_THREADS, raising=False)
    settings_init()


@pytest.fixture
def rademacher() -> DistributionSpec:
    return DistributionSpec(kind="rademacher")


@pytest.fixture
def gaussian() -> DistributionSpec:
    return DistributionSpec(kind="gaussian_std")


@pytest.fixture
def values():
    """wrap literal coefficient values as an EntrySequence"""

    def _values(*xs, offset: int = 0) -> EntrySequence:
        return EntrySequence.from_values(np.array(xs, dtype=float), offset)

    return _values


@pytest.fixture
def make_config():
    """an ExperimentConfig from the minimal JSON form plus overrides"""

    def _make(**overrides) -> ExperimentConfig:
        data = dict(
            ensemble="sym_toeplitz",
            dist=[{"kind": "rademacher"}],
            n_list=[16],
            replications=2,
            seed=7,
        )
        data.update(overrides)
        return ExperimentConfig.model_validate(data)

    return _make
