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

import logging

import pytest
from click.testing import CliRunner

from toeplitz_norm import errors
from toeplitz_norm.errors import ConfigError
from toeplitz_norm.logger import get_logger, setup_logging
from toeplitz_norm.settings import (
    DEFAULT_DENSE_CAP,
    ENV_THREADS,
    HarnessSettings,
    g_settings,
    settings_init,
)
from toeplitz_norm.cli import cli


def test_defaults():
    config = settings_init()
    assert config is g_settings.config
    assert config == HarnessSettings()
    assert config.threads == 1
    assert config.dense_cap == DEFAULT_DENSE_CAP == 4096
    assert config.probe_attempts == 2


def test_threads_from_environment(monkeypatch):
    monkeypatch.setenv(ENV_THREADS, "6")
    assert settings_init().threads == 6


def test_overrides_beat_environment(monkeypatch):
    monkeypatch.setenv(ENV_THREADS, "6")
    config = settings_init(dict(threads=2, dense_cap=128, log_level=None))
    assert config.threads == 2
    assert config.dense_cap == 128
    assert config.log_level == "INFO"


@pytest.mark.parametrize(
    "overrides", [dict(threads=0), dict(dense_cap=-1), dict(colour="blue")]
)
def test_invalid_settings(overrides):
    with pytest.raises(ConfigError, match="harness settings"):
        settings_init(overrides)


def test_invalid_environment(monkeypatch):
    monkeypatch.setenv(ENV_THREADS, "many")
    with pytest.raises(ConfigError):
        settings_init()


def test_cli_threads_option():
    result = CliRunner().invoke(cli, ["--log-level", "ERROR", "--threads", "3", "bounds", "--n", "2"])
    assert result.exit_code == 0
    assert g_settings.config.threads == 3
    assert g_settings.config.log_level == "ERROR"


def test_cli_bad_environment(monkeypatch):
    monkeypatch.setenv(ENV_THREADS, "0")
    result = CliRunner().invoke(cli, ["--log-level", "ERROR", "bounds", "--n", "2"])
    assert result.exit_code == 2


@pytest.mark.parametrize(
    "exc, code",
    [
        (errors.ConfigError, 2),
        (errors.EntriesError, 3),
        (errors.EnsembleError, 3),
        (errors.DenseCapError, 3),
        (errors.GridError, 3),
        (errors.BoundInputError, 3),
        (errors.ReportError, 3),
        (errors.InvariantViolation, 4),
    ],
)
def test_error_exit_codes(exc, code):
    assert issubclass(exc, errors.ToeplitzNormError)
    assert exc.exit_code == code


def test_logger_setup_is_idempotent():
    log = setup_logging("WARNING")
    handlers = list(log.handlers)

    assert setup_logging(logging.DEBUG) is log
    assert log.handlers == handlers
    assert log.level == logging.DEBUG
    assert get_logger() is log
    assert log.name == "toeplitz_norm"

    setup_logging(logging.INFO)
