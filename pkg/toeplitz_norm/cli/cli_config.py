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

from typing import Optional, Any
from pathlib import Path
import json

# -----------------------------------------------------------------------------
# Public Imports
# -----------------------------------------------------------------------------

from first import first
from pydantic import ValidationError

# -----------------------------------------------------------------------------
# Private Imports
# -----------------------------------------------------------------------------

from toeplitz_norm.errors import ConfigError
from toeplitz_norm.logger import get_logger
from toeplitz_norm.settings import g_settings
from toeplitz_norm.entries import DistributionSpec
from toeplitz_norm.experiments import ExperimentConfig

# -----------------------------------------------------------------------------
# Exports
# -----------------------------------------------------------------------------

__all__ = ["load_json", "parse_dist", "parse_config"]

# -----------------------------------------------------------------------------
#
#                                 CODE BEGINS
#
# -----------------------------------------------------------------------------


def load_json(path: Path) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise ConfigError(f"{path}: file not found")
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: malformed JSON: {exc}")


def parse_dist(text: str) -> DistributionSpec:
    """
    A --dist value: either a bare kind name ("rademacher") or a JSON object
    ('{"kind": "gaussian_std", "m": 1}').
    """
    try:
        data = json.loads(text) if text.lstrip().startswith("{") else dict(kind=text)
        return DistributionSpec.model_validate(data)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"--dist {text!r}: malformed JSON: {exc}")
    except ValidationError as exc:
        raise ConfigError(f"--dist {text!r}: {exc}")


def _validate(data: dict, source: str) -> ExperimentConfig:
    try:
        return ExperimentConfig.model_validate(data)
    except ValidationError as exc:
        raise ConfigError(f"{source}: invalid experiment config:\n{exc}")


def parse_config(path: Optional[Path] = None, **flags) -> ExperimentConfig:
    """
    Resolve an ExperimentConfig from an optional JSON file and command-line
    flags.  Precedence: built-in defaults < file < flags; flags given as None
    are ignored.  Flag names are the config's attribute names ("specs",
    "master_seed", ...).

    Raises ConfigError for malformed files, invalid values, and for the
    dense method combined with an n above the dense cap.
    """
    log = get_logger()
    data = load_json(path) if path else dict()
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: expected a JSON object")

    from_file = _validate(data, str(path)) if path else None

    if overrides := {key: value for key, value in flags.items() if value is not None}:
        base = from_file.model_dump(by_alias=False) if from_file else dict()
        config = _validate(base | overrides, "command line")
    elif from_file:
        config = from_file
    else:
        raise ConfigError("no config file and no flags given")

    if from_file and (changed := config - from_file):
        log.info(f"command line overrides config file fields: {sorted(changed)}")

    cap = g_settings.config.dense_cap
    if config.norm_method == "dense" and (
        too_big := first(config.n_list, key=lambda n: n > cap)
    ):
        raise ConfigError(
            f"norm_method 'dense' with n={too_big} exceeds the dense cap {cap}; "
            "use 'auto' or 'iterative', or drop the larger dimensions"
        )

    return config
