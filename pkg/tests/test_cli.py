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

import json
from pathlib import Path
from xml.etree import ElementTree

import numpy as np
import pytest
import scipy.linalg
from click.testing import CliRunner

from toeplitz_norm.cli import cli, read_csv_rows
from toeplitz_norm.ensembles import StructuredMatrix, densify
from toeplitz_norm.experiments import CSV_COLUMNS, ExperimentConfig, run_sweep

QUIET = ["--log-level", "ERROR"]


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def config_file(tmp_path):
    """write an experiment config JSON and return its path"""

    def _write(**overrides) -> Path:
        data = dict(
            ensemble="sym_toeplitz",
            dist=[{"kind": "rademacher"}],
            n_list=[4, 16, 64],
            replications=5,
            seed=7,
            compute_processes=["upper_Y", "fejer_lower"],
        )
        data.update(overrides)
        path = tmp_path / "config.json"
        path.write_text(json.dumps(data))
        return path

    return _write


def invoke(runner: CliRunner, *args: str, exit_code: int = 0):
    result = runner.invoke(cli, [*QUIET, *args])
    assert result.exit_code == exit_code, result.output
    return result


def sample_doc(runner, tmp_path, *args: str) -> Path:
    out = tmp_path / "matrix.json"
    invoke(runner, "sample", *args, "--out", str(out))
    return out


def test_all_commands_registered(runner):
    assert set(cli.commands) == {"sample", "norm", "suptrig", "bounds", "sweep", "report"}
    result = invoke(runner, "--help")
    for name in cli.commands:
        assert name in result.output


# -----------------------------------------------------------------------------
# sample, norm, suptrig
# -----------------------------------------------------------------------------


def test_sample_document(runner, tmp_path):
    path = sample_doc(
        runner, tmp_path, "--ensemble", "sym_toeplitz", "--dist", "rademacher",
        "--n", "8", "--seed", "3",
    )
    doc = json.loads(path.read_text())

    assert doc["master_seed"] == 3
    assert doc["dist"] == [{"kind": "rademacher"}]
    assert len(doc["entries"]) == 9
    assert set(doc["entries"]) <= {-1.0, 1.0}
    assert doc["matrix"] == dict(kind="sym_toeplitz", n=8, coeffs=doc["entries"][:8])


def test_sample_is_reproducible(runner, tmp_path):
    args = ["sample", "--ensemble", "hankel", "--dist", '{"kind": "gaussian_std", "m": 1}',
            "--dist", "uniform_symmetric", "--n", "5", "--seed", "11"]
    first = invoke(runner, *args).stdout
    second = invoke(runner, *args).stdout

    assert first == second
    assert len(json.loads(first)["matrix"]["coeffs"]) == 9


@pytest.mark.parametrize(
    "args",
    [
        ["--ensemble", "sym_toeplitz", "--dist", "cauchy", "--n", "4", "--seed", "1"],
        ["--ensemble", "sym_toeplitz", "--dist", "{bad json", "--n", "4", "--seed", "1"],
    ],
)
def test_sample_bad_dist(runner, args):
    invoke(runner, "sample", *args, exit_code=2)


@pytest.mark.parametrize("kind", ["sym_toeplitz", "nonsym_toeplitz", "hankel", "sym_circulant"])
def test_norm_matches_dense(runner, tmp_path, kind):
    path = sample_doc(
        runner, tmp_path, "--ensemble", kind, "--dist", "gaussian_std",
        "--n", "20", "--seed", "5",
    )
    matrix = StructuredMatrix.from_dict(json.loads(path.read_text())["matrix"])
    oracle = scipy.linalg.svdvals(densify(matrix))[0]

    for method in ("dense", "iterative"):
        doc = json.loads(invoke(runner, "norm", "--in", str(path), "--method", method).stdout)
        assert doc["kind"] == kind
        assert doc["certified"]
        assert doc["value"] == pytest.approx(oracle, rel=1e-6)


def test_norm_dft_circulant_only(runner, tmp_path):
    path = sample_doc(
        runner, tmp_path, "--ensemble", "sym_circulant", "--dist", "rademacher",
        "--n", "9", "--seed", "2",
    )
    doc = json.loads(invoke(runner, "norm", "--in", str(path), "--method", "dft").stdout)
    assert doc["method"] == "dft_exact"
    assert doc["residual"] == 0.0

    path = sample_doc(
        runner, tmp_path, "--ensemble", "sym_toeplitz", "--dist", "rademacher",
        "--n", "9", "--seed", "2",
    )
    invoke(runner, "norm", "--in", str(path), "--method", "dft", exit_code=2)


def test_norm_accepts_bare_matrix(runner, tmp_path):
    path = tmp_path / "bare.json"
    path.write_text(json.dumps(dict(kind="sym_toeplitz", n=3, coeffs=[1, 1, 1])))

    doc = json.loads(invoke(runner, "norm", "--in", str(path)).stdout)
    assert doc["n"] == 3
    assert doc["value"] == pytest.approx(3.0)


def test_norm_bad_document(runner, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("[1, 2")
    invoke(runner, "norm", "--in", str(path), exit_code=2)

    path.write_text(json.dumps(dict(kind="sym_toeplitz", n=3)))
    invoke(runner, "norm", "--in", str(path), exit_code=3)


def test_suptrig_sandwich(runner, tmp_path):
    path = sample_doc(
        runner, tmp_path, "--ensemble", "sym_toeplitz", "--dist", "rademacher",
        "--n", "32", "--seed", "9",
    )
    norm = json.loads(invoke(runner, "norm", "--in", str(path)).stdout)["value"]
    upper = json.loads(
        invoke(runner, "suptrig", "--in", str(path), "--process", "upper_Y").stdout
    )
    lower = json.loads(
        invoke(runner, "suptrig", "--in", str(path), "--process", "fejer_lower").stdout
    )

    assert upper["grid_size"] == 64 * 32
    assert upper["degree"] == 31
    assert lower["grid_max"] <= norm + 1e-9
    assert norm <= upper["certified_upper"] + 1e-9


def test_suptrig_plain_z(runner, tmp_path):
    path = sample_doc(
        runner, tmp_path, "--ensemble", "hankel", "--dist", "rademacher",
        "--n", "16", "--seed", "4",
    )
    doc = json.loads(
        invoke(runner, "suptrig", "--in", str(path), "--process", "plain_Z",
               "--grid-factor", "8").stdout
    )
    assert doc["process"] == "plain_Z"
    assert doc["grid_size"] == 8 * 16
    assert 0 < doc["grid_max"] <= 16

    # symmetric processes do not apply to a Hankel matrix
    invoke(runner, "suptrig", "--in", str(path), "--process", "upper_Y", exit_code=2)

    bare = tmp_path / "bare.json"
    bare.write_text(json.dumps(json.loads(path.read_text())["matrix"]))
    invoke(runner, "suptrig", "--in", str(bare), "--process", "plain_Z", exit_code=2)


# -----------------------------------------------------------------------------
# bounds
# -----------------------------------------------------------------------------


def test_bounds_document(runner):
    doc = json.loads(invoke(runner, "bounds", "--n", "2").stdout)

    assert doc["n"] == 2
    assert doc["dudley"]["closed_form"] == pytest.approx(8.343, abs=1e-3)
    assert doc["dudley"]["integral_value"] <= doc["dudley"]["closed_form"]
    assert doc["fejer"]["l2"] == pytest.approx(np.sqrt(1.5))
    assert doc["fejer"]["l2_inequality"] and doc["fejer"]["l4_inequality"]
    assert doc["limsup"]["probability"] == pytest.approx(0.25)
    assert doc["gaussian_tail_moment"]["exact"] <= doc["gaussian_tail_moment"]["bound"]


def test_bounds_n1_and_constants(runner):
    doc = json.loads(invoke(runner, "bounds", "--n", "1", "--K", "2.5").stdout)

    assert doc["constants"]["K_dudley"] == 2.5
    assert doc["concentration"] is None
    assert doc["limsup"] is None
    assert doc["weak_limsup"] is None
    assert doc["covering_number_eps_1"] == 4.0

    invoke(runner, "bounds", "--n", "4", "--K", "0", exit_code=2)


# -----------------------------------------------------------------------------
# sweep and report
# -----------------------------------------------------------------------------


def test_sweep_writes_reports(runner, tmp_path, config_file):
    out = tmp_path / "out"
    invoke(runner, "sweep", "--config", str(config_file()), "--out-dir", str(out),
           "--format", "csv,json,svg")

    lines = (out / "sweep.csv").read_text().splitlines()
    assert lines[0].startswith("# seed=7 ensemble=sym_toeplitz")
    assert tuple(lines[1].split(",")) == CSV_COLUMNS
    assert len(lines) == 2 + 15
    assert all(len(line.split(",")) == 14 for line in lines[1:])

    summary = json.loads((out / "sweep.json").read_text())
    assert summary["meta"]["seed"] == 7
    assert summary["n_records"] == 15
    assert summary["sandwich_violations"] == 0
    assert [each["n"] for each in summary["per_n"]] == [4, 16, 64]

    svg = ElementTree.parse(out / "sweep.svg").getroot()
    markers = next(el for el in svg.iter() if el.get("id") == "mean-markers")
    assert sum(1 for el in markers.iter() if el.tag.endswith("}use")) == 3
    assert any(el.get("id") == "quantile-band" for el in svg.iter())


def test_sweep_csv_parses_back(runner, tmp_path, config_file):
    path = config_file()
    out = tmp_path / "out"
    invoke(runner, "sweep", "--config", str(path), "--out-dir", str(out))

    records, _ = run_sweep(ExperimentConfig.model_validate_json(path.read_text()))
    rows = read_csv_rows(out / "sweep.csv")

    assert len(rows) == len(records)
    for row, rec in zip(rows, records):
        expected = rec.to_row()
        assert (row.n, row.replication, row.seed) == (expected.n, expected.replication, expected.seed)
        assert abs(row.norm - expected.norm) <= 1e-12
        assert abs(row.upper_Y_certified - expected.upper_Y_certified) <= 1e-12


def test_sweep_reruns_are_identical(runner, tmp_path, config_file):
    path = config_file()
    first, second = tmp_path / "a", tmp_path / "b"
    for out in (first, second):
        invoke(runner, "--threads", "3", "sweep", "--config", str(path),
               "--out-dir", str(out), "--format", "csv,json,svg")

    for name in ("sweep.csv", "sweep.json", "sweep.svg"):
        assert (first / name).read_bytes() == (second / name).read_bytes()


def test_sweep_flags_override_config(runner, tmp_path, config_file):
    out = tmp_path / "out"
    invoke(runner, "sweep", "--config", str(config_file()), "--out-dir", str(out),
           "--n", "8", "--replications", "2", "--seed", "1", "--format", "json")

    summary = json.loads((out / "sweep.json").read_text())
    assert summary["meta"]["seed"] == 1
    assert summary["meta"]["replications"] == 2
    assert [each["n"] for each in summary["per_n"]] == [8]
    assert not (out / "sweep.csv").exists()


@pytest.mark.parametrize(
    "overrides, flags",
    [
        (dict(n_list=[0]), []),
        (dict(ensemble="triangular"), []),
        (dict(), ["--method", "dense", "--n", "5000"]),
        (dict(), ["--format", "csv,xls"]),
    ],
)
def test_sweep_config_errors(runner, tmp_path, config_file, overrides, flags):
    invoke(runner, "sweep", "--config", str(config_file(**overrides)),
           "--out-dir", str(tmp_path / "out"), *flags, exit_code=2)


def test_sweep_without_config(runner, tmp_path):
    invoke(runner, "sweep", "--out-dir", str(tmp_path / "out"), exit_code=2)
    invoke(runner, "sweep", "--out-dir", str(tmp_path / "out"), "--n", "8", exit_code=2)


def test_report_command(runner, tmp_path, config_file):
    out = tmp_path / "out"
    invoke(runner, "sweep", "--config", str(config_file()), "--out-dir", str(out))

    invoke(runner, "report", "--in", str(out / "sweep.csv"),
           "--svg", str(tmp_path / "plot.svg"), "--json", str(tmp_path / "summary.json"))

    fresh = json.loads((tmp_path / "summary.json").read_text())
    stored = json.loads((out / "sweep.json").read_text())
    stored.pop("meta")
    assert fresh == stored
    assert (tmp_path / "plot.svg").read_text().startswith("<?xml")


def test_report_sandwich_violation(runner, tmp_path, config_file):
    out = tmp_path / "out"
    invoke(runner, "sweep", "--config", str(config_file()), "--out-dir", str(out))

    csv_path = out / "sweep.csv"
    lines = csv_path.read_text().splitlines()
    cells = lines[2].split(",")
    cells[CSV_COLUMNS.index("fejer_lower")] = repr(float(cells[CSV_COLUMNS.index("norm")]) + 1.0)
    lines[2] = ",".join(cells)
    csv_path.write_text("\n".join(lines) + "\n")

    invoke(runner, "report", "--in", str(csv_path), exit_code=4)


def test_report_bad_input(runner, tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("a,b,c\n1,2,3\n")
    invoke(runner, "report", "--in", str(path), exit_code=3)

    path.write_text(",".join(CSV_COLUMNS) + "\n")
    invoke(runner, "report", "--in", str(path), "--json", str(tmp_path / "s.json"), exit_code=3)
