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

from typing import Sequence, Literal, Optional
from pathlib import Path
import csv
import io
import json

# -----------------------------------------------------------------------------
# Public Imports
# -----------------------------------------------------------------------------

import matplotlib
from matplotlib.figure import Figure

# -----------------------------------------------------------------------------
# Private Imports
# -----------------------------------------------------------------------------

from toeplitz_norm.errors import ReportError
from toeplitz_norm.experiments import TrialRow, SweepSummary, CSV_COLUMNS

# -----------------------------------------------------------------------------
# Exports
# -----------------------------------------------------------------------------

__all__ = [
    "ReportFormat",
    "emit_report",
    "render_csv",
    "render_json",
    "render_svg",
    "read_csv_rows",
]

# -----------------------------------------------------------------------------
#
#                                 CODE BEGINS
#
# -----------------------------------------------------------------------------

ReportFormat = Literal["csv", "json", "svg"]

_SVG_HASHSALT = "toeplitz-norm"


def render_csv(rows: Sequence[TrialRow], meta: Optional[dict] = None) -> str:
    """
    One "#" comment line of run metadata, the header, one line per row.
    Floats are written with repr() so they parse back exactly.
    """
    buf = io.StringIO()
    if meta:
        buf.write("# " + " ".join(f"{k}={v}" for k, v in meta.items()) + "\n")

    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    writer.writerows(row.csv_cells() for row in rows)
    return buf.getvalue()


def read_csv_rows(path: Path) -> list[TrialRow]:
    """parse a CSV written by render_csv back into rows"""
    try:
        lines = [
            line
            for line in Path(path).read_text().splitlines()
            if not line.startswith("#")
        ]
    except OSError as exc:
        raise ReportError(f"{path}: {exc}")

    reader = csv.DictReader(lines)
    if tuple(reader.fieldnames or ()) != CSV_COLUMNS:
        raise ReportError(f"{path}: header does not match {','.join(CSV_COLUMNS)}")

    return [TrialRow.from_csv_cells(row) for row in reader]


def render_json(summary: SweepSummary, meta: Optional[dict] = None) -> str:
    doc = summary.model_dump(mode="json")
    if meta:
        doc = dict(meta=meta) | doc
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def render_svg(rows: Sequence[TrialRow], summary: SweepSummary) -> str:
    """
    ||T_n|| / sqrt(n ln n) against n on a log x axis: every trial as a point
    (id "trials"), the per-n means as a line with one marker per n (id
    "mean-markers"), and the q05..q95 band (id "quantile-band").
    """
    points = [(r.n, r.ratio_sqrt_nlogn) for r in rows if r.ratio_sqrt_nlogn is not None]
    per_n = [each for each in summary.per_n if each.ratio_sqrt_nlogn is not None]

    fig = Figure(figsize=(6.4, 4.0))
    ax = fig.add_subplot()
    ax.set_xscale("log")

    if points:
        xs, ys = zip(*points)
        ax.scatter(xs, ys, s=6, alpha=0.35, color="tab:blue", gid="trials")

    if per_n:
        ns = [each.n for each in per_n]
        stats = [each.ratio_sqrt_nlogn for each in per_n]
        ax.fill_between(
            ns,
            [s.q05 for s in stats],
            [s.q95 for s in stats],
            color="tab:blue",
            alpha=0.15,
            gid="quantile-band",
        )
        ax.plot(ns, [s.mean for s in stats], color="tab:red", gid="mean-line")
        ax.plot(
            ns,
            [s.mean for s in stats],
            linestyle="none",
            marker="D",
            color="tab:red",
            gid="mean-markers",
        )

    ax.set_xlabel("n")
    ax.set_ylabel(r"$\|T_n\| / \sqrt{n \ln n}$")

    buf = io.StringIO()
    with matplotlib.rc_context({"svg.hashsalt": _SVG_HASHSALT}):
        fig.savefig(buf, format="svg", metadata={"Date": None})
    return buf.getvalue()


def emit_report(
    rows: Sequence[TrialRow],
    summary: SweepSummary,
    fmt: ReportFormat,
    path: Path,
    meta: Optional[dict] = None,
) -> Path:
    """
    Write one report file.  Raises ReportError for empty input or an
    unwritable path.
    """
    if not rows:
        raise ReportError("no trial records to report")

    match fmt:
        case "csv":
            text = render_csv(rows, meta)
        case "json":
            text = render_json(summary, meta)
        case "svg":
            text = render_svg(rows, summary)
        case _:
            raise ReportError(f"unknown report format {fmt!r}")

    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise ReportError(f"cannot write {path}: {exc}")

    return Path(path)
