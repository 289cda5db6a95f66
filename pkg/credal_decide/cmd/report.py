"""JSON and CSV reports.

Every report is an envelope holding the command, the library version, the
resolved scenario, the conventions used to compute it and a list of flat
rows. The CSV form writes the rows only, with a fixed column order per
command. Numbers are written with 12 significant digits in both forms.
"""
import json
import math

import numpy as np
import xarray as xr

from .._version import __version__
from ..utils import fmt12

DECISIONS = {
    "beta_averaging": (
        "averaged over the next observation; per-observation values in beta_by_x"
    ),
    "ess_convention": "ess:s sets every Dirichlet parameter to s / x_size",
    "conditioning": "regular extension, observations of probability <= 1e-12 dropped",
    "mixture": "greedy canonical decomposition of the behavioral rule",
    "tie_break": "lowest index",
    "rng": "numpy Philox keyed by SeedSequence(seed).spawn per block of 4096 runs",
}

COLUMNS = {
    "minimax": [
        "p",
        "x",
        "action",
        "criterion",
        "global_prob",
        "local_prob",
        "global_value",
        "local_value",
        "disagree",
        "inconsistent",
        "pay_not_to_know",
        "worst_local_value",
        "global_mixture",
    ],
    "dilation": [
        "p",
        "event",
        "x",
        "prior_lower",
        "prior_upper",
        "lower",
        "upper",
        "dilates",
        "dilation",
    ],
    "predict": [
        "p",
        "prior",
        "k",
        "q",
        "odds",
        "predictive_x",
        "dependent_weight",
        "action",
    ],
    "beta": [
        "n",
        "alpha",
        "prior",
        "beta",
        "beta_by_x",
        "risk_ignore",
        "risk_bayes",
        "gap",
        "relative_gap",
    ],
    "risk": [
        "model",
        "n",
        "strategy",
        "risk",
        "regret",
        "best_risk",
        "worst_regret",
        "regret_vs_baseline",
    ],
    "simulate": [
        "model",
        "n",
        "strategy",
        "runs",
        "seed",
        "mean",
        "standard_error",
        "exact",
        "z",
    ],
}


def encode(value):
    """A row value as written to JSON.

    >>> encode(2.0 / 3.0), encode(float("nan")), encode(np.int64(3)), encode(True)
    (0.666666666667, None, 3, True)
    """
    if value is None or isinstance(value, (bool, np.bool_)):
        return None if value is None else bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value):
            return None
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return fmt12(value)
    return value


def join_numbers(values):
    """Several numbers in one cell, separated by semicolons.

    >>> join_numbers([0.25, 1.0 / 3.0])
    '0.25;0.333333333333'
    """
    return ";".join(repr(encode(float(value))) for value in values)


def rows_from_dataset(dataset, columns):
    """Flatten a labelled result into rows, keeping *columns* that exist."""
    frame = dataset.to_dataframe().reset_index()
    present = [column for column in columns if column in frame.columns]
    return [
        {column: _scalar(record[column]) for column in present}
        for record in frame.to_dict(orient="records")
    ]


def _scalar(value):
    if isinstance(value, np.generic):
        return value.item()
    return value


def envelope(command, scenario, rows):
    return {
        "command": command,
        "version": __version__,
        "scenario": scenario.to_dict(),
        "decisions": dict(DECISIONS),
        "rows": [
            {key: encode(row.get(key)) for key in COLUMNS[command]} for row in rows
        ],
    }


def write_json(stream, command, scenario, rows):
    json.dump(envelope(command, scenario, rows), stream, indent=2)
    stream.write("\n")


def _csv_cell(value):
    value = encode(value)
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return value


def write_csv(stream, command, rows):
    columns = COLUMNS[command]
    table = xr.Dataset(
        {
            column: (
                "row",
                np.array([_csv_cell(row.get(column)) for row in rows], dtype=object),
            )
            for column in columns
        }
    )
    table.to_dataframe()[columns].to_csv(stream, index=False)


def write_report(stream, fmt, command, scenario, rows):
    """Write *rows* to *stream* as ``json`` or ``csv``."""
    if fmt == "csv":
        write_csv(stream, command, rows)
    else:
        write_json(stream, command, scenario, rows)
