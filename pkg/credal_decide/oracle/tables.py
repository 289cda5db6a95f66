"""Exact enumeration of training data through its count tables.

Every strategy in this package depends on the training sample only through
its counts, so expectations over samples of size n reduce to sums over the
compositions of n into ``2 * x_size`` cells, each weighted by its multinomial
probability.

Examples
--------
>>> from credal_decide.oracle import TrueModel
>>> model = TrueModel.independent(0.5, [0.5, 0.5], n=1)
>>> tables = list(enumerate_count_tables(model))
>>> [table.counts.table.ravel().tolist() for table in tables]
[[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]
>>> [round(table.weight, 12) for table in tables]
[0.25, 0.25, 0.25, 0.25]
"""
import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import partial

import numpy as np
from scipy.special import gammaln, xlogy

from ..bayes import SampleCounts
from ..errors import SizeCapError
from ..utils import worker_count

MAX_TABLES = 10**7
CHUNK_SIZE = 65536


@dataclass(frozen=True, eq=False)
class CountTable:
    """A possible training sample, summarized by its counts."""

    counts: SampleCounts
    weight: float


def table_count(n, x_size):
    """Number of count tables for *n* observations of *x_size* values.

    >>> table_count(4, 2)
    35
    """
    cells = 2 * x_size
    return math.comb(n + cells - 1, cells - 1)


def _check_size(model):
    count = table_count(model.n, model.x_size)
    if count > MAX_TABLES:
        raise SizeCapError("count tables", count, MAX_TABLES)
    return count


def _compositions(n, cells):
    """Compositions of *n* into *cells* parts, in chunks indexed ``[table, cell]``."""
    bars = itertools.combinations(range(n + cells - 1), cells - 1)
    while True:
        chunk = np.array(list(itertools.islice(bars, CHUNK_SIZE)), dtype=np.int64)
        if chunk.size == 0:
            return
        chunk = chunk.reshape(-1, cells - 1)
        size = chunk.shape[0]
        edges = np.hstack(
            [
                np.full((size, 1), -1, dtype=np.int64),
                chunk,
                np.full((size, 1), n + cells - 1, dtype=np.int64),
            ]
        )
        yield np.diff(edges, axis=1) - 1


def log_weights(tables, n, cells):
    """Log multinomial probability of each flattened table.

    Cells of probability zero give ``-inf`` wherever they are counted.
    """
    tables = np.asarray(tables)
    return (
        gammaln(n + 1.0)
        - gammaln(tables + 1.0).sum(axis=1)
        + xlogy(tables, cells).sum(axis=1)
    )


def enumerate_count_tables(model):
    """Every count table of *model*'s horizon with its probability.

    Parameters
    ----------
    model : TrueModel
        Distribution of each training pair and the horizon *n*.

    Yields
    ------
    CountTable

    Raises
    ------
    SizeCapError
        If there are more than ``MAX_TABLES`` tables.
    """
    _check_size(model)
    for flat in _compositions(model.n, model.cells.size):
        weights = np.exp(log_weights(flat, model.n, model.cells))
        for table, weight in zip(flat.reshape(-1, model.x_size, 2), weights):
            yield CountTable(SampleCounts(table), float(weight))


def _evaluate_chunk(model, evaluate, flat):
    weights = np.exp(log_weights(flat, model.n, model.cells))
    values = np.asarray(evaluate(flat.reshape(-1, model.x_size, 2)), dtype=float)
    weights = weights.reshape((-1,) + (1,) * (values.ndim - 1))
    terms = np.zeros(np.broadcast_shapes(weights.shape, values.shape))
    np.multiply(weights, values, out=terms, where=weights > 0.0)
    return terms.sum(axis=0)


def expectation(model, evaluate, workers=None):
    """Exact expectation of a function of the training counts.

    Parameters
    ----------
    model : TrueModel
        Distribution of the training data.
    evaluate : callable
        Maps a stack of count tables indexed ``[table, x, y]`` to values
        with a leading table axis.
    workers : int, optional
        Number of threads; read from the environment by default.

    Returns
    -------
    ndarray
        Expected value, with the trailing shape of *evaluate*'s output.

    Notes
    -----
    Tables are cut into fixed chunks and the per-chunk sums are combined
    in chunk order with :func:`math.fsum`, so the result does not depend on
    the number of threads.
    """
    _check_size(model)
    workers = worker_count() if workers is None else int(workers)
    chunks = _compositions(model.n, model.cells.size)
    job = partial(_evaluate_chunk, model, evaluate)

    partials = []
    with ThreadPoolExecutor(max_workers=workers) as pool:
        while True:
            batch = list(itertools.islice(chunks, 2 * workers))
            if not batch:
                break
            partials.extend(pool.map(job, batch))

    stacked = np.stack(partials)
    if stacked.ndim == 1:
        return np.array(math.fsum(stacked))
    return np.apply_along_axis(math.fsum, 0, stacked)


def total_weight(model):
    """Sum of all table probabilities, one up to rounding.

    >>> from credal_decide.oracle import TrueModel
    >>> round(float(total_weight(TrueModel.independent(0.3, [0.2, 0.8], n=20))), 12)
    1.0
    """
    return float(expectation(model, lambda tables: np.ones(len(tables))))
