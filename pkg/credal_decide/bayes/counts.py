"""Sufficient statistics of a sample of (x, y) pairs."""
from dataclasses import dataclass

import numpy as np

from ..errors import DimensionError


@dataclass(frozen=True, eq=False)
class SampleCounts:
    """Counts of each (x, y) pair, stored as a table indexed ``[x, y]``.

    Examples
    --------
    >>> counts = counts_from_sample([(0, 0), (0, 1), (1, 1)], x_size=2)
    >>> counts.n_y, counts.n
    ((1, 2), 3)
    >>> counts.table.tolist()
    [[1, 1], [0, 1]]
    """

    table: np.ndarray

    def __post_init__(self):
        table = np.array(self.table)
        if table.ndim != 2 or table.shape[1] != 2 or table.shape[0] < 1:
            raise DimensionError(
                f"counts must be indexed [x, y] with binary y, got shape {table.shape}"
            )
        if not np.issubdtype(table.dtype, np.integer):
            if not np.array_equal(table, np.round(table)):
                raise DimensionError("counts must be integers")
            table = table.astype(int)
        if (table < 0).any():
            raise DimensionError("counts must be nonnegative")
        table = table.astype(np.int64)
        table.setflags(write=False)
        object.__setattr__(self, "table", table)

    @classmethod
    def zeros(cls, x_size):
        return cls(np.zeros((x_size, 2), dtype=np.int64))

    @property
    def x_size(self):
        return self.table.shape[0]

    @property
    def n_y(self):
        """Number of observations with Y = 0 and with Y = 1."""
        n0, n1 = self.table.sum(axis=0)
        return int(n0), int(n1)

    @property
    def n_x(self):
        return self.table.sum(axis=1)

    @property
    def n(self):
        return int(self.table.sum())

    def add(self, x, y):
        """Counts with one more observation of (*x*, *y*)."""
        _check_pair(x, y, self.x_size)
        table = np.array(self.table)
        table[x, y] += 1
        return SampleCounts(table)


def _check_pair(x, y, x_size):
    if not 0 <= x < x_size:
        raise DimensionError(f"observation {x} is out of range for x_size {x_size}")
    if y not in (0, 1):
        raise DimensionError(f"outcome must be 0 or 1, got {y}")


def counts_from_sample(sample, x_size):
    """Tally a sequence of (x, y) pairs.

    Parameters
    ----------
    sample : iterable of (int, int)
        Observations, with x in ``range(x_size)`` and y in {0, 1}.
    x_size : int
        Number of possible observations.

    Returns
    -------
    SampleCounts
    """
    table = np.zeros((x_size, 2), dtype=np.int64)
    for x, y in sample:
        _check_pair(x, y, x_size)
        table[x, y] += 1
    return SampleCounts(table)
