"""Loss tables.

A loss is indexed ``table[y, a]`` or, when it also depends on the
observation, ``table[y, a, x]``. Entries are finite or ``+inf``.

Examples
--------
>>> loss = LossSpec.asymmetric(1.4)
>>> loss.table.tolist()
[[0.0, 1.4], [1.0, 0.0]]
>>> LossSpec.observation_mismatch().at(0).tolist()
[[0.0, 1.0], [2.0, 0.0]]
"""
import numpy as np

from ..errors import DimensionError, UnsupportedLossError


class LossSpec:
    """Loss of taking action *a* when the outcome is *y* (and X = *x*).

    Parameters
    ----------
    table : array_like
        Loss values indexed ``[y, a]`` or ``[y, a, x]``.
    name : str, optional
        Tag used in reports.
    """

    def __init__(self, table, name="custom"):
        table = np.array(table, dtype=float)
        if table.ndim not in (2, 3):
            raise DimensionError(
                f"loss table must be indexed [y, a] or [y, a, x], got shape {table.shape}"
            )
        if table.size == 0:
            raise DimensionError("empty loss table")
        if np.isnan(table).any():
            raise UnsupportedLossError("nan entry")
        if np.isneginf(table).any():
            raise UnsupportedLossError("-inf entry")
        table.setflags(write=False)

        self._table = table
        self._name = str(name)

    @classmethod
    def zero_one(cls, size=2):
        """Classification loss: 0 for a correct prediction, 1 otherwise."""
        return cls(1.0 - np.eye(size), name="zero-one")

    @classmethod
    def asymmetric(cls, alpha):
        """Binary loss charging *alpha* for predicting 1 when Y = 0."""
        return cls([[0.0, alpha], [1.0, 0.0]], name=f"asymmetric:{alpha:g}")

    @classmethod
    def observation_scaled(cls, x_size=2):
        """Binary loss ``(x + 1) |y - a|``."""
        y, a, x = np.ogrid[:2, :2, :x_size]
        return cls((x + 1.0) * np.abs(y - a), name="observation-scaled")

    @classmethod
    def observation_mismatch(cls, x_size=2):
        """Binary loss ``(|x - y| + 1) |y - a|``."""
        y, a, x = np.ogrid[:2, :2, :x_size]
        return cls((np.abs(x - y) + 1.0) * np.abs(y - a), name="observation-mismatch")

    @property
    def table(self):
        return self._table

    @property
    def name(self):
        return self._name

    @property
    def y_size(self):
        return self._table.shape[0]

    @property
    def action_count(self):
        return self._table.shape[1]

    @property
    def x_dependent(self):
        return self._table.ndim == 3

    @property
    def x_size(self):
        """Number of observations, or ``None`` for an x-independent loss."""
        return self._table.shape[2] if self.x_dependent else None

    @property
    def is_finite(self):
        return bool(np.isfinite(self._table).all())

    def __repr__(self):
        return f"LossSpec(name={self._name!r}, shape={self._table.shape})"

    def at(self, x):
        """The ``[y, a]`` table in effect when X = *x*."""
        if not self.x_dependent:
            return self._table
        if not 0 <= x < self.x_size:
            raise DimensionError(f"observation {x} is out of range for x_size {self.x_size}")
        return self._table[:, :, x]

    def slice(self, x):
        """x-independent loss equal to this one at X = *x*."""
        return LossSpec(self.at(x), name=f"{self._name}@{x}")

    def expanded(self, x_size):
        """Loss as a ``[y, a, x]`` array over *x_size* observations."""
        self.check_x_size(x_size)
        if self.x_dependent:
            return self._table
        return np.repeat(self._table[:, :, np.newaxis], x_size, axis=2)

    def check_x_size(self, x_size):
        if self.x_dependent and self.x_size != x_size:
            raise DimensionError(
                f"loss is defined for {self.x_size} observations, not {x_size}"
            )

    def require_x_independent(self):
        if self.x_dependent:
            raise UnsupportedLossError("loss depends on the observation")


def expected_table_loss(weights, table):
    """Sum of ``weights * table`` with zero-weight cells contributing nothing.

    An infinite loss only counts where it carries positive weight.

    >>> expected_table_loss(np.array([1.0, 0.0]), np.array([2.0, np.inf]))
    2.0
    """
    weights, table = np.broadcast_arrays(weights, table)
    terms = np.zeros(weights.shape)
    np.multiply(weights, table, out=terms, where=weights > 0.0)
    return float(terms.sum())
