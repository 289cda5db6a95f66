"""Probability vectors and joint distributions over finite sets.

Examples
--------
>>> joint = ParamJoint(p=0.3, alpha=(1.0, 0.0), beta=(0.0, 1.0)).joint()
>>> joint.y_marginal().mass.tolist()
[0.7, 0.3]
>>> joint.x_marginal().mass.tolist()
[0.3, 0.7]
"""
from dataclasses import dataclass

import numpy as np
from scipy.stats import entropy as _entropy

from ..errors import ConditioningUndefinedError, DimensionError, InvalidDistributionError

CONSTRUCTION_TOL = 1e-12
COMPARISON_TOL = 1e-9


def _frozen(values, ndim):
    array = np.array(values, dtype=float)
    if array.ndim != ndim:
        raise DimensionError(f"expected a {ndim}-d array, got shape {array.shape}")
    if array.size == 0:
        raise DimensionError("empty probability table")
    if np.isnan(array).any():
        raise InvalidDistributionError("nan entry")
    if (array < 0.0).any():
        raise InvalidDistributionError("negative entry")
    if abs(array.sum() - 1.0) > CONSTRUCTION_TOL:
        raise InvalidDistributionError(f"total mass {array.sum()!r}")
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class FiniteDistribution:
    """Probability vector over ``{0, ..., support_size - 1}``.

    Examples
    --------
    >>> FiniteDistribution.binary(0.25).mass.tolist()
    [0.75, 0.25]
    >>> FiniteDistribution((0.5, 0.6))  # doctest: +IGNORE_EXCEPTION_DETAIL
    Traceback (most recent call last):
    credal_decide.errors.InvalidDistributionError: invalid distribution (total mass 1.1)
    """

    mass: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "mass", _frozen(self.mass, 1))

    @classmethod
    def binary(cls, p):
        """Distribution on {0, 1} with probability *p* on 1."""
        p = float(p)
        return cls((1.0 - p, p))

    @classmethod
    def uniform(cls, size):
        if size < 1:
            raise DimensionError("support size must be positive")
        return cls(np.full(size, 1.0 / size))

    @classmethod
    def point(cls, size, index):
        mass = np.zeros(size)
        mass[index] = 1.0
        return cls(mass)

    @property
    def support_size(self):
        return self.mass.size

    def __getitem__(self, index):
        return float(self.mass[index])

    def __len__(self):
        return self.mass.size

    def total_variation(self, other):
        """Total-variation distance to another distribution on the same set.

        >>> FiniteDistribution((1.0, 0.0)).total_variation(FiniteDistribution((0.5, 0.5)))
        0.5
        """
        if other.support_size != self.support_size:
            raise DimensionError("support sizes differ")
        return 0.5 * float(np.abs(self.mass - other.mass).sum())


@dataclass(frozen=True, eq=False)
class JointDistribution:
    """Joint distribution over X x Y, stored as a matrix indexed ``[x, y]``."""

    mass: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "mass", _frozen(self.mass, 2))

    @classmethod
    def independent(cls, x_marginal, y_marginal):
        """Product of an X-marginal and a Y-marginal.

        >>> joint = JointDistribution.independent(
        ...     FiniteDistribution.uniform(2), FiniteDistribution.binary(0.5)
        ... )
        >>> joint.mass.tolist()
        [[0.25, 0.25], [0.25, 0.25]]
        """
        return cls(np.outer(x_marginal.mass, y_marginal.mass))

    @property
    def x_size(self):
        return self.mass.shape[0]

    @property
    def y_size(self):
        return self.mass.shape[1]

    @property
    def shape(self):
        return self.mass.shape

    def y_marginal(self):
        return FiniteDistribution(self.mass.sum(axis=0))

    def x_marginal(self):
        return FiniteDistribution(self.mass.sum(axis=1))

    def conditional_y(self, x):
        """Distribution of Y given X = *x*.

        >>> joint = JointDistribution([[0.1, 0.3], [0.6, 0.0]])
        >>> joint.conditional_y(0).mass.round(12).tolist()
        [0.25, 0.75]
        """
        row = self.mass[x]
        total = row.sum()
        if total <= CONSTRUCTION_TOL:
            raise ConditioningUndefinedError(x)
        return FiniteDistribution(row / total)


@dataclass(frozen=True, eq=False)
class ParamJoint:
    """Binary-Y joint parameterised by Pr(Y=1) and the two X-conditionals.

    Parameters
    ----------
    p : float
        Pr(Y = 1), strictly between 0 and 1.
    alpha : sequence of float
        Pr(X = j | Y = 1) for each j.
    beta : sequence of float
        Pr(X = j | Y = 0) for each j.
    """

    p: float
    alpha: FiniteDistribution
    beta: FiniteDistribution

    def __post_init__(self):
        if not 0.0 < float(self.p) < 1.0:
            raise InvalidDistributionError(f"p must lie in (0, 1), got {self.p!r}")
        object.__setattr__(self, "p", float(self.p))
        for name in ("alpha", "beta"):
            value = getattr(self, name)
            if not isinstance(value, FiniteDistribution):
                object.__setattr__(self, name, FiniteDistribution(value))
        if self.alpha.support_size != self.beta.support_size:
            raise DimensionError("alpha and beta must have the same length")

    @property
    def x_size(self):
        return self.alpha.support_size

    def joint(self):
        mass = np.empty((self.x_size, 2))
        mass[:, 1] = self.p * self.alpha.mass
        mass[:, 0] = (1.0 - self.p) * self.beta.mass
        return JointDistribution(mass)


def entropy(distribution, base=2):
    """Shannon entropy of a finite or joint distribution.

    Examples
    --------
    >>> entropy(FiniteDistribution.uniform(2))
    1.0
    """
    return float(_entropy(np.ravel(distribution.mass), base=base))
