"""Credal sets of joint distributions over X x Y.

A credal set is stored as the list of its extreme points. The only family
built combinatorially is the *marginal family*: every joint whose Y-marginal
equals a fixed distribution.

Examples
--------
>>> family = marginal_family(FiniteDistribution((2.0 / 3.0, 1.0 / 3.0)), 2)
>>> len(family)
4
>>> conditional_bounds(family, {1}, x=0)
ProbabilityInterval(lower=0.0, upper=1.0)
>>> conditional_bounds(family, {1})
ProbabilityInterval(lower=0.3333333333333333, upper=0.3333333333333333)
"""
import itertools
import warnings
from dataclasses import dataclass

import numpy as np

from ..errors import (
    ConditioningUndefinedError,
    DimensionError,
    InvalidDistributionError,
    SizeCapError,
    UnsupportedFamilyError,
)
from .distributions import (
    COMPARISON_TOL,
    CONSTRUCTION_TOL,
    FiniteDistribution,
    JointDistribution,
)

MAX_VERTICES = 10**6


@dataclass(frozen=True)
class ProbabilityInterval:
    """Lower and upper probability of an event."""

    lower: float
    upper: float

    def __post_init__(self):
        lower, upper = float(self.lower), float(self.upper)
        if not 0.0 <= lower <= upper <= 1.0:
            raise InvalidDistributionError(f"bad interval [{lower!r}, {upper!r}]")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @property
    def width(self):
        return self.upper - self.lower

    def is_point(self, tol=COMPARISON_TOL):
        return self.width <= tol

    def strictly_contains(self, other, tol=COMPARISON_TOL):
        """True if this interval extends beyond *other* on both sides."""
        return self.lower < other.lower - tol and self.upper > other.upper + tol


class CredalSet:
    """A polytope of joint distributions given by its vertices.

    Parameters
    ----------
    vertices : iterable of JointDistribution or array_like
        Extreme points. All must have the same shape.
    label : str, optional
        Tag used in reports.
    y_marginal : FiniteDistribution, optional
        Set only when every distribution in the set shares this Y-marginal
        and the set contains all of them (the marginal family).
    """

    def __init__(self, vertices, label="explicit", y_marginal=None):
        vertices = tuple(
            v if isinstance(v, JointDistribution) else JointDistribution(v)
            for v in vertices
        )
        if len(vertices) == 0:
            raise DimensionError("a credal set needs at least one vertex")
        shape = vertices[0].shape
        for vertex in vertices[1:]:
            if vertex.shape != shape:
                raise DimensionError(
                    f"vertex shapes differ ({vertex.shape} != {shape})"
                )
        if y_marginal is not None and y_marginal.support_size != shape[1]:
            raise DimensionError("y-marginal does not match the vertex shape")

        masses = np.stack([vertex.mass for vertex in vertices])
        masses.setflags(write=False)

        self._vertices = vertices
        self._masses = masses
        self._label = str(label)
        self._y_marginal = y_marginal

    @classmethod
    def singleton(cls, joint, label="singleton"):
        if not isinstance(joint, JointDistribution):
            joint = JointDistribution(joint)
        return cls([joint], label=label)

    @property
    def vertices(self):
        return self._vertices

    @property
    def masses(self):
        """Vertices stacked into an array indexed ``[vertex, x, y]``."""
        return self._masses

    @property
    def label(self):
        return self._label

    @property
    def y_marginal(self):
        return self._y_marginal

    @property
    def x_size(self):
        return self._masses.shape[1]

    @property
    def y_size(self):
        return self._masses.shape[2]

    def __len__(self):
        return len(self._vertices)

    def __iter__(self):
        return iter(self._vertices)

    def __getitem__(self, index):
        return self._vertices[index]

    def __repr__(self):
        return (
            f"CredalSet(label={self._label!r}, vertices={len(self)}, "
            f"shape={self._masses.shape[1:]})"
        )

    def drop(self, index):
        """Credal set with vertex *index* removed."""
        if len(self) == 1:
            raise DimensionError("cannot drop the only vertex")
        kept = [v for i, v in enumerate(self._vertices) if i != index]
        if len(kept) == len(self):
            raise DimensionError(f"no vertex {index}")
        return CredalSet(kept, label=self._label)

    def x_probabilities(self):
        """Pr(X = x) for every vertex, indexed ``[vertex, x]``."""
        return self._masses.sum(axis=2)

    def admissible(self, x):
        """Indices of vertices that give the observation positive probability."""
        _check_observation(self, x)
        return np.flatnonzero(self.x_probabilities()[:, x] > CONSTRUCTION_TOL)

    def conditioned(self, x):
        """Conditional Y-distributions of the admissible vertices at X = *x*.

        Returns
        -------
        tuple of ndarray
            Indices of the admissible vertices and their conditionals, one
            row per vertex.
        """
        index = self.admissible(x)
        if index.size == 0:
            raise ConditioningUndefinedError(x)
        rows = self._masses[index, x, :]
        return index, rows / rows.sum(axis=1, keepdims=True)

    def lower_expectation(self, values, x=None):
        """Lower expectation of *values* over the set.

        Parameters
        ----------
        values : array_like
            Values indexed ``[x, y]``, or ``[y]`` when *x* is given.
        x : int, optional
            Observed value of X. Vertices that give it probability zero are
            left out, as in :func:`conditional_bounds`.

        Examples
        --------
        >>> family = marginal_family(FiniteDistribution.binary(0.5), 2)
        >>> family.lower_expectation([[1.0, 0.0], [0.0, 0.0]])
        0.0
        >>> family.upper_expectation([[1.0, 0.0], [0.0, 0.0]])
        0.5
        >>> family.lower_expectation([0.0, 2.0], x=1)
        0.0
        """
        return float(self._expectations(values, x).min())

    def upper_expectation(self, values, x=None):
        """Upper expectation of *values*; see :meth:`lower_expectation`."""
        return float(self._expectations(values, x).max())

    def _expectations(self, values, x):
        values = np.asarray(values, dtype=float)
        if x is None:
            weights = self._masses
        else:
            _, weights = self.conditioned(x)
        if values.shape != weights.shape[1:]:
            raise DimensionError(
                f"values have shape {values.shape}, expected {weights.shape[1:]}"
            )
        if not np.isfinite(values).all():
            raise InvalidDistributionError("values must be finite")
        return np.tensordot(weights, values, axes=values.ndim)


def _check_observation(c, x):
    if not 0 <= x < c.x_size:
        raise DimensionError(f"observation {x} is out of range for x_size {c.x_size}")


def _event_mask(event, y_size):
    if isinstance(event, (int, np.integer)):
        event = (event,)
    mask = np.zeros(y_size, dtype=bool)
    for y in event:
        if not 0 <= y < y_size:
            raise DimensionError(f"outcome {y} is out of range for y_size {y_size}")
        mask[y] = True
    return mask


def marginal_family(p_y, x_size):
    """All joints over X x Y whose Y-marginal is *p_y*.

    The extreme points put all of the mass of each outcome y on a single
    observation f(y), one vertex for every function f from Y to X.

    Parameters
    ----------
    p_y : FiniteDistribution or array_like
        The fixed marginal of Y.
    x_size : int
        Number of observations.

    Returns
    -------
    CredalSet
        The family, with ``y_marginal`` set.

    Examples
    --------
    >>> len(marginal_family(FiniteDistribution((0.5, 0.5)), 3))
    9
    >>> len(marginal_family(FiniteDistribution((1.0, 0.0)), 2))
    2
    """
    if not isinstance(p_y, FiniteDistribution):
        p_y = FiniteDistribution(p_y)
    if x_size < 1:
        raise DimensionError("x_size must be positive")

    y_size = p_y.support_size
    count = x_size**y_size
    if count > MAX_VERTICES:
        raise SizeCapError("vertices", count, MAX_VERTICES)

    outcomes = np.arange(y_size)
    vertices, seen = [], set()
    for assignment in itertools.product(range(x_size), repeat=y_size):
        mass = np.zeros((x_size, y_size))
        mass[np.array(assignment), outcomes] = p_y.mass
        key = mass.tobytes()
        if key not in seen:
            seen.add(key)
            vertices.append(JointDistribution(mass))

    if len(vertices) < count:
        warnings.warn(
            f"marginal has null outcomes; {count - len(vertices)} duplicate vertices removed"
        )

    return CredalSet(vertices, label="marginal", y_marginal=p_y)


def conditional_bounds(c, event, x=None):
    """Lower and upper probability of *event* given X = *x*.

    Vertices that give the observation probability zero are left out
    (regular extension). With *x* of ``None`` the bounds are unconditional.

    Parameters
    ----------
    c : CredalSet
        The credal set.
    event : int or iterable of int
        Outcomes of Y making up the event.
    x : int, optional
        Observed value of X.

    Returns
    -------
    ProbabilityInterval
    """
    mask = _event_mask(event, c.y_size)
    if x is None:
        probs = c.masses[:, :, mask].sum(axis=(1, 2))
    else:
        _, rows = c.conditioned(x)
        probs = rows[:, mask].sum(axis=1)
    probs = np.clip(probs, 0.0, 1.0)
    return ProbabilityInterval(probs.min(), probs.max())


@dataclass(frozen=True)
class DilationReport:
    """Prior and per-observation intervals of an event.

    ``intervals[x]`` and ``dilates[x]`` are ``None`` and ``False`` for
    observations that every vertex rules out.
    """

    event: tuple
    prior: ProbabilityInterval
    intervals: tuple
    dilates: tuple
    dilation: bool


def dilation_report(c, event):
    """Check whether conditioning on X strictly widens the interval of *event*.

    Examples
    --------
    >>> report = dilation_report(marginal_family(FiniteDistribution.binary(0.3), 2), 1)
    >>> report.dilation, report.dilates
    (True, (True, True))
    """
    mask = _event_mask(event, c.y_size)
    prior = conditional_bounds(c, mask.nonzero()[0])

    x_probs = c.x_probabilities()
    intervals, dilates = [], []
    for x in range(c.x_size):
        if (x_probs[:, x] > CONSTRUCTION_TOL).any():
            interval = conditional_bounds(c, mask.nonzero()[0], x=x)
            intervals.append(interval)
            dilates.append(interval.strictly_contains(prior))
        else:
            intervals.append(None)
            dilates.append(False)

    admissible = [d for d, i in zip(dilates, intervals) if i is not None]
    return DilationReport(
        event=tuple(int(y) for y in mask.nonzero()[0]),
        prior=prior,
        intervals=tuple(intervals),
        dilates=tuple(dilates),
        dilation=bool(admissible) and all(admissible),
    )


def maxent_select(c):
    """Maximum-entropy member of the marginal family.

    X is uniform and independent of Y, so conditioning on X leaves the
    marginal of Y unchanged.

    Examples
    --------
    >>> family = marginal_family(FiniteDistribution((2.0 / 3.0, 1.0 / 3.0)), 2)
    >>> maxent_select(family).mass.round(6).tolist()
    [[0.333333, 0.166667], [0.333333, 0.166667]]
    """
    if c.y_marginal is None:
        raise UnsupportedFamilyError(c.label)
    row = c.y_marginal.mass / c.x_size
    return JointDistribution(np.tile(row, (c.x_size, 1)))
