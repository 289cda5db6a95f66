"""Randomized decision rules mapping observations to action distributions."""
import itertools

import numpy as np

from ..core import FiniteDistribution
from ..errors import DimensionError

MAX_RULES = 10**6


def rule_name(actions):
    """Name of the deterministic rule taking ``actions[x]`` at each observation.

    >>> rule_name((1, 0))
    'd10'
    >>> rule_name((3, 12))
    'd3_12'
    """
    actions = [int(a) for a in actions]
    if all(a < 10 for a in actions):
        return "d" + "".join(str(a) for a in actions)
    return "d" + "_".join(str(a) for a in actions)


def deterministic_rules(x_size, action_count):
    """Every map from observations to actions, in lexicographic order.

    Returns
    -------
    ndarray of int
        One row per rule, indexed ``[rule, x]``.

    Examples
    --------
    >>> deterministic_rules(2, 2).tolist()
    [[0, 0], [0, 1], [1, 0], [1, 1]]
    """
    return np.array(
        list(itertools.product(range(action_count), repeat=x_size)), dtype=int
    ).reshape(-1, x_size)


class DecisionRule:
    """A stochastic map from observations to actions.

    Parameters
    ----------
    rows : array_like
        Action probabilities indexed ``[x, a]``. Every row must be a
        probability vector.

    Examples
    --------
    >>> rule = DecisionRule.deterministic((0, 1), action_count=2)
    >>> rule.name
    'd01'
    >>> rule[1].mass.tolist()
    [0.0, 1.0]
    >>> DecisionRule.constant(0, x_size=2, action_count=2).is_constant()
    True
    """

    def __init__(self, rows):
        rows = np.array(rows, dtype=float)
        if rows.ndim != 2:
            raise DimensionError(f"rule must be indexed [x, a], got shape {rows.shape}")
        self._rows = tuple(FiniteDistribution(row) for row in rows)
        self._matrix = np.stack([row.mass for row in self._rows])
        self._matrix.setflags(write=False)

    @classmethod
    def constant(cls, action, x_size, action_count):
        return cls.deterministic([action] * x_size, action_count)

    @classmethod
    def deterministic(cls, actions, action_count):
        actions = np.asarray(actions, dtype=int)
        if ((actions < 0) | (actions >= action_count)).any():
            raise DimensionError(f"actions must lie in [0, {action_count})")
        rows = np.zeros((actions.size, action_count))
        rows[np.arange(actions.size), actions] = 1.0
        return cls(rows)

    @classmethod
    def randomized(cls, distribution, x_size):
        """Rule playing the same action distribution at every observation."""
        if not isinstance(distribution, FiniteDistribution):
            distribution = FiniteDistribution(distribution)
        return cls(np.tile(distribution.mass, (x_size, 1)))

    @classmethod
    def from_mixture(cls, weights, rules, action_count):
        """Behavioral rule equivalent to a mixture of deterministic rules.

        Parameters
        ----------
        weights : array_like
            Probability of each rule.
        rules : array_like of int
            Deterministic rules indexed ``[rule, x]``.
        action_count : int
            Number of actions.
        """
        weights = np.asarray(weights, dtype=float)
        rules = np.asarray(rules, dtype=int)
        x_size = rules.shape[1]
        rows = np.zeros((x_size, action_count))
        for x in range(x_size):
            np.add.at(rows[x], rules[:, x], weights)
        return cls(rows / rows.sum(axis=1, keepdims=True))

    @property
    def matrix(self):
        """Action probabilities indexed ``[x, a]``."""
        return self._matrix

    @property
    def rows(self):
        return self._rows

    @property
    def x_size(self):
        return self._matrix.shape[0]

    @property
    def action_count(self):
        return self._matrix.shape[1]

    def __getitem__(self, x):
        return self._rows[x]

    def __len__(self):
        return len(self._rows)

    def __repr__(self):
        return f"DecisionRule({self._matrix.tolist()!r})"

    @property
    def is_deterministic(self):
        return bool(np.isin(self._matrix, (0.0, 1.0)).all())

    @property
    def actions(self):
        """Action taken at each observation, for a deterministic rule."""
        if not self.is_deterministic:
            raise ValueError("rule is randomized")
        return tuple(int(a) for a in self._matrix.argmax(axis=1))

    @property
    def name(self):
        """``dij...`` name of a deterministic rule, ``None`` if randomized."""
        if not self.is_deterministic:
            return None
        return rule_name(self.actions)

    def distances(self, other):
        """Total-variation distance to *other*, one value per observation."""
        if other.x_size != self.x_size or other.action_count != self.action_count:
            raise DimensionError("rules have different shapes")
        return 0.5 * np.abs(self._matrix - other.matrix).sum(axis=1)

    def is_constant(self, tol=1e-6):
        """True if every observation gets the same action distribution."""
        first = self._matrix[0]
        return bool((0.5 * np.abs(self._matrix - first).sum(axis=1) <= tol).all())


def canonical_mixture(rule, tol=1e-12):
    """Decompose a behavioral rule into weighted deterministic rules.

    The decomposition is greedy: at each step every observation takes its
    most probable remaining action (lowest index on ties) and the resulting
    deterministic rule gets the smallest of those remaining masses.

    Parameters
    ----------
    rule : DecisionRule
        Rule to decompose.
    tol : float, optional
        Remaining mass below which decomposition stops.

    Returns
    -------
    list of (tuple of int, float)
        Deterministic rules and their weights.

    Examples
    --------
    >>> rule = DecisionRule([[0.25, 0.75], [0.75, 0.25]])
    >>> canonical_mixture(rule)
    [((1, 0), 0.75), ((0, 1), 0.25)]
    """
    remaining = np.array(rule.matrix)
    observations = np.arange(rule.x_size)
    mixture = []
    total = 1.0
    while total > tol:
        actions = remaining.argmax(axis=1)
        weight = float(remaining[observations, actions].min())
        if weight <= tol:
            break
        mixture.append((tuple(int(a) for a in actions), weight))
        remaining[observations, actions] -= weight
        total -= weight
    return mixture
