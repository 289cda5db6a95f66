"""Posterior odds and predictive distributions under Dirichlet-product priors.

Examples
--------
One observation of (1, 1) under the uniform prior raises the odds of Y = 1
at X = 1 by a factor of 4/3.

>>> from credal_decide.bayes import counts_from_sample
>>> prior = DirichletProductPrior.uniform(2, p=0.5)
>>> counts = counts_from_sample([(1, 1)], x_size=2)
>>> posterior_odds(prior, counts, 1)
1.3333333333333333
>>> predictive(prior, counts).q.round(6).tolist()
[0.4, 0.571429]
"""
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln, xlogy

from ..core import FiniteDistribution
from ..errors import DimensionError
from .priors import CellwisePrior, DirichletProductPrior, HierarchicalPrior


@dataclass(frozen=True, eq=False)
class PredictiveDistribution:
    """Predictive probability of Y = 1 for each next observation k.

    Attributes
    ----------
    q : ndarray
        Pr(Y = 1 | X = k, data) for each k.
    odds : ndarray
        The same probabilities as odds, ``q / (1 - q)``.
    prior : str
        Name of the prior.
    """

    q: np.ndarray
    odds: np.ndarray
    prior: str

    def __post_init__(self):
        q = np.array(self.q, dtype=float)
        if q.ndim != 1 or ((q < 0.0) | (q > 1.0)).any():
            raise DimensionError("predictive probabilities must be a vector in [0, 1]")
        odds = np.array(self.odds, dtype=float)
        q.setflags(write=False)
        odds.setflags(write=False)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "odds", odds)

    @property
    def x_size(self):
        return self.q.size

    def __getitem__(self, k):
        return float(self.q[k])

    def at(self, k):
        """Predictive distribution of Y given X = *k*."""
        return FiniteDistribution.binary(self.q[k])


def _odds(p, n_k1, n_k0, a_k, b_k, n0, n1, sum_a, sum_b):
    return (p / (1.0 - p)) * ((n_k1 + a_k) / (n_k0 + b_k)) * ((n0 + sum_b) / (n1 + sum_a))


def _check_counts(prior, counts):
    if prior.x_size != counts.x_size:
        raise DimensionError(
            f"prior has {prior.x_size} observations, counts have {counts.x_size}"
        )


def batch_odds(prior, tables):
    """Posterior odds for a stack of count tables.

    Parameters
    ----------
    prior : DirichletProductPrior or CellwisePrior
        The prior.
    tables : array_like of int
        Count tables indexed ``[table, x, y]``.

    Returns
    -------
    ndarray
        Odds indexed ``[table, k]``, equal element by element to
        :func:`posterior_odds`.
    """
    tables = np.asarray(tables, dtype=float)
    if isinstance(prior, CellwisePrior):
        prior_odds = prior.p / (1.0 - prior.p)
        return prior_odds * (tables[:, :, 1] + 1.0) / (tables[:, :, 0] + 1.0)
    n_y = tables.sum(axis=1)
    return _odds(
        prior.p,
        tables[:, :, 1],
        tables[:, :, 0],
        prior.a,
        prior.b,
        n_y[:, 0:1],
        n_y[:, 1:2],
        prior.sum_a,
        prior.sum_b,
    )


def posterior_odds(prior, counts, k):
    """Posterior odds of Y = 1 against Y = 0 at the next observation X = *k*.

    The odds are the prior odds times the ratio of smoothed frequencies of
    *k* within each class, times the ratio of smoothed class sizes.

    Examples
    --------
    >>> from credal_decide.bayes import counts_from_sample
    >>> prior = DirichletProductPrior.jeffreys(2, p=0.5)
    >>> posterior_odds(prior, counts_from_sample([(1, 1)], 2), 1)
    1.5
    """
    _check_counts(prior, counts)
    if isinstance(prior, CellwisePrior):
        return float(batch_odds(prior, counts.table[np.newaxis])[0, k])
    n0, n1 = counts.n_y
    return float(
        _odds(
            prior.p,
            float(counts.table[k, 1]),
            float(counts.table[k, 0]),
            prior.a[k],
            prior.b[k],
            float(n0),
            float(n1),
            prior.sum_a,
            prior.sum_b,
        )
    )


def posterior_odds_uniform(counts, k, p):
    """Posterior odds under the uniform prior, all parameters equal to one."""
    n0, n1 = counts.n_y
    x_size = float(counts.x_size)
    return float(
        _odds(
            float(p),
            float(counts.table[k, 1]),
            float(counts.table[k, 0]),
            1.0,
            1.0,
            float(n0),
            float(n1),
            x_size,
            x_size,
        )
    )


def predictive(prior, counts):
    """Predictive distribution of the next Y for every next observation.

    Parameters
    ----------
    prior : DirichletProductPrior, CellwisePrior or HierarchicalPrior
        The prior.
    counts : SampleCounts
        Training data.

    Returns
    -------
    PredictiveDistribution
    """
    if isinstance(prior, HierarchicalPrior):
        from .hierarchical import hierarchical_predictive

        return hierarchical_predictive(counts, prior.p)

    _check_counts(prior, counts)
    odds = batch_odds(prior, counts.table[np.newaxis])[0]
    return PredictiveDistribution(q=odds / (1.0 + odds), odds=odds, prior=prior.name)


def predictive_x(prior, counts):
    """Posterior predictive distribution of the next observation X.

    Examples
    --------
    >>> from credal_decide.bayes import SampleCounts
    >>> prior = DirichletProductPrior.uniform(2, p=0.5)
    >>> predictive_x(prior, SampleCounts.zeros(2)).mass.tolist()
    [0.5, 0.5]
    """
    if isinstance(prior, HierarchicalPrior):
        from .hierarchical import hierarchical_predictive_x

        return hierarchical_predictive_x(counts, prior.p)

    _check_counts(prior, counts)
    if isinstance(prior, CellwisePrior):
        mass = counts.n_x + 1.0
        return FiniteDistribution(mass / mass.sum())

    n0, n1 = counts.n_y
    given_one = (counts.table[:, 1] + prior.a) / (n1 + prior.sum_a)
    given_zero = (counts.table[:, 0] + prior.b) / (n0 + prior.sum_b)
    mass = prior.p * given_one + (1.0 - prior.p) * given_zero
    return FiniteDistribution(mass / mass.sum())


def log_dirichlet_normalizer(alpha):
    """Log of the Dirichlet normalizing constant, summed over the last axis."""
    alpha = np.asarray(alpha, dtype=float)
    return gammaln(alpha).sum(axis=-1) - gammaln(alpha.sum(axis=-1))


def log_marginal_likelihood(prior, counts):
    """Log probability of the observed sequence with the parameters integrated out.

    Examples
    --------
    >>> import math
    >>> from credal_decide.bayes import counts_from_sample
    >>> prior = DirichletProductPrior.uniform(2, p=0.3)
    >>> counts = counts_from_sample([(1, 1)], 2)
    >>> math.isclose(log_marginal_likelihood(prior, counts), math.log(0.3 / 2))
    True
    """
    _check_counts(prior, counts)
    n0, n1 = counts.n_y
    return float(
        xlogy(n1, prior.p)
        + xlogy(n0, 1.0 - prior.p)
        + log_dirichlet_normalizer(prior.a + counts.table[:, 1])
        - log_dirichlet_normalizer(prior.a)
        + log_dirichlet_normalizer(prior.b + counts.table[:, 0])
        - log_dirichlet_normalizer(prior.b)
    )


def decision_scores(odds, table):
    """Expected loss of each action, scaled by ``1 / Pr(Y = 0)``.

    Parameters
    ----------
    odds : array_like
        Posterior odds of Y = 1.
    table : ndarray
        Binary-outcome loss indexed ``[y, a]``.

    Returns
    -------
    ndarray
        Scores with a trailing action axis. The smallest score marks the
        Bayes action; for the asymmetric loss action 1 wins exactly when the
        odds exceed the cost of a false positive.
    """
    odds = np.asarray(odds, dtype=float)[..., np.newaxis]
    return odds * table[1] + table[0]


def bayes_decision(pred, loss, k):
    """Action minimizing posterior expected loss at the next observation *k*.

    Ties go to the lowest action index.

    Examples
    --------
    >>> from credal_decide.decision import LossSpec
    >>> pred = PredictiveDistribution(q=[0.6, 0.6], odds=[1.5, 1.5], prior="custom")
    >>> bayes_decision(pred, LossSpec.asymmetric(1.4), 0)
    1
    >>> bayes_decision(pred, LossSpec.asymmetric(1.5), 0)
    0
    """
    if loss.y_size != 2:
        raise DimensionError("Bayes decisions need a binary outcome")
    table = loss.at(k)
    odds = pred.odds[k]
    if np.isfinite(odds):
        scores = decision_scores(odds, table)
    else:
        q = pred.q[k]
        scores = (1.0 - q) * table[0] + q * table[1]
    return int(np.argmin(scores))
