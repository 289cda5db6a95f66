"""Bayesian model average of an independence model and the full product model.

Both models get prior probability 1/2. Model I says X is independent of Y,
with a uniform Dirichlet prior on the X-multinomial; model D is the uniform
Dirichlet-product prior. Each model is weighted by the probability it gives to
the training data together with the next observation.
"""
import numpy as np
from scipy.special import expit, xlogy

from ..core import FiniteDistribution
from .predictive import (
    PredictiveDistribution,
    batch_odds,
    log_dirichlet_normalizer,
    log_marginal_likelihood,
    predictive_x,
)
from .priors import DirichletProductPrior


def independence_log_likelihood(counts, p):
    """Log probability of the data under the independence model."""
    n0, n1 = counts.n_y
    ones = np.ones(counts.x_size)
    return float(
        xlogy(n1, p)
        + xlogy(n0, 1.0 - p)
        + log_dirichlet_normalizer(ones + counts.n_x)
        - log_dirichlet_normalizer(ones)
    )


def independence_predictive_x(counts):
    """Pr(next X = k | data) under the independence model."""
    return (counts.n_x + 1.0) / (counts.n + counts.x_size)


def _batch_log_weights(tables):
    """Log evidence ratio of model D over model I, indexed ``[table, k]``.

    The known marginal of Y contributes the same factor to both models and
    cancels.
    """
    tables = np.asarray(tables, dtype=float)
    x_size = tables.shape[1]
    ones = np.ones(x_size)
    n_y = tables.sum(axis=1)
    n_x = tables.sum(axis=2)
    n = n_x.sum(axis=1, keepdims=True)

    log_dependent = (
        log_dirichlet_normalizer(ones + tables[:, :, 1])
        + log_dirichlet_normalizer(ones + tables[:, :, 0])
        - 2.0 * log_dirichlet_normalizer(ones)
    )
    log_independent = log_dirichlet_normalizer(ones + n_x) - log_dirichlet_normalizer(
        ones
    )
    return log_dependent - log_independent, n_y, n_x, n


def batch_hierarchical(tables, p):
    """Predictive Pr(Y = 1 | X = k, data) for a stack of count tables.

    Parameters
    ----------
    tables : array_like of int
        Count tables indexed ``[table, x, y]``.
    p : float
        Known Pr(Y = 1).

    Returns
    -------
    q : ndarray
        Predictive probabilities indexed ``[table, k]``.
    weights : ndarray
        Posterior weight of the dependent model, indexed ``[table, k]``.
    """
    tables = np.asarray(tables, dtype=float)
    x_size = tables.shape[1]
    log_ratio, n_y, n_x, n = _batch_log_weights(tables)

    next_dependent = p * (tables[:, :, 1] + 1.0) / (n_y[:, 1:2] + x_size) + (
        1.0 - p
    ) * (tables[:, :, 0] + 1.0) / (n_y[:, 0:1] + x_size)
    next_independent = (n_x + 1.0) / (n + x_size)
    weights = expit(
        log_ratio[:, np.newaxis] + np.log(next_dependent) - np.log(next_independent)
    )

    odds = batch_odds(DirichletProductPrior.uniform(x_size, p), tables)
    q = (1.0 - weights) * p + weights * (odds / (1.0 + odds))
    return np.clip(q, 0.0, 1.0), weights


def hierarchical_weights(counts, p):
    """Posterior weight of the dependent model for each next observation k.

    Examples
    --------
    >>> from credal_decide.bayes import SampleCounts
    >>> hierarchical_weights(SampleCounts.zeros(2), 0.5).tolist()
    [0.5, 0.5]
    """
    return batch_hierarchical(counts.table[np.newaxis], p)[1][0]


def hierarchical_predictive(counts, p):
    """Predictive distribution of the next Y under the hierarchical prior.

    The independence model predicts the marginal *p* at every k; the
    result moves from *p* toward the dependent model's prediction as the
    data favour dependence.

    Parameters
    ----------
    counts : SampleCounts
        Training data.
    p : float
        Known Pr(Y = 1).

    Returns
    -------
    PredictiveDistribution
    """
    q = batch_hierarchical(counts.table[np.newaxis], p)[0][0]
    with np.errstate(divide="ignore"):
        odds = q / (1.0 - q)
    return PredictiveDistribution(q=q, odds=odds, prior="hierarchical")


def hierarchical_predictive_x(counts, p):
    """Pr(next X = k | data) under the hierarchical prior."""
    dependent = DirichletProductPrior.uniform(counts.x_size, p)
    log_dependent = log_marginal_likelihood(dependent, counts)
    log_independent = independence_log_likelihood(counts, p)
    weight = expit(log_dependent - log_independent)
    mass = (1.0 - weight) * independence_predictive_x(counts) + weight * predictive_x(
        dependent, counts
    ).mass
    return FiniteDistribution(mass / mass.sum())
