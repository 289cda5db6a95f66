"""Strategies for predicting Y from X, and their exact expected loss.

Examples
--------
Ignoring X under the asymmetric loss at p = 1/2 costs 1/2. The Bayesian
with the uniform prior does worse at n = 4 when X is in fact independent of Y,
and the add-one cell odds of ``laplace`` do worse still.

>>> from credal_decide.decision import LossSpec
>>> from credal_decide.oracle import TrueModel
>>> model = TrueModel.independent(0.5, [0.5, 0.5], n=4)
>>> loss = LossSpec.asymmetric(1.4)
>>> round(strategy_risk(model, "ignore", loss), 12)
0.5
>>> round(strategy_risk(model, "bayes:uniform", loss), 12)
0.55625
>>> round(strategy_risk(model, "bayes:laplace", loss), 12)
0.57265625
"""
import math
from dataclasses import dataclass

import numpy as np

from ..bayes import (
    CellwisePrior,
    DirichletProductPrior,
    HierarchicalPrior,
    batch_hierarchical,
    batch_odds,
    decision_scores,
    parse_prior,
)
from ..core import marginal_family, maxent_select
from ..decision import (
    DecisionRule,
    LossSpec,
    global_minimax,
    local_minimax,
    optimal_action,
)
from ..errors import DimensionError, InvalidScenarioError, UnsupportedLossError
from .tables import expectation

STRATEGY_KINDS = ("ignore", "bayes", "local_minimax", "global_minimax", "maxent")


@dataclass(frozen=True, eq=False)
class StrategyId:
    """A named way of turning training data and X into an action.

    Parameters
    ----------
    kind : str
        One of ``STRATEGY_KINDS``.
    prior : str, dict or prior, optional
        Prior of a ``bayes`` strategy, in any form :func:`parse_prior`
        accepts, or an already built prior.

    Examples
    --------
    >>> StrategyId.parse("bayes:ess:2").label
    'bayes(ess:2)'
    >>> StrategyId.parse("bayes").prior
    'uniform'
    >>> StrategyId.parse({"bayes": {"a": [1, 2], "b": [2, 1]}}).label
    'bayes(custom)'
    """

    kind: str
    prior: object = None

    def __post_init__(self):
        if self.kind not in STRATEGY_KINDS:
            raise InvalidScenarioError(f"unknown strategy {self.kind!r}")
        if self.kind == "bayes" and self.prior is None:
            raise InvalidScenarioError("a bayes strategy needs a prior")
        if self.kind != "bayes" and self.prior is not None:
            raise InvalidScenarioError(f"strategy {self.kind!r} takes no prior")

    @classmethod
    def parse(cls, spec):
        """Strategy from ``"kind"``, ``"bayes:<prior>"`` or ``{"bayes": prior}``."""
        if isinstance(spec, StrategyId):
            return spec
        if isinstance(spec, dict):
            if len(spec) != 1:
                raise InvalidScenarioError(f"bad strategy {spec!r}")
            ((kind, prior),) = spec.items()
            return cls(kind, prior)
        kind, _, prior = str(spec).partition(":")
        if kind == "bayes" and not prior:
            prior = "uniform"
        return cls(kind, prior or None)

    @property
    def label(self):
        if self.kind != "bayes":
            return self.kind
        if isinstance(self.prior, dict):
            return "bayes(custom)"
        name = getattr(self.prior, "name", self.prior)
        return f"bayes({name})"

    def __repr__(self):
        return f"StrategyId({self.label!r})"


def strategy_prior(model, prior):
    """Prior for *model*, built from a name, a mapping or a prior object."""
    if isinstance(prior, (CellwisePrior, DirichletProductPrior, HierarchicalPrior)):
        if prior.x_size != model.x_size:
            raise DimensionError(
                f"prior has {prior.x_size} observations, model has {model.x_size}"
            )
        return prior
    return parse_prior(prior, model.x_size, model.p)


def strategy_rule(model, strategy, loss):
    """The rule a strategy plays when it does not look at the training data.

    Returns
    -------
    DecisionRule or None
        ``None`` for ``bayes`` strategies, whose action depends on the data.
    """
    strategy = StrategyId.parse(strategy)
    x_size = model.x_size
    if strategy.kind == "bayes":
        return None
    if strategy.kind == "ignore":
        if loss.x_dependent:
            raise UnsupportedLossError(
                "ignoring X needs a loss that does not depend on the observation"
            )
        action, _ = optimal_action(model.p_y, loss)
        return DecisionRule.constant(action, x_size, loss.action_count)

    family = marginal_family(model.p_y, x_size)
    if strategy.kind == "maxent":
        joint = maxent_select(family)
        actions = [
            optimal_action(joint.conditional_y(x), loss.slice(x))[0]
            for x in range(x_size)
        ]
        return DecisionRule.deterministic(actions, loss.action_count)
    if strategy.kind == "local_minimax":
        return DecisionRule(
            [local_minimax(family, x, loss).action.mass for x in range(x_size)]
        )
    return global_minimax(family, loss).rule


def _argmin_actions(q, odds, table):
    finite = np.isfinite(odds)
    with np.errstate(invalid="ignore"):
        scores = np.where(
            finite[:, np.newaxis],
            decision_scores(np.where(finite, odds, 0.0), table),
            (1.0 - q)[:, np.newaxis] * table[0] + q[:, np.newaxis] * table[1],
        )
    return np.argmin(scores, axis=1)


def bayes_actions(prior, tables, loss):
    """Bayes action for a stack of count tables and every next observation.

    Agrees element by element with :func:`~credal_decide.bayes.bayes_decision`.

    Parameters
    ----------
    prior : DirichletProductPrior, CellwisePrior or HierarchicalPrior
        The prior.
    tables : ndarray of int
        Count tables indexed ``[table, x, y]``.
    loss : LossSpec
        Binary-outcome loss.

    Returns
    -------
    ndarray of int
        Actions indexed ``[table, k]``.
    """
    if loss.y_size != 2:
        raise DimensionError("Bayes decisions need a binary outcome")
    tables = np.asarray(tables)
    if isinstance(prior, HierarchicalPrior):
        q, _ = batch_hierarchical(tables, prior.p)
        with np.errstate(divide="ignore"):
            odds = q / (1.0 - q)
    else:
        odds = batch_odds(prior, tables)
        q = odds / (1.0 + odds)

    actions = np.empty(tables.shape[:2], dtype=np.int64)
    for k in range(tables.shape[1]):
        actions[:, k] = _argmin_actions(q[:, k], odds[:, k], loss.at(k))
    return actions


def observation_losses(model, loss):
    """Expected loss of each action jointly with the next observation.

    Entry ``[k, a]`` is E[L(Y, a, k); X = k] under the true joint, so the
    risk of a rule is the sum of these entries weighted by the rule.
    """
    if loss.y_size != 2:
        raise DimensionError("the oracle needs a binary-outcome loss")
    table = loss.expanded(model.x_size)
    weights = model.joint.mass.T[:, np.newaxis, :]
    terms = np.zeros(np.broadcast_shapes(weights.shape, table.shape))
    np.multiply(weights, table, out=terms, where=weights > 0.0)
    return terms.sum(axis=0).T


def rule_risk(rule, costs):
    terms = np.zeros(costs.shape)
    np.multiply(rule.matrix, costs, out=terms, where=rule.matrix > 0.0)
    return math.fsum(terms.ravel())


def strategy_risk(model, strategy, loss):
    """Exact expected loss of a strategy on the next pair.

    The expectation runs over training samples of size ``model.n`` and over
    the next pair, all drawn from the true joint.

    Parameters
    ----------
    model : TrueModel
        The true distribution and horizon.
    strategy : StrategyId or str
        The strategy.
    loss : LossSpec
        Loss of the prediction.

    Returns
    -------
    float
    """
    strategy = StrategyId.parse(strategy)
    costs = observation_losses(model, loss)
    rule = strategy_rule(model, strategy, loss)
    if rule is not None:
        return rule_risk(rule, costs)

    prior = strategy_prior(model, strategy.prior)
    observations = np.arange(model.x_size)

    def evaluate(tables):
        actions = bayes_actions(prior, tables, loss)
        return costs[observations, actions].sum(axis=1)

    return float(expectation(model, evaluate))


def _check_alpha(alpha):
    alpha = float(alpha)
    if not (np.isfinite(alpha) and alpha > 0.0):
        raise UnsupportedLossError(
            f"false-positive cost must be positive, got {alpha!r}"
        )
    return alpha


def trigger_probability_by_observation(model, prior, alpha):
    """Probability that the Bayesian predicts 1, for each next observation k.

    The prediction is 1 exactly when the posterior odds at k exceed *alpha*.

    Returns
    -------
    ndarray
        Pr(predict 1 | X = k), indexed by k.
    """
    alpha = _check_alpha(alpha)
    prior = strategy_prior(model, prior)
    loss = LossSpec.asymmetric(alpha)
    return expectation(
        model, lambda tables: bayes_actions(prior, tables, loss).astype(float)
    )


def trigger_probability(model, prior, alpha):
    """Probability that the Bayesian predicts 1 on the next pair.

    Averages the per-observation probabilities over the true distribution
    of the next X.

    Examples
    --------
    >>> from credal_decide.oracle import TrueModel
    >>> model = TrueModel.independent(0.5, [0.5, 0.5], n=0)
    >>> trigger_probability(model, "uniform", 1.4)
    0.0
    """
    by_observation = trigger_probability_by_observation(model, prior, alpha)
    return math.fsum(model.x_marginal().mass * by_observation)
