"""Labelled comparison tables over models and strategies."""
import math

import numpy as np
import xarray as xr

from ..decision import LossSpec
from ..errors import InvalidScenarioError
from .model import TrueModel
from .strategies import (
    StrategyId,
    strategy_risk,
    trigger_probability_by_observation,
)


def _unique_labels(labels):
    seen = {}
    unique = []
    for label in labels:
        count = seen.get(label, 0)
        seen[label] = count + 1
        unique.append(label if count == 0 else f"{label}#{count}")
    return unique


def regret_table(models, strategies, loss, baseline=None):
    """Risk and regret of every strategy under every model.

    Parameters
    ----------
    models : list of TrueModel
        Candidate true distributions.
    strategies : list of StrategyId or str
        Strategies to compare.
    loss : LossSpec
        Loss of a prediction.
    baseline : StrategyId or str, optional
        If given, also report each risk less the baseline's risk under the
        same model. The baseline must be one of *strategies*.

    Returns
    -------
    xarray.Dataset
        Variables ``risk``, ``regret`` (risk less the best risk of any listed
        strategy under the model), ``best_risk`` and ``worst_regret``, on
        dimensions ``model`` and ``strategy``.

    Examples
    --------
    >>> from credal_decide.oracle import TrueModel
    >>> models = [
    ...     TrueModel.independent(0.5, [0.5, 0.5], n=4),
    ...     TrueModel.perfectly_correlated(0.5, n=4),
    ... ]
    >>> table = regret_table(models, ["ignore", "bayes"], LossSpec.asymmetric(1.4))
    >>> table.risk.sel(model="correlated").round(9).values.tolist()
    [0.5, 0.0]
    """
    strategies = [StrategyId.parse(strategy) for strategy in strategies]
    if not models or not strategies:
        raise InvalidScenarioError("need at least one model and one strategy")

    risks = np.array(
        [
            [strategy_risk(model, strategy, loss) for strategy in strategies]
            for model in models
        ]
    )
    best = risks.min(axis=1)
    regret = risks - best[:, np.newaxis]

    labels = _unique_labels([strategy.label for strategy in strategies])
    table = xr.Dataset(
        {
            "risk": (("model", "strategy"), risks),
            "regret": (("model", "strategy"), regret),
            "best_risk": (("model",), best),
            "worst_regret": (("strategy",), regret.max(axis=0)),
        },
        coords={
            "model": _unique_labels([model.label for model in models]),
            "strategy": labels,
            "n": (("model",), [model.n for model in models]),
        },
        attrs={"loss": loss.name},
    )

    if baseline is not None:
        name = StrategyId.parse(baseline).label
        if name not in labels:
            raise InvalidScenarioError(
                f"baseline {name!r} is not among the strategies"
            )
        index = labels.index(name)
        table["regret_vs_baseline"] = (
            ("model", "strategy"),
            risks - risks[:, index : index + 1],
        )
        table.attrs["baseline"] = name
    return table


def trigger_sweep(model_factory, prior, ns, alphas):
    """Trigger probability and loss gap over horizons and false-positive costs.

    Parameters
    ----------
    model_factory : callable or TrueModel
        Maps a horizon *n* to a model; a model is used at each horizon.
    prior : str, dict or prior
        Prior of the Bayesian.
    ns : sequence of int
        Horizons.
    alphas : sequence of float
        Costs of a false positive.

    Returns
    -------
    xarray.Dataset
        On dimensions ``n`` and ``alpha``: ``beta`` (probability of
        predicting 1), ``risk_ignore`` and ``risk_bayes``, ``gap`` (Bayesian
        risk less the risk of ignoring X) and ``relative_gap`` (``gap`` over
        the risk of ignoring X). ``beta_by_x`` adds the dimension ``x`` and
        holds the probability of predicting 1 given each next observation.
    """
    if isinstance(model_factory, TrueModel):
        model_factory = model_factory.with_n
    ns = [int(n) for n in ns]
    alphas = [float(alpha) for alpha in alphas]
    strategy = StrategyId("bayes", prior)
    models = [model_factory(n) for n in ns]
    if not models:
        raise InvalidScenarioError("need at least one horizon")
    x_size = models[0].x_size

    shape = (len(ns), len(alphas))
    beta_by_x = np.empty(shape + (x_size,))
    beta, ignore, bayes = np.empty(shape), np.empty(shape), np.empty(shape)
    for i, model in enumerate(models):
        for j, alpha in enumerate(alphas):
            loss = LossSpec.asymmetric(alpha)
            beta_by_x[i, j] = trigger_probability_by_observation(model, prior, alpha)
            beta[i, j] = math.fsum(model.x_marginal().mass * beta_by_x[i, j])
            ignore[i, j] = strategy_risk(model, "ignore", loss)
            bayes[i, j] = strategy_risk(model, strategy, loss)

    gap = bayes - ignore
    with np.errstate(divide="ignore", invalid="ignore"):
        relative = np.where(ignore > 0.0, gap / ignore, np.nan)

    dims = ("n", "alpha")
    return xr.Dataset(
        {
            "beta": (dims, beta),
            "beta_by_x": (dims + ("x",), beta_by_x),
            "risk_ignore": (dims, ignore),
            "risk_bayes": (dims, bayes),
            "gap": (dims, gap),
            "relative_gap": (dims, relative),
        },
        coords={"n": ns, "alpha": alphas, "x": np.arange(x_size)},
        attrs={"prior": strategy.label},
    )
