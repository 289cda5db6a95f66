"""Seeded Monte Carlo estimate of a strategy's risk.

Runs are drawn in fixed blocks. Block ``i`` uses a ``Philox`` generator keyed
by the ``i``-th child of ``SeedSequence(seed)``, so the estimate depends only
on the seed and the number of runs, never on the number of threads.
"""
import math
from concurrent.futures import ThreadPoolExecutor
from functools import partial
from typing import NamedTuple

import numpy as np

from ..errors import InvalidScenarioError
from ..utils import worker_count
from .strategies import StrategyId, bayes_actions, strategy_prior, strategy_rule

BLOCK_SIZE = 4096


class SimulationResult(NamedTuple):
    mean: float
    standard_error: float
    runs: int
    seed: int


def _block_losses(model, rule, prior, loss, seed, size):
    rng = np.random.Generator(np.random.Philox(seed))
    cells = model.cells
    table = loss.expanded(model.x_size)

    counts = rng.multinomial(model.n, cells, size=size).reshape(size, model.x_size, 2)
    k, y = np.divmod(rng.choice(cells.size, size=size, p=cells), 2)

    if rule is not None:
        u = rng.random(size)
        cumulative = np.cumsum(rule.matrix[k], axis=1)
        actions = np.minimum(
            (u[:, np.newaxis] >= cumulative).sum(axis=1), rule.action_count - 1
        )
    else:
        actions = bayes_actions(prior, counts, loss)[np.arange(size), k]
    return table[y, actions, k]


def simulate(model, strategy, loss, runs, seed, workers=None):
    """Monte Carlo estimate of :func:`strategy_risk`.

    Each run draws a training sample of size ``model.n`` and one more pair
    from the true joint, and records the loss of the strategy's action.

    Parameters
    ----------
    model : TrueModel
        True distribution and horizon.
    strategy : StrategyId or str
        The strategy.
    loss : LossSpec
        Loss of a prediction.
    runs : int
        Number of runs.
    seed : int
        Seed in ``[0, 2**64)``.
    workers : int, optional
        Number of threads; read from the environment by default.

    Returns
    -------
    SimulationResult
        Mean loss and its standard error, which is NaN for a single run.

    Examples
    --------
    >>> from credal_decide.decision import LossSpec
    >>> from credal_decide.oracle import TrueModel
    >>> model = TrueModel.independent(0.5, [0.5, 0.5], n=4)
    >>> result = simulate(model, "ignore", LossSpec.asymmetric(1.4), runs=1000, seed=7)
    >>> result == simulate(model, "ignore", LossSpec.asymmetric(1.4), runs=1000, seed=7)
    True
    >>> abs(result.mean - 0.5) < 4 * result.standard_error
    True
    """
    runs, seed = int(runs), int(seed)
    if runs < 1:
        raise InvalidScenarioError(f"runs must be positive, got {runs}")
    if not 0 <= seed < 2**64:
        raise InvalidScenarioError(f"seed must lie in [0, 2**64), got {seed}")

    strategy = StrategyId.parse(strategy)
    rule = strategy_rule(model, strategy, loss)
    prior = None if rule is not None else strategy_prior(model, strategy.prior)

    blocks = math.ceil(runs / BLOCK_SIZE)
    sizes = [BLOCK_SIZE] * (blocks - 1) + [runs - BLOCK_SIZE * (blocks - 1)]
    seeds = np.random.SeedSequence(seed).spawn(blocks)
    job = partial(_block_losses, model, rule, prior, loss)

    workers = worker_count() if workers is None else int(workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        losses = np.concatenate(list(pool.map(job, seeds, sizes)))

    mean = math.fsum(losses) / runs
    if runs == 1:
        error = math.nan
    else:
        error = float(np.std(losses, ddof=1) / math.sqrt(runs))
    return SimulationResult(mean=mean, standard_error=error, runs=runs, seed=seed)
