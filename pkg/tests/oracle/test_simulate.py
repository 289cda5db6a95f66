import math

import numpy as np
import pytest
from pytest import approx, raises

from credal_decide.cmd.builtins import BUILTINS, builtin_scenario
from credal_decide.core import ParamJoint
from credal_decide.decision import LossSpec
from credal_decide.errors import InvalidScenarioError
from credal_decide.oracle import TrueModel, simulate, strategy_risk

LOSS = LossSpec.asymmetric(1.4)


def model():
    return TrueModel.independent(0.5, [0.5, 0.5], n=4)


def test_reproducible():
    first = simulate(model(), "bayes", LOSS, runs=5000, seed=2024)
    second = simulate(model(), "bayes", LOSS, runs=5000, seed=2024)
    assert first == second
    assert first.runs == 5000
    assert first.seed == 2024


def test_independent_of_threads():
    one = simulate(model(), "bayes", LOSS, runs=10000, seed=3, workers=1)
    many = simulate(model(), "bayes", LOSS, runs=10000, seed=3, workers=4)
    assert one == many


def test_seeds_differ():
    first = simulate(model(), "bayes", LOSS, runs=5000, seed=1)
    second = simulate(model(), "bayes", LOSS, runs=5000, seed=2)
    assert first.mean != second.mean


def test_single_run():
    result = simulate(model(), "bayes", LOSS, runs=1, seed=0)
    assert result.mean in (0.0, 1.0, 1.4)
    assert math.isnan(result.standard_error)


def test_largest_seed():
    result = simulate(model(), "ignore", LOSS, runs=10, seed=2**64 - 1)
    assert result.mean in np.arange(11) / 10


@pytest.mark.parametrize("runs", [0, -3])
def test_bad_runs(runs):
    with raises(InvalidScenarioError):
        simulate(model(), "ignore", LOSS, runs=runs, seed=0)


@pytest.mark.parametrize("seed", [-1, 2**64])
def test_bad_seed(seed):
    with raises(InvalidScenarioError):
        simulate(model(), "ignore", LOSS, runs=10, seed=seed)


CASES = [
    (model(), "ignore", LOSS),
    (model(), "bayes:uniform", LOSS),
    (TrueModel.perfectly_correlated(0.5, 4), "bayes:jeffreys", LOSS),
    (
        TrueModel.from_param(ParamJoint(0.4, alpha=[0.3, 0.7], beta=[0.6, 0.4]), 6),  # type: ignore[arg-type]
        "local_minimax",
        LossSpec.observation_mismatch(),
    ),
    (
        TrueModel.from_param(ParamJoint(0.4, alpha=[0.3, 0.7], beta=[0.6, 0.4]), 6),  # type: ignore[arg-type]
        "bayes:hierarchical",
        LossSpec.observation_scaled(),
    ),
]


@pytest.mark.parametrize("seed", [11, 12])
@pytest.mark.parametrize("true_model,strategy,loss", CASES)
def test_agrees_with_exact_risk(true_model, strategy, loss, seed):
    exact = strategy_risk(true_model, strategy, loss)
    result = simulate(true_model, strategy, loss, runs=20000, seed=seed)
    if result.standard_error == 0.0:
        assert result.mean == exact
    else:
        assert abs(result.mean - exact) < 4.0 * result.standard_error


@pytest.mark.slow
@pytest.mark.parametrize("true_model,strategy,loss", CASES)
def test_agrees_with_exact_risk_many_runs(true_model, strategy, loss):
    exact = strategy_risk(true_model, strategy, loss)
    result = simulate(true_model, strategy, loss, runs=10**5, seed=99)
    if result.standard_error == 0.0:
        assert result.mean == exact
    else:
        assert abs(result.mean - exact) < 4.0 * result.standard_error


def builtin_cases():
    """Every model and strategy pair that a builtin scenario simulates."""
    for name in sorted(BUILTINS):
        scenario = builtin_scenario(name)
        if not scenario.strategies:
            continue
        loss = scenario.loss_spec()
        models = scenario.true_models(scenario.marginal_p(), scenario.single("n"))
        for true_model in models:
            for strategy in scenario.strategy_ids():
                yield pytest.param(
                    true_model,
                    strategy,
                    loss,
                    scenario.seed,
                    id=f"{name}-{true_model.label}-{strategy.label}",
                )


@pytest.mark.slow
@pytest.mark.parametrize("true_model,strategy,loss,seed", list(builtin_cases()))
def test_builtins_agree_with_exact_risk(true_model, strategy, loss, seed):
    exact = strategy_risk(true_model, strategy, loss)
    result = simulate(true_model, strategy, loss, runs=10**5, seed=seed)
    if result.standard_error == 0.0:
        assert result.mean == approx(exact, abs=1e-12)
    else:
        assert abs(result.mean - exact) < 4.0 * result.standard_error


def test_builtin_cases_cover_regret():
    ids = [case.id for case in builtin_cases()]
    for strategy in ("global_minimax", "local_minimax", "bayes(uniform)"):
        assert f"regret-correlated-{strategy}" in ids
    assert "beta-35-independent-bayes(laplace)" in ids
