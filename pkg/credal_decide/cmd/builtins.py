"""Scenarios shipped with the command line, one per worked example."""
from ..errors import InvalidScenarioError
from .scenario import Scenario

BUILTINS = {
    "dilation-demo": {
        "name": "dilation-demo",
        "x_size": 2,
        "p": [0.3],
        "event": [1],
        "loss": "zero-one",
    },
    "two-obs": {
        "name": "two-obs",
        "x_size": 2,
        "p": [0.5],
        "counts": [[0, 0], [0, 1]],
        "prior": ["uniform", "jeffreys", "hierarchical"],
        "loss": "asymmetric",
        "alpha": [1.4],
    },
    "beta-35": {
        "name": "beta-35",
        "x_size": 2,
        "p": [0.5],
        "n": [4],
        "alpha": [1.4],
        "loss": "asymmetric",
        "prior": ["laplace"],
        "true_model": {"kind": "independent", "px": [0.5, 0.5]},
        "strategies": ["ignore", "bayes:uniform", "bayes:laplace"],
        "runs": 100000,
        "seed": 35,
    },
    "obsloss": {
        "name": "obsloss",
        "x_size": 2,
        "p": [0.5],
        "loss": "observation-mismatch",
    },
    "obsloss-scaled": {
        "name": "obsloss-scaled",
        "x_size": 2,
        "p": [0.4],
        "loss": "observation-scaled",
    },
    "regret": {
        "name": "regret",
        "x_size": 2,
        "p": [0.5],
        "n": [4],
        "alpha": [1.4],
        "loss": "asymmetric",
        "models": [
            {"kind": "independent", "px": [0.5, 0.5]},
            {"kind": "correlated"},
        ],
        "strategies": [
            "ignore",
            "bayes:uniform",
            "bayes:laplace",
            "local_minimax",
            "global_minimax",
        ],
        "baseline": "ignore",
        "runs": 100000,
        "seed": 7,
    },
}


def builtin_scenario(name):
    """The builtin scenario called *name*.

    >>> builtin_scenario("obsloss").loss
    'observation-mismatch'
    """
    try:
        data = BUILTINS[name]
    except KeyError:
        raise InvalidScenarioError(f"no builtin scenario named {name!r}")
    return Scenario.from_dict(data)
