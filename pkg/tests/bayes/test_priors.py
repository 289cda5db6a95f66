import numpy as np
import pytest
from pytest import raises

from credal_decide.bayes import (
    CellwisePrior,
    DirichletProductPrior,
    HierarchicalPrior,
    parse_prior,
)
from credal_decide.errors import InvalidDistributionError, InvalidScenarioError


@pytest.mark.parametrize(
    "factory,value,name",
    [
        (DirichletProductPrior.uniform, 1.0, "uniform"),
        (DirichletProductPrior.jeffreys, 0.5, "jeffreys"),
    ],
)
def test_named_priors(factory, value, name):
    prior = factory(3, p=0.4)
    assert prior.a.tolist() == [value] * 3
    assert prior.b.tolist() == [value] * 3
    assert prior.p == 0.4
    assert prior.name == name
    assert prior.x_size == 3
    assert prior.sum_a == 3 * value


def test_ess_prior():
    prior = DirichletProductPrior.ess(4, p=0.5, s=8)
    assert prior.a.tolist() == [2.0] * 4
    assert prior.sum_b == 8.0
    assert prior.name == "ess:8"


@pytest.mark.parametrize(
    "a,b,p",
    [
        ((1.0, 0.0), (1.0, 1.0), 0.5),
        ((1.0, 1.0), (1.0, -2.0), 0.5),
        ((1.0, np.inf), (1.0, 1.0), 0.5),
        ((1.0, 1.0), (1.0, 1.0, 1.0), 0.5),
        ((1.0, 1.0), (1.0, 1.0), 1.0),
        ((1.0, 1.0), (1.0, 1.0), 0.0),
        ((), (), 0.5),
    ],
)
def test_invalid_priors(a, b, p):
    with raises(InvalidDistributionError):
        DirichletProductPrior(a, b, p)


def test_hierarchical_prior():
    prior = HierarchicalPrior(2, 0.3)
    assert prior.name == "hierarchical"
    with raises(InvalidDistributionError):
        HierarchicalPrior(2, 1.0)
    with raises(InvalidDistributionError):
        HierarchicalPrior(0, 0.5)


def test_cellwise_prior():
    prior = parse_prior("laplace", 3, 0.2)
    assert isinstance(prior, CellwisePrior)
    assert (prior.x_size, prior.p) == (3, 0.2)
    with raises(InvalidDistributionError):
        CellwisePrior(2, 0.0)
    with raises(InvalidDistributionError):
        CellwisePrior(0, 0.5)


@pytest.mark.parametrize(
    "spec,name",
    [
        ("uniform", "uniform"),
        ("jeffreys", "jeffreys"),
        ("ess:2", "ess:2"),
        ("ess:0.5", "ess:0.5"),
        ("hierarchical", "hierarchical"),
        ("laplace", "laplace"),
        ({"a": [1.0, 2.0], "b": [3.0, 4.0]}, "custom"),
    ],
)
def test_parse_prior(spec, name):
    prior = parse_prior(spec, 2, 0.5)
    assert prior.name == name
    assert prior.p == 0.5


@pytest.mark.parametrize(
    "spec",
    [
        "dirichlet",
        "ess:",
        "ess:abc",
        {"a": [1.0, 1.0]},
        {"a": [1, 1], "b": [1, 1], "c": 1},
    ],
)
def test_parse_prior_invalid(spec):
    with raises(InvalidScenarioError):
        parse_prior(spec, 2, 0.5)


def test_parse_prior_wrong_length():
    with raises(InvalidScenarioError):
        parse_prior({"a": [1.0, 1.0, 1.0], "b": [1.0, 1.0, 1.0]}, 2, 0.5)


def test_parse_prior_bad_ess():
    with raises(InvalidDistributionError):
        parse_prior("ess:0", 2, 0.5)
