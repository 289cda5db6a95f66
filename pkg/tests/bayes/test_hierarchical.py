import numpy as np
import pytest
from pytest import approx

from credal_decide.bayes import (
    DirichletProductPrior,
    HierarchicalPrior,
    SampleCounts,
    batch_hierarchical,
    counts_from_sample,
    hierarchical_predictive,
    hierarchical_predictive_x,
    hierarchical_weights,
    predictive,
)
from credal_decide.testing.instances import random_counts


@pytest.mark.parametrize("p", [0.1, 0.5, 0.8])
def test_zero_data(p):
    pred = hierarchical_predictive(SampleCounts.zeros(2), p)
    assert pred.q == approx([p, p])
    assert pred.prior == "hierarchical"
    assert hierarchical_weights(SampleCounts.zeros(2), p) == approx([0.5, 0.5])


def test_perfect_correlation_favours_dependence():
    counts = counts_from_sample([(0, 0)] * 4 + [(1, 1)] * 4, 2)
    weights = hierarchical_weights(counts, 0.5)
    assert weights[1] == approx(25.2 / 26.2)
    assert weights[0] == approx(weights[1])
    assert (weights > 0.9).all()

    uniform = predictive(DirichletProductPrior.uniform(2, 0.5), counts)
    hierarchical = hierarchical_predictive(counts, 0.5)
    assert 0.5 < hierarchical[1] < uniform[1]


def test_balanced_table_predicts_marginal():
    counts = SampleCounts([[2, 2], [2, 2]])
    uniform = predictive(DirichletProductPrior.uniform(2, 0.5), counts)
    hierarchical = hierarchical_predictive(counts, 0.5)
    assert uniform.q == approx([0.5, 0.5])
    assert hierarchical.q == approx([0.5, 0.5])


def test_shrinks_toward_marginal():
    counts = SampleCounts([[2, 3], [2, 1]])
    p = 0.5
    uniform = predictive(DirichletProductPrior.uniform(2, p), counts)
    hierarchical = hierarchical_predictive(counts, p)
    for k in range(2):
        assert abs(uniform[k] - p) > 0.0
        assert abs(hierarchical[k] - p) < abs(uniform[k] - p)


def test_shrinks_on_random_tables():
    rng = np.random.default_rng(17)
    for _ in range(50):
        x_size = int(rng.integers(1, 5))
        p = float(rng.uniform(0.1, 0.9))
        counts = SampleCounts(random_counts(rng, x_size, int(rng.integers(0, 40))))
        uniform = predictive(DirichletProductPrior.uniform(x_size, p), counts)
        hierarchical = hierarchical_predictive(counts, p)
        distance = np.abs(hierarchical.q - p)
        assert (distance <= np.abs(uniform.q - p) + 1e-15).all()


def test_dispatch_through_predictive():
    counts = SampleCounts([[3, 1], [0, 4]])
    via_prior = predictive(HierarchicalPrior(2, 0.4), counts)
    assert via_prior.q.tolist() == hierarchical_predictive(counts, 0.4).q.tolist()


def test_predictive_x_is_a_distribution():
    counts = SampleCounts([[3, 1], [0, 4], [1, 1]])
    mass = hierarchical_predictive_x(counts, 0.3).mass
    assert mass.sum() == approx(1.0)
    assert (mass > 0.0).all()


def test_batch_matches_scalar():
    rng = np.random.default_rng(23)
    tables = np.stack([random_counts(rng, 3, 10) for _ in range(25)])
    q, weights = batch_hierarchical(tables, 0.35)
    assert q.shape == weights.shape == (25, 3)
    for table, row, weight in zip(tables, q, weights):
        counts = SampleCounts(table)
        assert row == approx(hierarchical_predictive(counts, 0.35).q)
        assert weight == approx(hierarchical_weights(counts, 0.35))
