import itertools
import math

import numpy as np
import pytest
from pytest import approx, raises

from credal_decide.core import ParamJoint
from credal_decide.errors import SizeCapError
from credal_decide.oracle import (
    MAX_TABLES,
    TrueModel,
    enumerate_count_tables,
    expectation,
    table_count,
    total_weight,
)


def test_single_observation():
    model = TrueModel.independent(0.5, [0.5, 0.5], n=1)
    tables = list(enumerate_count_tables(model))
    assert len(tables) == 4
    assert [table.weight for table in tables] == approx([0.25] * 4)
    assert sorted(table.counts.table.ravel().tolist() for table in tables) == [
        [0, 0, 0, 1],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [1, 0, 0, 0],
    ]


def test_four_observations():
    model = TrueModel.independent(0.3, [0.4, 0.6], n=4)
    tables = list(enumerate_count_tables(model))
    assert len(tables) == 35 == table_count(4, 2)
    assert all(table.counts.n == 4 for table in tables)
    assert math.fsum(table.weight for table in tables) == approx(1.0, abs=1e-12)


def test_zero_observations():
    model = TrueModel.independent(0.5, [1.0 / 3.0] * 3, n=0)
    (table,) = enumerate_count_tables(model)
    assert table.counts.table.tolist() == [[0, 0]] * 3
    assert table.weight == 1.0


def test_tables_are_distinct():
    model = TrueModel.independent(0.5, [0.2, 0.3, 0.5], n=3)
    tables = [
        tuple(table.counts.table.ravel()) for table in enumerate_count_tables(model)
    ]
    assert len(tables) == len(set(tables)) == table_count(3, 3)


def test_multinomial_weight():
    param = ParamJoint(0.4, alpha=[0.3, 0.7], beta=[0.6, 0.4])
    model = TrueModel.from_param(param, n=5)
    cells = model.cells
    for table in enumerate_count_tables(model):
        counts = table.counts.table.ravel()
        expected = math.factorial(5) / math.prod(math.factorial(c) for c in counts)
        expected *= math.prod(p**c for p, c in zip(cells, counts))
        assert table.weight == approx(expected, rel=1e-12)


def test_zero_probability_cells():
    model = TrueModel.perfectly_correlated(0.5, n=6)
    for table in enumerate_count_tables(model):
        off_diagonal = table.counts.table[0, 1] + table.counts.table[1, 0]
        if off_diagonal:
            assert table.weight == 0.0
        else:
            assert table.weight > 0.0


@pytest.mark.parametrize(
    "model",
    [
        TrueModel.independent(0.5, [0.5, 0.5], n=40),
        TrueModel.independent(0.1, [0.1, 0.2, 0.3, 0.4], n=12),
        TrueModel.perfectly_correlated(0.3, n=100),
    ],
)
def test_weights_sum_to_one(model):
    assert total_weight(model) == approx(1.0, abs=1e-9)


def test_size_cap():
    model = TrueModel.independent(0.5, [0.25] * 4, n=200)
    assert table_count(200, 4) > MAX_TABLES
    with raises(SizeCapError):
        next(enumerate_count_tables(model))
    with raises(SizeCapError):
        total_weight(model)


def test_expectation_of_counts():
    model = TrueModel.independent(0.3, [0.4, 0.6], n=7)
    mean = expectation(model, lambda tables: tables.astype(float))
    assert mean.shape == (2, 2)
    assert mean == approx(7 * model.joint.mass)


def test_expectation_independent_of_threads():
    model = TrueModel.independent(0.3, [0.4, 0.6], n=90)

    def evaluate(tables):
        return np.sqrt(tables[:, :, 1] + 1.0)

    assert expectation(model, evaluate, workers=1).tolist() == expectation(
        model, evaluate, workers=3
    ).tolist()


def test_table_count():
    for n, x_size in itertools.product(range(6), range(1, 4)):
        assert table_count(n, x_size) == math.comb(n + 2 * x_size - 1, 2 * x_size - 1)
