import numpy as np
import pytest
from pytest import approx, raises

from credal_decide.core import (
    CredalSet,
    FiniteDistribution,
    JointDistribution,
    marginal_family,
)
from credal_decide.decision import (
    DecisionRule,
    LossSpec,
    deterministic_rules,
    expected_loss,
    global_minimax,
    global_minimax_regret,
    local_minimax,
    optimal_action,
    time_inconsistency_report,
    worst_case_loss,
)
from credal_decide.errors import (
    ConditioningUndefinedError,
    DimensionError,
    SizeCapError,
    UnsupportedLossError,
)
from credal_decide.testing.instances import random_instance, random_loss, random_marginal


@pytest.fixture
def dilation_family():
    return marginal_family(FiniteDistribution.binary(1.0 / 3.0), 2)


def test_expected_loss_randomized(dilation_family):
    rule = DecisionRule.randomized((0.5, 0.5), x_size=2)
    for vertex in dilation_family:
        assert expected_loss(vertex, rule, LossSpec.zero_one()) == approx(0.5)


def test_expected_loss_constant(dilation_family):
    rule = DecisionRule.constant(0, 2, 2)
    for vertex in dilation_family:
        assert expected_loss(vertex, rule, LossSpec.zero_one()) == approx(1.0 / 3.0)


def test_expected_loss_zero_table(dilation_family):
    rule = DecisionRule.deterministic((1, 0), 2)
    assert expected_loss(dilation_family[1], rule, LossSpec(np.zeros((2, 2)))) == 0.0


def test_expected_loss_infinite():
    joint = JointDistribution([[0.5, 0.0], [0.0, 0.5]])
    loss = LossSpec([[0.0, np.inf], [1.0, 0.0]])
    assert expected_loss(joint, DecisionRule.deterministic((0, 1), 2), loss) == 0.0
    assert expected_loss(joint, DecisionRule.constant(1, 2, 2), loss) == np.inf


def test_expected_loss_dimension_mismatch(dilation_family):
    with raises(DimensionError):
        expected_loss(dilation_family[0], DecisionRule.constant(0, 3, 2), LossSpec.zero_one())
    with raises(DimensionError):
        expected_loss(dilation_family[0], DecisionRule.constant(0, 2, 3), LossSpec.zero_one())
    with raises(DimensionError):
        expected_loss(
            dilation_family[0], DecisionRule.constant(0, 2, 3), LossSpec.zero_one(3)
        )


@pytest.mark.parametrize(
    "p,loss,expected",
    [
        (0.3, LossSpec.zero_one(), (0, 0.3)),
        (0.5, LossSpec.asymmetric(1.4), (0, 0.5)),
        (0.5, LossSpec.zero_one(), (0, 0.5)),
        (0.8, LossSpec.zero_one(), (1, 0.2)),
    ],
)
def test_optimal_action(p, loss, expected):
    action, value = optimal_action(FiniteDistribution.binary(p), loss)
    assert action == expected[0]
    assert value == approx(expected[1])


def test_optimal_action_needs_x_independent_loss():
    with raises(UnsupportedLossError):
        optimal_action(FiniteDistribution.binary(0.5), LossSpec.observation_scaled())


def test_worst_case_loss_constant_rule(dilation_family):
    value, witness = worst_case_loss(
        dilation_family, DecisionRule.constant(0, 2, 2), LossSpec.zero_one()
    )
    assert value == approx(1.0 / 3.0)
    assert 0 <= witness < 4


def test_worst_case_loss_copy_rule(dilation_family):
    value, witness = worst_case_loss(
        dilation_family, DecisionRule.deterministic((0, 1), 2), LossSpec.zero_one()
    )
    assert value == approx(1.0)
    anti = dilation_family[witness].mass
    assert anti[0, 0] == 0.0 and anti[1, 1] == 0.0


def test_worst_case_loss_singleton():
    joint = JointDistribution([[0.1, 0.3], [0.4, 0.2]])
    rule = DecisionRule([[0.2, 0.8], [0.5, 0.5]])
    value, witness = worst_case_loss(CredalSet.singleton(joint), rule, LossSpec.zero_one())
    assert witness == 0
    assert value == expected_loss(joint, rule, LossSpec.zero_one())


def test_global_minimax_dilation(dilation_family):
    solution = global_minimax(dilation_family, LossSpec.zero_one())
    assert solution.rule.name == "d00"
    assert solution.value == approx(1.0 / 3.0, abs=1e-9)
    assert solution.mixture == (((0, 0), 1.0),)
    assert solution.criterion == "loss"


def test_global_minimax_observation_mismatch():
    family = marginal_family(FiniteDistribution.binary(0.5), 2)
    solution = global_minimax(family, LossSpec.observation_mismatch())

    assert solution.value == approx(2.0 / 3.0, abs=1e-6)
    assert [actions for actions, _ in solution.mixture] == [(1, 0), (0, 1)]
    assert [weight for _, weight in solution.mixture] == approx([2 / 3, 1 / 3], abs=1e-6)
    assert solution.rule.matrix[:, 1] == approx([2 / 3, 1 / 3], abs=1e-6)


def test_global_minimax_observation_scaled():
    family = marginal_family(FiniteDistribution.binary(0.4), 2)
    solution = global_minimax(family, LossSpec.observation_scaled())
    assert solution.rule.name == "d00"
    assert solution.value == approx(0.8, abs=1e-9)


def test_global_minimax_rejects_infinite_loss(dilation_family):
    with raises(UnsupportedLossError):
        global_minimax(dilation_family, LossSpec([[0.0, np.inf], [1.0, 0.0]]))


def test_global_minimax_size_cap():
    family = marginal_family(FiniteDistribution.binary(0.5), 21)
    with raises(SizeCapError):
        global_minimax(family, LossSpec.zero_one())


def test_value_matches_optimal_action():
    rng = np.random.default_rng(20240601)
    for _ in range(200):
        x_size, p_y, loss = random_instance(rng)
        family = marginal_family(p_y, x_size)
        solution = global_minimax(family, loss)
        _, value = optimal_action(p_y, loss)

        assert solution.value == approx(value, abs=1e-6)
        assert solution.rule.is_constant(1e-6)


def test_constant_rules_are_reliable():
    rng = np.random.default_rng(77)
    for _ in range(10):
        x_size, p_y, loss = random_instance(rng)
        family = marginal_family(p_y, x_size)
        for action in range(loss.action_count):
            rule = DecisionRule.constant(action, x_size, loss.action_count)
            values = [expected_loss(vertex, rule, loss) for vertex in family]
            assert max(values) - min(values) <= 1e-12


def test_global_value_is_a_lower_bound():
    rng = np.random.default_rng(99)
    for _ in range(20):
        x_size, y_size = rng.integers(1, 4, size=2)
        family = marginal_family(random_marginal(rng, int(y_size) + 1), int(x_size))
        loss = random_loss(rng, int(y_size) + 1, 3, x_size=int(x_size))
        solution = global_minimax(family, loss)
        for _ in range(10):
            rows = rng.dirichlet(np.ones(3), size=x_size)
            value, _ = worst_case_loss(family, DecisionRule(rows), loss)
            assert solution.value <= value + 1e-6


def test_mixture_to_behavioral_preserves_loss():
    rng = np.random.default_rng(8)
    family = marginal_family(random_marginal(rng, 3), 2)
    loss = random_loss(rng, 3, 3)
    rules = deterministic_rules(2, 3)
    weights = rng.dirichlet(np.ones(len(rules)))
    behavioral = DecisionRule.from_mixture(weights, rules, 3)
    for vertex in family:
        mixed = sum(
            w * expected_loss(vertex, DecisionRule.deterministic(r, 3), loss)
            for w, r in zip(weights, rules)
        )
        assert expected_loss(vertex, behavioral, loss) == approx(mixed, abs=1e-9)


def test_local_minimax_dilation(dilation_family):
    for x in range(2):
        local = local_minimax(dilation_family, x, LossSpec.zero_one())
        assert local.observation == x
        assert local.action.mass == approx([0.5, 0.5], abs=1e-9)
        assert local.value == approx(0.5, abs=1e-9)


@pytest.mark.parametrize("x", [0, 1])
def test_local_minimax_observation_mismatch(x):
    family = marginal_family(FiniteDistribution.binary(0.5), 2)
    local = local_minimax(family, x, LossSpec.observation_mismatch())
    assert local.action[x] == approx(1.0 / 3.0, abs=1e-9)
    assert local.action[1 - x] == approx(2.0 / 3.0, abs=1e-9)
    assert local.value == approx(2.0 / 3.0, abs=1e-9)


def test_local_minimax_singleton_is_bayes():
    joint = JointDistribution([[0.1, 0.3], [0.4, 0.2]])
    credal = CredalSet.singleton(joint)
    for x, expected in [(0, 1), (1, 0)]:
        local = local_minimax(credal, x, LossSpec.zero_one())
        action, value = optimal_action(joint.conditional_y(x), LossSpec.zero_one())
        assert action == expected
        assert local.action.mass.tolist() == DecisionRule.constant(action, 1, 2)[0].mass.tolist()
        assert local.value == approx(value)


def test_local_minimax_undefined():
    credal = CredalSet.singleton([[0.0, 0.0], [0.5, 0.5]])
    with raises(ConditioningUndefinedError):
        local_minimax(credal, 0, LossSpec.zero_one())


def test_time_inconsistency_dilation(dilation_family):
    report = time_inconsistency_report(dilation_family, LossSpec.zero_one())

    assert report.inconsistent
    assert report.disagreements == (True, True)
    assert report.global_solution.value == approx(1.0 / 3.0, abs=1e-9)
    assert report.worst_local_value == approx(0.5, abs=1e-9)
    assert report.plan_value == approx(0.5, abs=1e-9)
    assert report.pay_not_to_know == approx(1.0 / 6.0, abs=1e-9)


def test_time_inconsistency_observation_mismatch():
    family = marginal_family(FiniteDistribution.binary(0.5), 2)
    report = time_inconsistency_report(family, LossSpec.observation_mismatch())
    assert not report.inconsistent
    assert report.pay_not_to_know == approx(0.0, abs=1e-6)


def test_time_inconsistency_observation_scaled():
    family = marginal_family(FiniteDistribution.binary(0.4), 2)
    report = time_inconsistency_report(family, LossSpec.observation_scaled())

    assert report.inconsistent
    assert report.global_solution.rule.name == "d00"
    assert [local.value for local in report.local] == approx([0.5, 1.0], abs=1e-9)
    for local in report.local:
        assert local.action.mass == approx([0.5, 0.5], abs=1e-9)
    assert report.pay_not_to_know == approx(0.2, abs=1e-9)


def test_time_inconsistency_singleton():
    credal = CredalSet.singleton(JointDistribution([[0.1, 0.3], [0.4, 0.2]]))
    report = time_inconsistency_report(credal, LossSpec.zero_one())
    assert not report.inconsistent
    assert report.pay_not_to_know == 0.0
    assert report.global_solution.rule.name == "d10"


def test_time_inconsistency_null_observation():
    credal = CredalSet([[[0.0, 0.0], [0.5, 0.5]], [[0.0, 0.0], [0.9, 0.1]]])
    report = time_inconsistency_report(credal, LossSpec.zero_one())
    assert report.local[0] is None
    assert not report.disagreements[0]
    assert report.plan.matrix[0].tolist() == report.global_solution.rule.matrix[0].tolist()


def test_global_minimax_regret_singleton():
    credal = CredalSet.singleton(JointDistribution([[0.1, 0.3], [0.4, 0.2]]))
    solution = global_minimax_regret(credal, LossSpec.zero_one())
    assert solution.criterion == "regret"
    assert solution.value == approx(0.0, abs=1e-12)
    assert solution.rule.name == "d10"


def test_global_minimax_regret_bounds(dilation_family):
    loss = LossSpec.zero_one()
    solution = global_minimax_regret(dilation_family, loss)
    best = [
        min(
            expected_loss(vertex, DecisionRule.deterministic(r, 2), loss)
            for r in deterministic_rules(2, 2)
        )
        for vertex in dilation_family
    ]
    assert solution.value >= -1e-12
    for r in deterministic_rules(2, 2):
        rule = DecisionRule.deterministic(r, 2)
        regret = max(expected_loss(v, rule, loss) - b for v, b in zip(dilation_family, best))
        assert solution.value <= regret + 1e-9
