"""Expected loss, optimal actions and minimax rules over credal sets.

Examples
--------
The classic dilation example: Y is binary with Pr(Y = 1) = 1/3 and nothing is
known about how X relates to Y.

>>> from credal_decide.core import FiniteDistribution, marginal_family
>>> from credal_decide.decision import LossSpec
>>> family = marginal_family(FiniteDistribution.binary(1.0 / 3.0), 2)
>>> solution = global_minimax(family, LossSpec.zero_one())
>>> solution.rule.name, round(solution.value, 9)
('d00', 0.333333333)
>>> local = local_minimax(family, 0, LossSpec.zero_one())
>>> local.action.mass.round(9).tolist(), round(local.value, 9)
([0.5, 0.5], 0.5)
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..core import COMPARISON_TOL, FiniteDistribution
from ..errors import (
    ConditioningUndefinedError,
    DimensionError,
    SizeCapError,
    UnsupportedLossError,
)
from .game import solve_matrix_game
from .loss import expected_table_loss
from .rules import MAX_RULES, DecisionRule, canonical_mixture, deterministic_rules

DISAGREEMENT_TOL = 1e-6


@dataclass(frozen=True, eq=False)
class MinimaxSolution:
    """A rule chosen before observing X.

    Attributes
    ----------
    rule : DecisionRule
        Behavioral rule.
    value : float
        Worst-case expected loss (or regret) of *rule* over the credal set.
    witness : int
        Index of a vertex attaining *value*.
    mixture : tuple of (tuple of int, float)
        Canonical decomposition of *rule* into deterministic rules.
    criterion : str
        ``"loss"`` or ``"regret"``.
    """

    rule: DecisionRule
    value: float
    witness: int
    mixture: tuple
    criterion: str = "loss"


@dataclass(frozen=True, eq=False)
class LocalSolution:
    """Minimax action after observing X = *observation*."""

    observation: int
    action: FiniteDistribution
    value: float
    witness: int


@dataclass(frozen=True, eq=False)
class InconsistencyReport:
    """Comparison of the global plan with the locally optimal actions.

    ``local[x]`` is ``None`` when no vertex allows X = x; the plan then
    follows the global rule there.
    """

    global_solution: MinimaxSolution
    local: tuple
    disagreements: tuple
    inconsistent: bool
    plan: DecisionRule
    plan_value: float
    worst_local_value: Optional[float]
    pay_not_to_know: float


def _check_shapes(x_size, y_size, rule, loss):
    if loss.y_size != y_size:
        raise DimensionError(f"loss has {loss.y_size} outcomes, distribution has {y_size}")
    if rule is not None:
        if rule.x_size != x_size:
            raise DimensionError(f"rule has {rule.x_size} observations, expected {x_size}")
        if rule.action_count != loss.action_count:
            raise DimensionError(
                f"rule has {rule.action_count} actions, loss has {loss.action_count}"
            )
    loss.check_x_size(x_size)


def expected_loss(joint, rule, loss):
    """Expected loss of *rule* when (X, Y) has distribution *joint*.

    Cells with zero probability contribute nothing, so an infinite loss only
    matters where it can happen.

    Examples
    --------
    >>> from credal_decide.core import JointDistribution
    >>> from credal_decide.decision import LossSpec
    >>> joint = JointDistribution([[0.5, 0.0], [0.0, 0.5]])
    >>> expected_loss(joint, DecisionRule.deterministic((0, 1), 2), LossSpec.zero_one())
    0.0
    >>> expected_loss(joint, DecisionRule.constant(0, 2, 2), LossSpec.zero_one())
    0.5
    """
    _check_shapes(joint.x_size, joint.y_size, rule, loss)
    weights = joint.mass[:, :, np.newaxis] * rule.matrix[:, np.newaxis, :]
    table = loss.expanded(joint.x_size).transpose(2, 0, 1)
    return expected_table_loss(weights, table)


def worst_case_loss(c, rule, loss):
    """Largest expected loss of *rule* over the vertices of *c*.

    Returns
    -------
    tuple of (float, int)
        The worst-case expected loss and the first vertex attaining it.
    """
    values = [expected_loss(vertex, rule, loss) for vertex in c]
    witness = int(np.argmax(values))
    return values[witness], witness


def optimal_action(p_y, loss):
    """Action with the smallest expected loss under *p_y*.

    Returns
    -------
    tuple of (int, float)
        The action (lowest index on ties) and its expected loss.

    Examples
    --------
    >>> from credal_decide.decision import LossSpec
    >>> optimal_action(FiniteDistribution.binary(0.3), LossSpec.zero_one())
    (0, 0.3)
    """
    loss.require_x_independent()
    if loss.y_size != p_y.support_size:
        raise DimensionError("loss and distribution have different outcome counts")
    values = [
        expected_table_loss(p_y.mass, loss.table[:, a]) for a in range(loss.action_count)
    ]
    action = int(np.argmin(values))
    return action, values[action]


def _rule_payoff(c, loss):
    """Expected loss of every deterministic rule against every vertex."""
    _check_shapes(c.x_size, c.y_size, None, loss)
    if not loss.is_finite:
        raise UnsupportedLossError("infinite entries cannot be used in a matrix game")
    count = loss.action_count**c.x_size
    if count > MAX_RULES:
        raise SizeCapError("deterministic rules", count, MAX_RULES)

    rules = deterministic_rules(c.x_size, loss.action_count)
    by_action = np.einsum("vxy,yax->vxa", c.masses, loss.expanded(c.x_size))
    payoff = by_action[:, np.arange(c.x_size), rules].sum(axis=-1)
    return rules, payoff.T


def _minimax_solution(c, loss, rules, payoff, best=None):
    criterion = "loss" if best is None else "regret"
    mixture, _ = solve_matrix_game(payoff)
    rule = DecisionRule.from_mixture(mixture, rules, loss.action_count)
    if best is not None:
        regrets = [expected_loss(vertex, rule, loss) - b for vertex, b in zip(c, best)]
        witness = int(np.argmax(regrets))
        value = regrets[witness]
    else:
        value, witness = worst_case_loss(c, rule, loss)
    return MinimaxSolution(
        rule=rule,
        value=value,
        witness=witness,
        mixture=tuple(canonical_mixture(rule)),
        criterion=criterion,
    )


def global_minimax(c, loss):
    """Rule minimizing the worst-case expected loss over *c*.

    The game has one row per deterministic rule and one column per vertex
    of *c*. The optimal row mixture is returned as the equivalent behavioral
    rule.

    Parameters
    ----------
    c : CredalSet
        Credal set of joints.
    loss : LossSpec
        Finite loss, optionally observation-dependent.

    Returns
    -------
    MinimaxSolution
    """
    rules, payoff = _rule_payoff(c, loss)
    return _minimax_solution(c, loss, rules, payoff)


def global_minimax_regret(c, loss):
    """Rule minimizing the worst-case regret over *c*.

    Regret at a vertex is the rule's expected loss there minus the
    smallest expected loss any rule achieves at that vertex.
    """
    rules, payoff = _rule_payoff(c, loss)
    best = payoff.min(axis=0)
    return _minimax_solution(c, loss, rules, payoff - best, best=best)


def local_minimax(c, x, loss):
    """Minimax action distribution after observing X = *x*.

    Every vertex allowing the observation is conditioned on it, and the
    agent plays against the resulting set of Y-distributions using the loss
    in effect at *x*.

    Returns
    -------
    LocalSolution
    """
    _check_shapes(c.x_size, c.y_size, None, loss)
    index, conditionals = c.conditioned(x)
    table = loss.at(x)
    if not np.isfinite(table).all():
        raise UnsupportedLossError("infinite entries cannot be used in a matrix game")

    payoff = table.T @ conditionals.T
    mixture, value = solve_matrix_game(payoff)
    witness = int(index[np.argmax(mixture @ payoff)])
    return LocalSolution(
        observation=int(x),
        action=FiniteDistribution(mixture),
        value=value,
        witness=witness,
    )


def time_inconsistency_report(c, loss):
    """Compare the global minimax plan with local minimax after observing.

    The premium ``pay_not_to_know`` is the worst-case loss of the plan that
    plays local minimax at every observation, less the global minimax value.

    Examples
    --------
    >>> from credal_decide.core import FiniteDistribution, marginal_family
    >>> from credal_decide.decision import LossSpec
    >>> family = marginal_family(FiniteDistribution.binary(1.0 / 3.0), 2)
    >>> report = time_inconsistency_report(family, LossSpec.zero_one())
    >>> report.inconsistent, round(report.pay_not_to_know, 9)
    (True, 0.166666667)
    """
    solution = global_minimax(c, loss)

    local, rows, disagreements = [], [], []
    for x in range(c.x_size):
        try:
            found = local_minimax(c, x, loss)
        except ConditioningUndefinedError:
            local.append(None)
            rows.append(solution.rule.matrix[x])
            disagreements.append(False)
        else:
            local.append(found)
            rows.append(found.action.mass)
            disagreements.append(
                found.action.total_variation(solution.rule[x]) > DISAGREEMENT_TOL
            )

    plan = DecisionRule(rows)
    plan_value, _ = worst_case_loss(c, plan, loss)
    premium = plan_value - solution.value
    if abs(premium) <= COMPARISON_TOL:
        premium = 0.0

    values = [found.value for found in local if found is not None]
    return InconsistencyReport(
        global_solution=solution,
        local=tuple(local),
        disagreements=tuple(disagreements),
        inconsistent=any(disagreements),
        plan=plan,
        plan_value=plan_value,
        worst_local_value=max(values) if values else None,
        pay_not_to_know=premium,
    )
