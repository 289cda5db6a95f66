from .game import GameSolution, solve_matrix_game
from .loss import LossSpec
from .minimax import (
    InconsistencyReport,
    LocalSolution,
    MinimaxSolution,
    expected_loss,
    global_minimax,
    global_minimax_regret,
    local_minimax,
    optimal_action,
    time_inconsistency_report,
    worst_case_loss,
)
from .rules import DecisionRule, canonical_mixture, deterministic_rules, rule_name

__all__ = [
    "DecisionRule",
    "GameSolution",
    "InconsistencyReport",
    "LocalSolution",
    "LossSpec",
    "MinimaxSolution",
    "canonical_mixture",
    "deterministic_rules",
    "expected_loss",
    "global_minimax",
    "global_minimax_regret",
    "local_minimax",
    "optimal_action",
    "rule_name",
    "solve_matrix_game",
    "time_inconsistency_report",
    "worst_case_loss",
]
