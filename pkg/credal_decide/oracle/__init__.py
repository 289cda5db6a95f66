from .model import TrueModel
from .regret import regret_table, trigger_sweep
from .simulate import BLOCK_SIZE, SimulationResult, simulate
from .strategies import (
    STRATEGY_KINDS,
    StrategyId,
    bayes_actions,
    observation_losses,
    strategy_prior,
    strategy_risk,
    strategy_rule,
    trigger_probability,
    trigger_probability_by_observation,
)
from .tables import (
    MAX_TABLES,
    CountTable,
    enumerate_count_tables,
    expectation,
    table_count,
    total_weight,
)

__all__ = [
    "BLOCK_SIZE",
    "MAX_TABLES",
    "STRATEGY_KINDS",
    "CountTable",
    "SimulationResult",
    "StrategyId",
    "TrueModel",
    "bayes_actions",
    "enumerate_count_tables",
    "expectation",
    "observation_losses",
    "regret_table",
    "simulate",
    "strategy_prior",
    "strategy_risk",
    "strategy_rule",
    "table_count",
    "total_weight",
    "trigger_probability",
    "trigger_probability_by_observation",
    "trigger_sweep",
]
