from .counts import SampleCounts, counts_from_sample
from .hierarchical import (
    batch_hierarchical,
    hierarchical_predictive,
    hierarchical_predictive_x,
    hierarchical_weights,
)
from .predictive import (
    PredictiveDistribution,
    batch_odds,
    bayes_decision,
    decision_scores,
    log_marginal_likelihood,
    posterior_odds,
    posterior_odds_uniform,
    predictive,
    predictive_x,
)
from .priors import (
    CellwisePrior,
    DirichletProductPrior,
    HierarchicalPrior,
    parse_prior,
)

__all__ = [
    "CellwisePrior",
    "DirichletProductPrior",
    "HierarchicalPrior",
    "PredictiveDistribution",
    "SampleCounts",
    "batch_hierarchical",
    "batch_odds",
    "bayes_decision",
    "counts_from_sample",
    "decision_scores",
    "hierarchical_predictive",
    "hierarchical_predictive_x",
    "hierarchical_weights",
    "log_marginal_likelihood",
    "parse_prior",
    "posterior_odds",
    "posterior_odds_uniform",
    "predictive",
    "predictive_x",
]
