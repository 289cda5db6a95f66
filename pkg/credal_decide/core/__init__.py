from .credal import (
    CredalSet,
    DilationReport,
    ProbabilityInterval,
    conditional_bounds,
    dilation_report,
    marginal_family,
    maxent_select,
)
from .distributions import (
    COMPARISON_TOL,
    CONSTRUCTION_TOL,
    FiniteDistribution,
    JointDistribution,
    ParamJoint,
    entropy,
)

__all__ = [
    "COMPARISON_TOL",
    "CONSTRUCTION_TOL",
    "CredalSet",
    "DilationReport",
    "FiniteDistribution",
    "JointDistribution",
    "ParamJoint",
    "ProbabilityInterval",
    "conditional_bounds",
    "dilation_report",
    "entropy",
    "marginal_family",
    "maxent_select",
]
