from ._version import __version__
from .core import CredalSet, FiniteDistribution, JointDistribution, marginal_family
from .decision import DecisionRule, LossSpec, global_minimax, local_minimax
from .errors import CredalDecideError

__all__ = [
    "__version__",
    "CredalDecideError",
    "CredalSet",
    "DecisionRule",
    "FiniteDistribution",
    "JointDistribution",
    "LossSpec",
    "global_minimax",
    "local_minimax",
    "marginal_family",
]
