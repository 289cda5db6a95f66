from .brute import sequence_risk, sequence_trigger_probability, sequences
from .instances import (
    random_counts,
    random_instance,
    random_loss,
    random_marginal,
    random_mixture,
)

__all__ = [
    "random_counts",
    "random_instance",
    "random_loss",
    "random_marginal",
    "random_mixture",
    "sequence_risk",
    "sequence_trigger_probability",
    "sequences",
]
