"""The distribution assumed to generate training data and the next pair."""
from dataclasses import dataclass

import numpy as np

from ..core import FiniteDistribution, JointDistribution, ParamJoint
from ..errors import DimensionError, InvalidDistributionError


@dataclass(frozen=True, eq=False)
class TrueModel:
    """A known joint of (X, Y) and a training horizon.

    Training data are *n* independent draws from *joint*; the pair to be
    predicted is one more draw.

    Examples
    --------
    >>> model = TrueModel.independent(0.5, [0.5, 0.5], n=4)
    >>> model.p, model.x_size, model.cells.tolist()
    (0.5, 2, [0.25, 0.25, 0.25, 0.25])
    """

    joint: JointDistribution
    n: int
    label: str = "custom"

    def __post_init__(self):
        if not isinstance(self.joint, JointDistribution):
            object.__setattr__(self, "joint", JointDistribution(self.joint))
        if self.joint.y_size != 2:
            raise DimensionError("the oracle needs a binary outcome")
        n = self.n
        if isinstance(n, (bool, np.bool_)) or int(n) != n or n < 0:
            raise InvalidDistributionError(
                f"horizon must be a nonnegative integer, got {n!r}"
            )
        object.__setattr__(self, "n", int(n))

    @classmethod
    def independent(cls, p, px, n):
        """X independent of Y, with Pr(Y = 1) = *p* and X-marginal *px*."""
        joint = JointDistribution.independent(
            FiniteDistribution(px), FiniteDistribution.binary(p)
        )
        return cls(joint, n, label="independent")

    @classmethod
    def perfectly_correlated(cls, p, n):
        """X always equals Y."""
        param = ParamJoint(p, alpha=[0.0, 1.0], beta=[1.0, 0.0])
        return cls(param.joint(), n, label="correlated")

    @classmethod
    def from_param(cls, param, n, label="param"):
        return cls(param.joint(), n, label=label)

    @property
    def x_size(self):
        return self.joint.x_size

    @property
    def p(self):
        """Pr(Y = 1)."""
        return float(self.joint.mass[:, 1].sum())

    @property
    def p_y(self):
        return self.joint.y_marginal()

    def x_marginal(self):
        return self.joint.x_marginal()

    @property
    def cells(self):
        """Cell probabilities flattened in ``[x, y]`` order."""
        return self.joint.mass.ravel()

    def with_n(self, n):
        return TrueModel(self.joint, n, label=self.label)
