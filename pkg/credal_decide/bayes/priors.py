"""Dirichlet-product priors over the binary-Y family.

A prior puts independent Dirichlet distributions on Pr(X | Y = 1) (parameters
``a``) and Pr(X | Y = 0) (parameters ``b``); Pr(Y = 1) = ``p`` is known.
"""
import re
from dataclasses import dataclass

import numpy as np

from ..errors import InvalidDistributionError, InvalidScenarioError


def _check_p(p):
    p = float(p)
    if not 0.0 < p < 1.0:
        raise InvalidDistributionError(f"p must lie in (0, 1), got {p!r}")
    return p


def _parameters(values, name):
    values = np.array(values, dtype=float)
    if values.ndim != 1 or values.size == 0:
        raise InvalidDistributionError(f"{name} must be a non-empty vector")
    if not (np.isfinite(values) & (values > 0.0)).all():
        raise InvalidDistributionError(f"{name} must be positive and finite")
    values.setflags(write=False)
    return values


@dataclass(frozen=True, eq=False)
class DirichletProductPrior:
    """Independent Dirichlet priors on the two X-conditionals.

    Examples
    --------
    >>> prior = DirichletProductPrior.ess(4, p=0.5, s=2.0)
    >>> prior.a.tolist(), prior.name
    ([0.5, 0.5, 0.5, 0.5], 'ess:2')
    """

    a: np.ndarray
    b: np.ndarray
    p: float
    name: str = "custom"

    def __post_init__(self):
        object.__setattr__(self, "a", _parameters(self.a, "a"))
        object.__setattr__(self, "b", _parameters(self.b, "b"))
        object.__setattr__(self, "p", _check_p(self.p))
        if self.a.size != self.b.size:
            raise InvalidDistributionError("a and b must have the same length")

    @classmethod
    def uniform(cls, x_size, p):
        return cls(np.ones(x_size), np.ones(x_size), p, name="uniform")

    @classmethod
    def jeffreys(cls, x_size, p):
        return cls(np.full(x_size, 0.5), np.full(x_size, 0.5), p, name="jeffreys")

    @classmethod
    def ess(cls, x_size, p, s):
        """Prior with equivalent sample size *s* for each conditional.

        Every parameter is ``s / x_size``.
        """
        s = float(s)
        value = s / x_size
        return cls(
            np.full(x_size, value), np.full(x_size, value), p, name=f"ess:{s:g}"
        )

    @property
    def x_size(self):
        return self.a.size

    @property
    def sum_a(self):
        return float(self.a.sum())

    @property
    def sum_b(self):
        return float(self.b.sum())


@dataclass(frozen=True)
class HierarchicalPrior:
    """Even mixture of an independence model and the uniform product prior.

    Under the independence model Y has the known marginal, X has a uniform
    Dirichlet prior and X is independent of Y.
    """

    x_size: int
    p: float
    name: str = "hierarchical"

    def __post_init__(self):
        object.__setattr__(self, "p", _check_p(self.p))
        if self.x_size < 1:
            raise InvalidDistributionError("x_size must be positive")


@dataclass(frozen=True)
class CellwisePrior:
    """Add-one odds of Y within the observed cell, scaled by the prior odds.

    The odds at X = k are ``p / (1 - p) * (n_(k,1) + 1) / (n_(k,0) + 1)``.
    Unlike the uniform product prior there is no correction for the class
    sizes ``n_0`` and ``n_1``.

    Examples
    --------
    >>> CellwisePrior(2, 0.5).name
    'laplace'
    """

    x_size: int
    p: float
    name: str = "laplace"

    def __post_init__(self):
        object.__setattr__(self, "p", _check_p(self.p))
        if self.x_size < 1:
            raise InvalidDistributionError("x_size must be positive")


def parse_prior(spec, x_size, p):
    """Build a prior from its scenario description.

    Parameters
    ----------
    spec : str or dict
        ``"uniform"``, ``"jeffreys"``, ``"ess:<s>"``, ``"hierarchical"``,
        ``"laplace"`` or a mapping with ``a`` and ``b`` vectors.
    x_size : int
        Number of observations.
    p : float
        Known Pr(Y = 1).

    Examples
    --------
    >>> parse_prior("ess:4", 2, 0.5).a.tolist()
    [2.0, 2.0]
    >>> parse_prior("hierarchical", 2, 0.5).name
    'hierarchical'
    """
    if isinstance(spec, dict):
        if set(spec) != {"a", "b"}:
            raise InvalidScenarioError(
                f"custom prior needs exactly 'a' and 'b', got {sorted(spec)}"
            )
        prior = DirichletProductPrior(spec["a"], spec["b"], p)
        if prior.x_size != x_size:
            raise InvalidScenarioError(
                f"prior has {prior.x_size} parameters, expected {x_size}"
            )
        return prior

    spec = str(spec)
    if spec == "uniform":
        return DirichletProductPrior.uniform(x_size, p)
    if spec == "jeffreys":
        return DirichletProductPrior.jeffreys(x_size, p)
    if spec == "hierarchical":
        return HierarchicalPrior(x_size, p)
    if spec == "laplace":
        return CellwisePrior(x_size, p)
    match = re.fullmatch(r"ess:([0-9.eE+-]+)", spec)
    if match:
        try:
            s = float(match.group(1))
        except ValueError:
            raise InvalidScenarioError(f"bad equivalent sample size in {spec!r}")
        return DirichletProductPrior.ess(x_size, p, s)
    raise InvalidScenarioError(f"unknown prior {spec!r}")
