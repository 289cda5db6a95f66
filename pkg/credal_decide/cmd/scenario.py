"""Scenario files: the inputs of a command, read strictly.

A scenario is a YAML (or JSON) mapping. Unknown keys are rejected, and the
marginal, horizon and false-positive cost are never filled in silently: a
command that needs one of them fails when it is missing.

Examples
--------
>>> scenario = Scenario.from_dict({"x_size": 2, "p": 0.3, "loss": "zero-one"})
>>> scenario.p, scenario.marginals()[0].mass.tolist()
((0.3,), [0.7, 0.3])
>>> Scenario.from_dict({"x_size": 2, "q": 0.3})  # doctest: +IGNORE_EXCEPTION_DETAIL
Traceback (most recent call last):
credal_decide.errors.InvalidScenarioError: unknown scenario keys: q
"""
import dataclasses
from dataclasses import dataclass
from typing import Optional

import numpy as np
import yaml

from ..bayes import SampleCounts
from ..core import FiniteDistribution, ParamJoint
from ..decision import LossSpec
from ..errors import CredalDecideError, InvalidScenarioError
from ..oracle import StrategyId, TrueModel

NAMED_LOSSES = (
    "zero-one",
    "asymmetric",
    "observation-scaled",
    "observation-mismatch",
)


def _tuple(value, convert, name):
    if value is None:
        return ()
    if not isinstance(value, (list, tuple)):
        value = [value]
    try:
        return tuple(convert(item) for item in value)
    except (TypeError, ValueError):
        raise InvalidScenarioError(f"bad value for {name!r}: {value!r}")


def _integer(value):
    if isinstance(value, bool) or int(value) != value:
        raise ValueError(value)
    return int(value)


def _optional_integer(value, name):
    if value is None:
        return None
    try:
        return _integer(value)
    except (TypeError, ValueError):
        raise InvalidScenarioError(f"{name!r} must be an integer, got {value!r}")


@dataclass(frozen=True)
class Scenario:
    """Validated contents of a scenario file.

    Every sequence-valued field is stored as a tuple; ``p``, ``n`` and
    ``alpha`` may list several values for commands that sweep them.
    """

    name: str = "custom"
    x_size: Optional[int] = None
    p: tuple = ()
    p_y: tuple = ()
    loss: object = None
    event: tuple = ()
    prior: tuple = ()
    counts: object = None
    true_model: object = None
    models: tuple = ()
    strategies: tuple = ()
    baseline: Optional[str] = None
    criterion: str = "loss"
    n: tuple = ()
    alpha: tuple = ()
    runs: Optional[int] = None
    seed: Optional[int] = None

    @classmethod
    def from_dict(cls, data):
        if not isinstance(data, dict):
            raise InvalidScenarioError("a scenario must be a mapping")
        known = {field.name for field in dataclasses.fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise InvalidScenarioError(
                f"unknown scenario keys: {', '.join(unknown)}"
            )

        criterion = data.get("criterion", "loss")
        if criterion not in ("loss", "regret"):
            raise InvalidScenarioError(
                f"criterion must be loss or regret, got {criterion!r}"
            )
        models = data.get("models") or []
        if not isinstance(models, list):
            raise InvalidScenarioError("'models' must be a list")

        return cls(
            name=str(data.get("name", "custom")),
            x_size=_optional_integer(data.get("x_size"), "x_size"),
            p=_tuple(data.get("p"), float, "p"),
            p_y=_tuple(data.get("p_y"), float, "p_y"),
            loss=data.get("loss"),
            event=_tuple(data.get("event"), _integer, "event"),
            prior=_tuple(data.get("prior"), _keep, "prior"),
            counts=data.get("counts"),
            true_model=data.get("true_model"),
            models=tuple(models),
            strategies=_tuple(data.get("strategies"), _keep, "strategies"),
            baseline=data.get("baseline"),
            criterion=criterion,
            n=_tuple(data.get("n"), _integer, "n"),
            alpha=_tuple(data.get("alpha"), float, "alpha"),
            runs=_optional_integer(data.get("runs"), "runs"),
            seed=_optional_integer(data.get("seed"), "seed"),
        )

    @classmethod
    def from_path(cls, path):
        """Read a scenario from a YAML or JSON file."""
        with open(path) as fp:
            try:
                data = yaml.safe_load(fp)
            except yaml.YAMLError as error:
                raise InvalidScenarioError(f"cannot parse {path}: {error}")
        return cls.from_dict(data)

    def override(self, **kwds):
        """Copy with the given fields replaced; empty values are ignored."""
        changes = {
            key: value for key, value in kwds.items() if value not in (None, ())
        }
        for key in ("p", "alpha"):
            if key in changes:
                changes[key] = _tuple(changes[key], float, key)
        if "n" in changes:
            changes["n"] = _tuple(changes["n"], _integer, "n")
        return dataclasses.replace(self, **changes)

    def to_dict(self):
        """Plain mapping of the fields that are set, for reports."""
        data = {}
        for field in dataclasses.fields(self):
            value = getattr(self, field.name)
            if value is None or value == ():
                continue
            data[field.name] = _plain(value)
        return data

    def require(self, *names):
        for name in names:
            if getattr(self, name) in (None, ()):
                raise InvalidScenarioError(f"scenario does not set {name!r}")

    def single(self, name):
        """The one value of a sweep field."""
        self.require(name)
        values = getattr(self, name)
        if len(values) != 1:
            raise InvalidScenarioError(f"this command takes a single {name!r}")
        return values[0]

    def marginals(self):
        """Y-marginals to evaluate, one per value of ``p`` or the single ``p_y``."""
        if self.p and self.p_y:
            raise InvalidScenarioError("set either 'p' or 'p_y', not both")
        if self.p_y:
            return [_checked(FiniteDistribution, self.p_y)]
        self.require("p")
        return [_checked(FiniteDistribution.binary, p) for p in self.p]

    def marginal_p(self):
        """The single Pr(Y = 1) of a binary-outcome command."""
        if self.p_y:
            raise InvalidScenarioError(
                "this command needs a binary outcome set by 'p'"
            )
        return self.single("p")

    def loss_spec(self, y_size=2):
        """The loss, built from its name or table."""
        self.require("loss")
        loss = self.loss
        if isinstance(loss, list):
            return _checked(LossSpec, loss)
        if loss == "zero-one":
            return LossSpec.zero_one(y_size)
        if loss == "asymmetric":
            return LossSpec.asymmetric(self.single("alpha"))
        if loss in ("observation-scaled", "observation-mismatch"):
            self.require("x_size")
            builder = getattr(LossSpec, loss.replace("-", "_"))
            return builder(self.x_size)
        raise InvalidScenarioError(
            f"unknown loss {loss!r}, expected a table or one of "
            f"{', '.join(NAMED_LOSSES)}"
        )

    def sample_counts(self):
        self.require("counts", "x_size")
        counts = _checked(SampleCounts, self.counts)
        if counts.x_size != self.x_size:
            raise InvalidScenarioError(
                f"counts have {counts.x_size} rows, x_size is {self.x_size}"
            )
        return counts

    def true_models(self, p, n):
        """Candidate true models at marginal *p* and horizon *n*."""
        self.require("x_size")
        specs = list(self.models)
        if self.true_model is not None:
            specs.insert(0, self.true_model)
        if not specs:
            raise InvalidScenarioError(
                "scenario sets neither 'true_model' nor 'models'"
            )
        return [_true_model(spec, self.x_size, p, n) for spec in specs]

    def strategy_ids(self):
        self.require("strategies")
        return [StrategyId.parse(strategy) for strategy in self.strategies]


def _keep(value):
    return value


def _plain(value):
    if isinstance(value, tuple):
        return [_plain(item) for item in value]
    if isinstance(value, np.ndarray):
        return value.tolist()
    return value


def _checked(builder, *args):
    """Build a component, reporting its validation errors as scenario errors."""
    try:
        return builder(*args)
    except InvalidScenarioError:
        raise
    except (CredalDecideError, TypeError, ValueError) as error:
        raise InvalidScenarioError(str(error))


def _true_model(spec, x_size, p, n):
    if not isinstance(spec, dict):
        raise InvalidScenarioError(f"a true model must be a mapping, got {spec!r}")
    spec = dict(spec)
    label = spec.pop("label", None)
    kind = spec.pop("kind", "param")

    if kind == "independent":
        expected = {"px"}
    elif kind == "correlated":
        expected = set()
    elif kind == "param":
        expected = {"alpha", "beta"}
    else:
        raise InvalidScenarioError(f"unknown true model kind {kind!r}")
    if set(spec) != expected:
        raise InvalidScenarioError(
            f"true model {kind!r} needs keys {sorted(expected)}, got {sorted(spec)}"
        )

    if kind == "independent":
        model = _checked(TrueModel.independent, p, spec["px"], n)
    elif kind == "correlated":
        if x_size != 2:
            raise InvalidScenarioError("a perfectly correlated model needs x_size 2")
        model = _checked(TrueModel.perfectly_correlated, p, n)
    else:
        param = _checked(ParamJoint, p, spec["alpha"], spec["beta"])
        model = TrueModel.from_param(param, n)

    if model.x_size != x_size:
        raise InvalidScenarioError(
            f"true model has {model.x_size} observations, x_size is {x_size}"
        )
    if label is not None:
        model = TrueModel(model.joint, model.n, label=str(label))
    return model
