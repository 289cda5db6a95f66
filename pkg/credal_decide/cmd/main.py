"""The ``credal-decide`` command line.

Each subcommand reads a scenario (``--builtin NAME`` or ``--scenario PATH``),
applies the ``--p``, ``--n``, ``--alpha``, ``--seed`` and ``--runs``
overrides, and writes a report to ``--out`` (stdout by default). Errors are
reported on stderr as a single ``error: <ErrorClass>: <message>`` line, with
the error's exit code.
"""
import functools

import click
import numpy as np

from .._version import __version__
from ..bayes import (
    HierarchicalPrior,
    bayes_decision,
    hierarchical_weights,
    parse_prior,
    predictive,
    predictive_x,
)
from ..core import dilation_report, marginal_family
from ..decision import global_minimax_regret, rule_name, time_inconsistency_report
from ..errors import CredalDecideError, InvalidScenarioError
from ..oracle import regret_table, simulate, strategy_risk, trigger_sweep
from ..utils import err, out
from .builtins import BUILTINS, builtin_scenario
from .report import COLUMNS, encode, join_numbers, rows_from_dataset, write_report
from .scenario import Scenario


def load_scenario(builtin, path, **overrides):
    """Scenario from a builtin name or a file, with command-line overrides."""
    if (builtin is None) == (path is None):
        raise InvalidScenarioError("give exactly one of --builtin and --scenario")
    if builtin is not None:
        scenario = builtin_scenario(builtin)
    else:
        scenario = Scenario.from_path(path)
    return scenario.override(**overrides)


def scenario_command(func):
    """Add the shared options and turn *func*'s rows into a report."""

    @click.option(
        "--builtin",
        type=click.Choice(sorted(BUILTINS)),
        help="Use a builtin scenario.",
    )
    @click.option(
        "--scenario",
        "path",
        type=click.Path(exists=True, dir_okay=False),
        help="Read the scenario from a YAML or JSON file.",
    )
    @click.option("--p", "p", type=float, multiple=True, help="Pr(Y = 1).")
    @click.option("--n", "n", type=int, multiple=True, help="Training horizon.")
    @click.option(
        "--alpha", type=float, multiple=True, help="Cost of a false positive."
    )
    @click.option("--seed", type=int, help="Seed of the simulation.")
    @click.option("--runs", type=int, help="Number of simulated runs.")
    @click.option(
        "--format",
        "fmt",
        type=click.Choice(["json", "csv"]),
        default="json",
        show_default=True,
        help="Report format.",
    )
    @click.option(
        "--out", "output", type=click.File("w"), default="-", help="Report file."
    )
    @click.option("-v", "--verbose", is_flag=True, help="Emit progress to stderr.")
    @click.pass_context
    @functools.wraps(func)
    def command(ctx, builtin, path, p, n, alpha, seed, runs, fmt, output, verbose):
        name = ctx.info_name
        try:
            scenario = load_scenario(
                builtin, path, p=p, n=n, alpha=alpha, seed=seed, runs=runs
            )
            if verbose:
                out(f"{name}: scenario {scenario.name}")
            rows = func(scenario)
        except CredalDecideError as error:
            err(f"error: {type(error).__name__}: {error}")
            ctx.exit(error.exit_code)

        write_report(output, fmt, name, scenario, rows)
        if verbose:
            out(f"{name}: wrote {len(rows)} rows")

    return command


def _label(p_y):
    if p_y.support_size == 2:
        return float(p_y[1])
    return join_numbers(p_y.mass)


def _mixture(mixture):
    return ";".join(
        f"{rule_name(actions)}:{encode(float(weight))!r}" for actions, weight in mixture
    )


@click.group()
@click.version_option(version=__version__)
def credal_decide():
    """Decisions with imprecise probabilities and the Bayesian oracle."""


@credal_decide.command("minimax")
@scenario_command
def minimax(scenario):
    """Global and local minimax rules over the marginal family."""
    scenario.require("x_size")
    rows = []
    for p_y in scenario.marginals():
        family = marginal_family(p_y, scenario.x_size)
        loss = scenario.loss_spec(p_y.support_size)
        report = time_inconsistency_report(family, loss)
        if scenario.criterion == "regret":
            solution = global_minimax_regret(family, loss)
        else:
            solution = report.global_solution

        for x in range(scenario.x_size):
            local = report.local[x]
            compare = scenario.criterion == "loss"
            for action in range(loss.action_count):
                rows.append(
                    {
                        "p": _label(p_y),
                        "x": x,
                        "action": action,
                        "criterion": scenario.criterion,
                        "global_prob": solution.rule.matrix[x, action],
                        "local_prob": None if local is None else local.action[action],
                        "global_value": solution.value,
                        "local_value": None if local is None else local.value,
                        "disagree": report.disagreements[x] if compare else None,
                        "inconsistent": report.inconsistent if compare else None,
                        "pay_not_to_know": report.pay_not_to_know if compare else None,
                        "worst_local_value": report.worst_local_value,
                        "global_mixture": _mixture(solution.mixture),
                    }
                )
    return rows


@credal_decide.command("dilation")
@scenario_command
def dilation(scenario):
    """Interval of an event before and after observing X."""
    scenario.require("x_size", "event")
    rows = []
    for p_y in scenario.marginals():
        report = dilation_report(marginal_family(p_y, scenario.x_size), scenario.event)
        for x, interval in enumerate(report.intervals):
            rows.append(
                {
                    "p": _label(p_y),
                    "event": ";".join(str(y) for y in report.event),
                    "x": x,
                    "prior_lower": report.prior.lower,
                    "prior_upper": report.prior.upper,
                    "lower": None if interval is None else interval.lower,
                    "upper": None if interval is None else interval.upper,
                    "dilates": report.dilates[x],
                    "dilation": report.dilation,
                }
            )
    return rows


@credal_decide.command("predict")
@scenario_command
def predict(scenario):
    """Bayesian predictive distribution of Y for given training counts."""
    scenario.require("p", "prior")
    counts = scenario.sample_counts()
    loss = scenario.loss_spec() if scenario.loss is not None else None

    rows = []
    for p in scenario.p:
        for spec in scenario.prior:
            prior = parse_prior(spec, scenario.x_size, p)
            pred = predictive(prior, counts)
            next_x = predictive_x(prior, counts)
            if isinstance(prior, HierarchicalPrior):
                weights = hierarchical_weights(counts, p)
            else:
                weights = None
            for k in range(scenario.x_size):
                action = None if loss is None else bayes_decision(pred, loss, k)
                rows.append(
                    {
                        "p": p,
                        "prior": prior.name,
                        "k": k,
                        "q": pred[k],
                        "odds": pred.odds[k],
                        "predictive_x": next_x[k],
                        "dependent_weight": None if weights is None else weights[k],
                        "action": action,
                    }
                )
    return rows


@credal_decide.command("beta")
@scenario_command
def beta(scenario):
    """Probability that the Bayesian predicts 1, over horizons and costs."""
    scenario.require("n", "alpha", "true_model")
    p = scenario.marginal_p()
    model = scenario.true_models(p, 0)[0]
    sweep = trigger_sweep(model, scenario.single("prior"), scenario.n, scenario.alpha)

    rows = rows_from_dataset(sweep.drop_vars(["beta_by_x", "x"]), COLUMNS["beta"])
    for row in rows:
        row["prior"] = sweep.attrs["prior"]
        by_x = sweep.beta_by_x.sel(n=row["n"], alpha=row["alpha"]).values
        row["beta_by_x"] = join_numbers(by_x)
    return rows


@credal_decide.command("risk")
@scenario_command
def risk(scenario):
    """Exact risk and regret of strategies under candidate true models."""
    p = scenario.marginal_p()
    models = scenario.true_models(p, scenario.single("n"))
    table = regret_table(
        models, scenario.strategy_ids(), scenario.loss_spec(), scenario.baseline
    )
    return rows_from_dataset(table, COLUMNS["risk"])


@credal_decide.command("simulate")
@scenario_command
def simulate_command(scenario):
    """Monte Carlo risk of strategies, next to the exact value."""
    scenario.require("runs", "seed")
    p = scenario.marginal_p()
    models = scenario.true_models(p, scenario.single("n"))
    loss = scenario.loss_spec()

    rows = []
    for model in models:
        for strategy in scenario.strategy_ids():
            result = simulate(model, strategy, loss, scenario.runs, scenario.seed)
            exact = strategy_risk(model, strategy, loss)
            error = result.standard_error
            if np.isfinite(error) and error > 0.0:
                z = (result.mean - exact) / error
            else:
                z = None
            rows.append(
                {
                    "model": model.label,
                    "n": model.n,
                    "strategy": strategy.label,
                    "runs": result.runs,
                    "seed": result.seed,
                    "mean": result.mean,
                    "standard_error": error,
                    "exact": exact,
                    "z": z,
                }
            )
    return rows


main = credal_decide


if __name__ == "__main__":
    main()
