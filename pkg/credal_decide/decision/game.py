"""Finite two-person zero-sum games solved by linear programming."""
from typing import NamedTuple

import numpy as np
from scipy.optimize import linprog

from ..core import COMPARISON_TOL
from ..errors import DimensionError, GameSolveError, UnsupportedLossError

LP_OPTIONS = {
    "primal_feasibility_tolerance": 1e-10,
    "dual_feasibility_tolerance": 1e-10,
}


class GameSolution(NamedTuple):
    mixture: np.ndarray
    value: float


def solve_matrix_game(payoff):
    """Optimal mixed strategy for the minimizing row player.

    Solves ``min_s max_c sum_r s[r] payoff[r, c]`` with the HiGHS dual
    simplex. When a pure row attains the game value (within the comparison
    tolerance) the lowest-index such row is returned instead of the LP
    solution.

    Parameters
    ----------
    payoff : array_like
        Loss to the row player, indexed ``[row, column]``.

    Returns
    -------
    GameSolution
        Row mixture and game value.

    Examples
    --------
    >>> mixture, value = solve_matrix_game([[0.0, 1.0], [1.0, 0.0]])
    >>> mixture.round(9).tolist(), round(value, 9)
    ([0.5, 0.5], 0.5)
    >>> solve_matrix_game([[2.0, 3.0], [1.0, 1.0]]).mixture.tolist()
    [0.0, 1.0]
    """
    payoff = np.array(payoff, dtype=float)
    if payoff.ndim != 2 or 0 in payoff.shape:
        raise DimensionError(
            f"payoff must be a non-empty matrix, got shape {payoff.shape}"
        )
    if np.isnan(payoff).any():
        raise UnsupportedLossError("nan payoff")
    if not np.isfinite(payoff).all():
        raise UnsupportedLossError("infinite payoff")

    n_rows, n_cols = payoff.shape
    cost = np.zeros(n_rows + 1)
    cost[-1] = 1.0
    a_ub = np.hstack([payoff.T, -np.ones((n_cols, 1))])
    b_ub = np.zeros(n_cols)
    a_eq = np.append(np.ones(n_rows), 0.0)[np.newaxis, :]
    bounds = [(0.0, None)] * n_rows + [(None, None)]

    result = linprog(
        cost,
        A_ub=a_ub,
        b_ub=b_ub,
        A_eq=a_eq,
        b_eq=[1.0],
        bounds=bounds,
        method="highs-ds",
        options=LP_OPTIONS,
    )
    if result.status != 0:
        raise GameSolveError(result.status, result.message)

    mixture = np.clip(result.x[:n_rows], 0.0, None)
    mixture /= mixture.sum()
    value = float((mixture @ payoff).max())

    pure = payoff.max(axis=1)
    (candidates,) = np.nonzero(pure <= value + COMPARISON_TOL)
    if candidates.size > 0:
        row = candidates[0]
        mixture = np.zeros(n_rows)
        mixture[row] = 1.0
        value = float(pure[row])

    return GameSolution(mixture, value)
