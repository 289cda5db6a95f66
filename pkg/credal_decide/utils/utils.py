import os
from functools import partial

import click

from ..errors import ConfigurationError

out = partial(click.secho, bold=True, err=True)
err = partial(click.secho, fg="red", err=True)

THREADS_ENV = "CREDAL_DECIDE_THREADS"


def worker_count(environ=None):
    """Number of worker threads the oracle may use.

    Parameters
    ----------
    environ : mapping, optional
        Environment to read from, ``os.environ`` by default.

    Returns
    -------
    int
        Value of ``CREDAL_DECIDE_THREADS`` if set, otherwise
        ``min(4, os.cpu_count())``.

    Examples
    --------
    >>> worker_count({"CREDAL_DECIDE_THREADS": "3"})
    3
    >>> worker_count({"CREDAL_DECIDE_THREADS": "0"})  # doctest: +IGNORE_EXCEPTION_DETAIL
    Traceback (most recent call last):
    credal_decide.errors.ConfigurationError: bad value for CREDAL_DECIDE_THREADS ('0')
    """
    environ = os.environ if environ is None else environ
    value = environ.get(THREADS_ENV)
    if value is None:
        return min(4, os.cpu_count() or 1)
    try:
        threads = int(value)
    except ValueError:
        raise ConfigurationError(THREADS_ENV, value)
    if threads < 1:
        raise ConfigurationError(THREADS_ENV, value)
    return threads


def fmt12(value):
    """Round a number to 12 significant digits.

    Examples
    --------
    >>> fmt12(2.0 / 3.0)
    0.666666666667
    >>> fmt12(float("inf"))
    inf
    """
    value = float(value)
    if value != value or value in (float("inf"), float("-inf")):
        return value
    return float(f"{value:.12g}")
