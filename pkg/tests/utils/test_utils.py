import math

import pytest

from credal_decide.errors import ConfigurationError
from credal_decide.utils import fmt12, worker_count


def test_worker_count_default(monkeypatch):
    monkeypatch.delenv("CREDAL_DECIDE_THREADS", raising=False)
    assert 1 <= worker_count() <= 4


def test_worker_count_from_env(monkeypatch):
    monkeypatch.setenv("CREDAL_DECIDE_THREADS", "7")
    assert worker_count() == 7


@pytest.mark.parametrize("value", ["0", "-2", "many", "1.5", ""])
def test_worker_count_bad(value):
    with pytest.raises(ConfigurationError):
        worker_count({"CREDAL_DECIDE_THREADS": value})


def test_fmt12():
    assert fmt12(1.0 / 3.0) == 0.333333333333
    assert fmt12(123456.7890123456) == 123456.789012
    assert fmt12(0.0) == 0.0
    assert math.isinf(fmt12(math.inf))
