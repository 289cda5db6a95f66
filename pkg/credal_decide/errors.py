class CredalDecideError(Exception):
    exit_code = 2


class DimensionError(CredalDecideError, ValueError):
    def __init__(self, msg):
        self._msg = msg

    def __str__(self):
        return self._msg


class InvalidDistributionError(CredalDecideError, ValueError):
    def __init__(self, reason):
        self._reason = reason

    def __str__(self):
        return f"invalid distribution ({self._reason})"


class ConditioningUndefinedError(CredalDecideError):
    exit_code = 4

    def __init__(self, x):
        self._x = x

    def __str__(self):
        return f"every distribution gives zero probability to the observation ({self._x})"


class UnsupportedFamilyError(CredalDecideError):
    def __init__(self, label):
        self._label = label

    def __str__(self):
        return f"operation is only defined for the marginal family ({self._label!r})"


class UnsupportedLossError(CredalDecideError):
    def __init__(self, reason):
        self._reason = reason

    def __str__(self):
        return f"unsupported loss ({self._reason})"


class SizeCapError(CredalDecideError):
    exit_code = 3

    def __init__(self, what, size, cap):
        self._what = what
        self._size = size
        self._cap = cap

    def __str__(self):
        return f"too many {self._what} ({self._size} > {self._cap})"


class GameSolveError(CredalDecideError):
    exit_code = 4

    def __init__(self, status, message):
        self._status = status
        self._message = message

    def __str__(self):
        return f"linear program failed: {self._message} ({self._status})"


class InvalidScenarioError(CredalDecideError):
    def __init__(self, msg):
        self._msg = msg

    def __str__(self):
        return self._msg


class ConfigurationError(CredalDecideError):
    def __init__(self, name, value):
        self._name = name
        self._value = value

    def __str__(self):
        return f"bad value for {self._name} ({self._value!r})"
