class DpdomError(Exception):
    pass


class InvalidParameter(DpdomError, ValueError):
    pass


class CapacityError(DpdomError):
    pass


class UnreachableError(DpdomError):
    """A connected-graph quantity was requested on a disconnected graph."""


class NotApplicable(DpdomError):
    """A formula or construction was asked for outside its hypotheses."""


class InvalidInput(DpdomError):
    def __init__(self, message, verdict=None):
        super().__init__(message)
        self.verdict = verdict


class GraphParseError(DpdomError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)
