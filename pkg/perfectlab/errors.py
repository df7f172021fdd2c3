"""Exceptions raised by PerfectLab."""


class PerfectLabError(Exception):
    """Base class for all PerfectLab errors."""


class InvalidEdgeError(PerfectLabError, ValueError):
    def __init__(self, u: int, v: int, n: int):
        super().__init__(f"edge ({u}, {v}) out of range for n={n}")
        self.u, self.v, self.n = u, v, n


class SelfLoopError(PerfectLabError, ValueError):
    def __init__(self, v: int):
        super().__init__(f"self-loop at vertex {v}")
        self.v = v


class GraphParseError(PerfectLabError, ValueError):
    """Malformed graph6 or edge-list input. `line` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
        self.line = line


class SizeLimitError(PerfectLabError):
    def __init__(self, check: str, n: int, cap: int):
        super().__init__(f"{check} supports at most {cap} vertices, got n={n}")
        self.check, self.n, self.cap = check, n, cap


class InvalidArgumentError(PerfectLabError, ValueError):
    pass


class InconsistencyError(PerfectLabError):
    """Two independent routes disagreed, or a proven inclusion was violated."""
