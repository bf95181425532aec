"""Exception types shared across the package.

The CLI maps these onto exit codes: parameter errors -> 2, input parse
errors -> 3, numerical non-convergence -> 4.
"""


class ParameterError(ValueError):
    """An argument or configuration value is out of its valid range."""


class ParseError(ValueError):
    """An input file is malformed; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ConvergenceError(RuntimeError):
    """An iteration failed to reach its tolerance; carries the final residual."""

    def __init__(self, message: str, residual: float):
        self.residual = residual
        super().__init__(message)
