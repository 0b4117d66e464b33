"""Exception hierarchy shared by the kernel, the engine and the CLI."""


class LoopCohomError(Exception):
    pass


class SpecError(LoopCohomError, ValueError):
    """A structurally invalid algebra or complex description."""


class ValidationError(SpecError):
    """Raised when check_differential rejects a complex; carries the report."""

    def __init__(self, report):
        self.report = report
        super().__init__(str(report))


class UnvalidatedSpecError(LoopCohomError):
    pass


class DegreeOutOfRange(LoopCohomError, ValueError):
    pass


class ResourceCapExceeded(LoopCohomError):
    pass


class ParseError(LoopCohomError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class InconsistencyError(LoopCohomError, AssertionError):
    """Internal invariant broken; never expected for validated input."""
