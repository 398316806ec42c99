"""Exception hierarchy shared by the library and the command line."""


class CubeZetaError(Exception):
    """Base class for all errors raised by cubezeta."""


class DomainError(CubeZetaError, ValueError):
    """An argument lies outside the domain of the operation."""


class ResourceLimitError(CubeZetaError):
    """A configured resource bound would be exceeded."""

    def __init__(self, what: str, size: int, limit: int):
        super().__init__(f"{what} of size {size} exceeds the configured limit {limit}")
        self.what = what
        self.size = size
        self.limit = limit


class NotGaloisStableError(CubeZetaError):
    """A product over a root set did not descend to integer coefficients.

    This means the root set was not closed under the Galois action.
    """


class InvariantViolation(CubeZetaError, ArithmeticError):
    """An exact computation produced something that must not happen."""


class VerificationFailure(CubeZetaError):
    """One or more hard checks of a verification suite failed."""

    def __init__(self, suite: str, failed: int):
        super().__init__(f"verification suite '{suite}' failed {failed} check(s)")
        self.suite = suite
        self.failed = failed
