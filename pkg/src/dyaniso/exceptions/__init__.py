class DyAnisoError(Exception):
    """Base exception for dyaniso errors."""

    pass


class ConfigurationError(DyAnisoError):
    """Exception raised for unknown units or an invalid run configuration."""

    pass


class DomainError(DyAnisoError, ValueError):
    """Exception raised when an argument lies outside the physical domain."""

    pass


class LineListParseError(DyAnisoError, ValueError):
    """Exception raised for a malformed row in a transition line list."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class LineListValidationError(DyAnisoError, ValueError):
    """Exception raised when a parsed line violates a physical constraint."""

    def __init__(self, message: str, line_number: int = None):
        prefix = f"line {line_number}: " if line_number is not None else ""
        super().__init__(f"{prefix}{message}")
        self.line_number = line_number


class NoCrossingError(DyAnisoError):
    """Exception raised when two scale curves do not cross inside a bracket."""

    pass


class NoBarrierError(DyAnisoError, ValueError):
    """Exception raised when a barrier is requested for the s-wave."""

    pass


class ResolutionError(DyAnisoError):
    """Exception raised when the radial grid does not resolve the local wavelength."""

    pass


class MatchingError(DyAnisoError):
    """Exception raised when the asymptotic matching radius is not free of the potential."""

    pass


class ComputationError(DyAnisoError):
    """Exception raised when a numerical pipeline step fails."""

    pass
