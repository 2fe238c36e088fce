"""Exception types shared across the library.

Exit-code mapping used by the CLI: ValidationError/ConfigError -> 2,
NumericError -> 3.
"""


class EmogaitError(Exception):
    """Base class for all library errors."""


class DimensionError(EmogaitError):
    """Shapes of operands are incompatible with the requested operation."""


class ValidationError(EmogaitError):
    """Input data or arguments violate a documented precondition."""


class ConfigError(EmogaitError):
    """A configuration value is missing, malformed, or inconsistent."""


class NumericError(EmogaitError):
    """A non-finite value appeared where the computation cannot proceed."""


class ContractError(EmogaitError):
    """An API contract was violated (e.g. backward from a non-scalar)."""
