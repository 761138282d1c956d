"""
Exception hierarchy for the Higher-Order Pattern Miner.

Every data or constraint failure derives from MiningError so the
command-line layer can map it to a single exit status.
"""


class MiningError(Exception):
    """Base class for data, measure and constraint failures."""


class ConfigurationError(MiningError, ValueError):
    """A configuration value is missing or out of range."""


class LoadError(MiningError):
    """A basket file could not be decoded."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class UnknownItemError(MiningError, KeyError):
    """An item label or id is not part of the database."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown item"


class UndefinedSupportError(MiningError):
    """Support was requested on a database without transactions."""


class NoOccurrenceError(MiningError):
    """Closure was requested for a pattern that occurs nowhere."""


class ArityError(MiningError):
    """A measure was applied to a pattern of unsupported length."""


class MeasureArgumentError(MiningError):
    """Dependence arguments are empty or overlap."""


class UnknownMeasureError(MiningError):
    """A measure name is not registered."""


class MiningParameterError(MiningError, ValueError):
    """Miner thresholds violate their documented ranges."""


class EnumerationCapError(MiningError):
    """A pattern is too long for sub-pattern enumeration."""

    def __init__(self, length: int, cap: int):
        super().__init__(
            f"pattern has {length} items but the enumeration cap is {cap}; "
            f"raise ENUMERATION_CAP to at least {length}"
        )
        self.required_cap = length
        self.cap = cap


class PatternSpaceGuardError(MiningError):
    """pattern_space_size was asked for an exponent above the guard."""


class ConstraintError(MiningError):
    """Base class for constraint language failures."""


class ConstraintSyntaxError(ConstraintError):
    """A constraint could not be parsed."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at column {position + 1})")
        self.position = position


class LexicalError(ConstraintSyntaxError):
    """An unexpected character was found while tokenising."""


class UnboundVariableError(ConstraintSyntaxError):
    """A set variable is used outside any quantifier binding it."""

    def __init__(self, message: str, position: int, name: str = ""):
        super().__init__(message, position)
        self.name = name


class ArityMismatchError(ConstraintSyntaxError):
    """A measure call has the wrong number of arguments."""


class WitnessShapeError(ConstraintError):
    """The formula cannot be used to extract satisfying sub-patterns."""
