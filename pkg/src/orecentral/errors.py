"""Exception types raised by the engine and the front-end."""


class OreError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class AlgebraMismatchError(OreError, ValueError):
    pass


class DomainError(OreError):
    """The algebra has s = deg_y(sigma(y)) = 0, so S has zero divisors."""


class DegenerateInputError(OreError, ValueError):
    pass


class NonCommutingError(OreError):
    pass


class BoundExhaustedError(OreError):
    pass


class BudgetExhaustedError(OreError):
    pass


class ParseError(ValueError):
    """Syntax error in an expression; ``offset`` is a byte offset into the source."""

    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.message = message
        self.offset = offset


class ConfigError(ValueError):
    pass
