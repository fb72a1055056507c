"""
Exception hierarchy shared by every package.

Anything raised on purpose derives from MonodromyError, so callers (and the CLI)
can tell domain failures apart from programming errors.
"""


class MonodromyError(ValueError):
    """Base class for domain failures"""


class GenusMismatchError(MonodromyError):
    """Two values built over different genus contexts were combined"""


class LetterRangeError(MonodromyError):
    """Generator index outside the range allowed by the genus"""


class MoveError(MonodromyError):
    """A rewriting move does not match the system (or chart) at its site"""

    def __init__(self, message: str, position: int = -1):
        super().__init__(message)
        self.position = position


class BudgetExhausted(MonodromyError):
    """A bounded search or construction ran out of budget"""

    def __init__(self, message: str, spent: int = 0):
        super().__init__(message)
        self.spent = spent


class HypothesisError(MonodromyError):
    """Input violates the hypothesis an operation is stated under"""


class DivisibilityError(MonodromyError):
    """E(f) fails the divisibility every genuine fibration satisfies"""


class ChartError(MonodromyError):
    """Malformed chart or unsupported chart construction"""


class SchemaError(MonodromyError):
    """Document parsed as JSON but does not describe a valid object"""
