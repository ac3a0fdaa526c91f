"""
Error types raised by the sign engine.

Every error is a ValueError so callers that only care about "bad input"
can keep catching that. The `rule` attribute names the violated rule and
is what the CLI and HTTP layers print.
"""
from typing import Optional, Tuple, Any


class SurrealError(ValueError):
    """Base class for every domain error of the engine."""

    rule: str = "surreal"

    def __init__(self, message: str, rule: Optional[str] = None):
        super().__init__(message)
        if rule is not None:
            self.rule = rule


class NotationError(SurrealError):
    """Malformed ordinal, surreal or set notation."""

    rule = "syntax"

    def __init__(self, message: str, text: str = "", position: int = 0):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


class ZeroRunError(NotationError):
    """A run count evaluated to the ordinal 0."""

    rule = "zero-run"


class UnderflowError(SurrealError):
    """Left subtraction a - b asked for with a > b."""

    rule = "underflow"


class TooShortError(SurrealError):
    """Prolongment to a length below the current one."""

    rule = "too-short"


class NotSeparatedError(SurrealError):
    """The hypothesis S < T does not hold."""

    rule = "not-separated"

    def __init__(self, message: str, witness: Optional[Tuple[Any, Any]] = None):
        super().__init__(message)
        self.witness = witness


class MinusTailError(SurrealError):
    """A value ending in minuses is never a sup* value."""

    rule = "minus-tail"


class CofinalityGapError(SurrealError):
    """A limit length not of the form delta + w: no omega-chain witness."""

    rule = "cofinality-gap"


class NoneFoundError(SurrealError):
    """Brute-force search bound too small to hold a separator."""

    rule = "none-found"


class OracleBoundError(SurrealError):
    """A brute-force request beyond the oracle's length bound."""

    rule = "oracle-bound"
