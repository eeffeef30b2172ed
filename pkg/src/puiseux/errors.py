"""Exception types shared across the package.

Every library-specific failure derives from :class:`PuiseuxError`, so callers
can catch one base class.  ``DivisionByZero`` is an alias for the builtin
``ZeroDivisionError`` (exact rational inversion of zero raises it natively).
"""

from __future__ import annotations

DivisionByZero = ZeroDivisionError


class PuiseuxError(Exception):
    """Base class for all errors raised by this package."""


class OwnerMismatch(PuiseuxError):
    """Operands belong to different towers."""


class NotMonic(PuiseuxError):
    """A polynomial required to be monic is not."""


class Constant(PuiseuxError):
    """A polynomial required to be non-constant is constant."""


class BothZero(PuiseuxError):
    """gcd of (0, 0) requested."""


class NotSeparable(PuiseuxError):
    """No Bezout certificate r*p + s*p' = 1 exists on this tower."""


class NotIdempotent(PuiseuxError):
    """Element does not satisfy e*e = e."""


class TrivialIdempotent(PuiseuxError):
    """Idempotent is 0 or 1, so it induces no proper decomposition."""


class NotCoprime(PuiseuxError):
    """Polynomials required to be coprime share a non-constant divisor."""


class NonUnitConstantTerm(PuiseuxError):
    """Series inversion needs an invertible constant coefficient."""


class SlopeViolation(PuiseuxError):
    """A coefficient that the slope condition requires to vanish is nonzero."""


class FuelExhausted(PuiseuxError):
    """Bounded search ran out of fuel.

    Attributes:
        fuel: the exhausted budget.
    """

    def __init__(self, fuel: int, message: str | None = None):
        self.fuel = fuel
        super().__init__(message or f"search exhausted its fuel budget of {fuel}")


class InvariantViolation(PuiseuxError):
    """An internal invariant failed; indicates a bug."""


class PreconditionViolation(PuiseuxError):
    """Inputs violate a documented precondition."""


class NotEndomorphism(PuiseuxError):
    """The map is not a homomorphism from the algebra to itself."""


class DoNotSplitEachOther(PuiseuxError):
    """The two algebras do not mutually split, so no common root algebra."""


class NotSeparableInput(PuiseuxError):
    """Input polynomial has a repeated factor in Y."""


class NotMonicInY(PuiseuxError):
    """Input polynomial's leading Y-coefficient is not 1."""


class ParseError(PuiseuxError):
    """Input text could not be parsed.

    Attributes:
        position: 0-based index into the source text.
    """

    def __init__(self, position: int, message: str):
        self.position = position
        super().__init__(f"parse error at position {position}: {message}")
