"""Exact rational scalars.

The base field is Q.  Values are arbitrary-precision rationals kept in
canonical form (positive denominator, gcd(|num|, den) = 1).  gmpy2's ``mpq``
is used when available, with ``fractions.Fraction`` as a pure-Python
fallback; both satisfy the canonical-form and hashing contracts.

The textual form is ``"p/q"`` with ``/q`` omitted when the denominator is 1;
this form is used verbatim by the CLI and JSON emitters.
"""

from __future__ import annotations

from typing import Union

try:
    from gmpy2 import mpq as _mpq

    BACKEND = "gmpy2"
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as _mpq

    BACKEND = "fractions"

Rat = _mpq
RatLike = Union[Rat, int]


def rat(num: RatLike = 0, den: RatLike = 1) -> Rat:
    """Build a rational in canonical form."""
    return _mpq(num, den)


ZERO = rat(0)
ONE = rat(1)


def rat_add(a: Rat, b: Rat) -> Rat:
    return a + b


def rat_mul(a: Rat, b: Rat) -> Rat:
    return a * b


def rat_neg(a: Rat) -> Rat:
    return -a


def rat_inv(a: Rat) -> Rat:
    """Multiplicative inverse; raises DivisionByZero on zero input."""
    return 1 / _mpq(a)


def rat_is_zero(a: Rat) -> bool:
    return a == 0


def rat_to_str(a: Rat) -> str:
    """Canonical text form "p/q", with "/q" omitted when q = 1."""
    return str(_mpq(a))


def rat_from_str(text: str) -> Rat:
    """Parse "p/q" or "p" (optional sign on p)."""
    return _mpq(text.strip())
