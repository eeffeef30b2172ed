"""Hensel lifting of coprime fiber factorizations."""

from fractions import Fraction

import pytest

from puiseux import bezout_pair, hensel_lift
from puiseux.errors import PreconditionViolation
from helpers import Q, make_poly, upoly


def lift_sqrt_example():
    # Y^2 - 1 - X with fiber (Y-1)(Y+1); the Y+... factor carries sqrt(1+X).
    F = make_poly({(2, 0): 1, (0, 0): -1, (0, 1): -1})
    g0 = upoly(Q, -1, 1)
    h0 = upoly(Q, 1, 1)
    hstar, gstar = bezout_pair(g0, h0).value
    return F, hensel_lift(F, g0, h0, hstar, gstar)


def test_lifted_factors_restrict_to_the_seeds():
    _, (G, H) = lift_sqrt_example()
    assert G.degree == 1 and H.degree == 1
    assert G.alpha(0).coeff(0).is_one()
    assert H.alpha(0).coeff(0).is_one()
    assert G.alpha(1).coeff(0) == -1
    assert H.alpha(1).coeff(0) == 1


def test_lifted_root_is_the_binomial_series():
    _, (G, _) = lift_sqrt_example()
    # G = Y - sqrt(1+X); compare against the binomial expansion.
    expected = [
        Fraction(1),
        Fraction(1, 2),
        Fraction(-1, 8),
        Fraction(1, 16),
        Fraction(-5, 128),
        Fraction(7, 256),
        Fraction(-21, 1024),
    ]
    root = G.alpha(1)
    for i, c in enumerate(expected):
        assert root.coeff(i) == Q.scalar(-c)


def test_product_identity_holds_through_high_order():
    F, (G, H) = lift_sqrt_example()
    P = G.product(H)
    for i in range(F.degree + 1):
        for q in range(40):
            assert P.alpha(i).coeff(q) == F.alpha(i).coeff(q)


def test_preconditions_are_enforced():
    F = make_poly({(2, 0): 1, (0, 0): -1, (0, 1): -1})
    g0 = upoly(Q, -1, 1)
    h0 = upoly(Q, 1, 1)
    hstar, gstar = bezout_pair(g0, h0).value
    with pytest.raises(PreconditionViolation):
        hensel_lift(F, g0, g0, hstar, gstar)  # wrong fiber product
    with pytest.raises(PreconditionViolation):
        hensel_lift(F, g0, h0, upoly(Q, 0, 1), gstar)  # cofactor degree too big
