"""Univariate polynomials over a tower: division, branching gcd, certificates."""

from fractions import Fraction

import pytest

from puiseux import (
    Split,
    Value,
    adjoin_root,
    bezout_pair,
    egcd_branching,
    poly_divmod,
    root_multiplicity,
    separable_associate,
)
from puiseux.errors import BothZero, NotCoprime, NotMonic
from helpers import Q, upoly


def test_division_is_exact():
    f = upoly(Q, -1, 0, 0, 1)  # Y^3 - 1
    g = upoly(Q, -1, 1)  # Y - 1
    q, r = poly_divmod(f, g)
    assert r.is_zero()
    assert q == upoly(Q, 1, 1, 1)
    assert q * g == f


def test_egcd_bezout_identity_over_the_rationals():
    f = upoly(Q, -1, 0, 1)  # (Y-1)(Y+1)
    g = upoly(Q, -1, 1)
    res = egcd_branching(f, g)
    assert isinstance(res, Value)
    d, u, v, f1, g1 = res.value
    assert d == upoly(Q, -1, 1)
    assert d * f1 == f and d * g1 == g
    assert u * f1 + v * g1 == upoly(Q, 1)
    with pytest.raises(BothZero):
        egcd_branching(upoly(Q, 0), upoly(Q, 0))


def test_egcd_splits_on_a_zero_divisor_leading_coefficient():
    T = adjoin_root(Q, upoly(Q, 0, -1, 1), name="e")  # e^2 = e
    e = T.gen(0)
    f = upoly(T, T.one, e)  # e*Y + 1: unit leading coefficient on one leaf only
    g = upoly(T, T.one, T.one, T.one)
    res = egcd_branching(g, f)
    assert isinstance(res, Split)
    assert sum(p.tower.dimension for p in res.parts) == T.dimension


def test_separable_associate_strips_multiplicity_with_certificate():
    f = upoly(Q, 2, -3, 0, 1)  # Y^3 - 3Y + 2 = (Y-1)^2 (Y+2)
    res = separable_associate(f)
    assert isinstance(res, Value)
    h, (r, s) = res.value
    assert h == upoly(Q, -2, 1, 1)  # (Y-1)(Y+2)
    assert r * h + s * h.derivative() == upoly(Q, 1)
    with pytest.raises(NotMonic):
        separable_associate(upoly(Q, 1, 0, 2))


def test_separable_associate_keeps_separable_inputs():
    f = upoly(Q, -2, 0, 1)
    res = separable_associate(f)
    h, (r, s) = res.value
    assert h == f
    assert r * h + s * h.derivative() == upoly(Q, 1)


def test_bezout_pair_matches_hand_computation():
    g0 = upoly(Q, -1, 1)
    h0 = upoly(Q, 1, 1)
    res = bezout_pair(g0, h0)
    hstar, gstar = res.value
    assert hstar == upoly(Q, Fraction(-1, 2))
    assert gstar == upoly(Q, Fraction(1, 2))
    assert g0 * hstar + h0 * gstar == upoly(Q, 1)
    assert hstar.degree < h0.degree and gstar.degree < g0.degree
    with pytest.raises(NotCoprime):
        bezout_pair(g0, g0)


def test_root_multiplicity_counts_and_leaves_a_unit_cofactor():
    a = Q.scalar(1)
    f = upoly(Q, 1, -2, 1) * upoly(Q, 2, 1)  # (Y-1)^2 (Y+2)
    res = root_multiplicity(f, a)
    s, cofactor = res.value
    assert s == 2
    assert cofactor == upoly(Q, 2, 1)
    assert not cofactor.eval(a).is_zero()
