"""Slope search, segment steps, and full expansion."""

import dataclasses

import pytest

from puiseux import (
    PuiseuxFactor,
    Series,
    Value,
    expand,
    newton_slope,
    substitute_ramify,
    tschirnhaus_shift,
    verify_product,
)
from puiseux.errors import FuelExhausted, InvariantViolation
from helpers import Q, QUARTIC, make_poly


def test_tschirnhaus_kills_the_subleading_coefficient():
    F = make_poly({(2, 0): 1, (1, 1): 2})  # Y^2 + 2XY
    shifted, shift = tschirnhaus_shift(F)
    # (W - X)^2 + 2X(W - X) = W^2 - X^2
    assert shifted.alpha(1).coeff(1).is_zero()
    assert shifted.alpha(2).coeff(2) == -1
    assert shift.coeff(1) == 1
    G = make_poly({(2, 0): 1, (1, 1): 2, (0, 3): 1})  # ... + X^3
    shifted2, _ = tschirnhaus_shift(G)
    assert shifted2.alpha(2).coeff(2) == -1
    assert shifted2.alpha(2).coeff(3) == 1


def test_newton_slope_reads_the_polygon():
    F = make_poly({(2, 0): 1, (0, 2): -1})  # Y^2 - X^2: slope 1
    res = newton_slope(F, fuel=64)
    assert isinstance(res, Value)
    assert res.value == (1, 1)
    G = make_poly({(2, 0): 1, (0, 3): -1})  # Y^2 - X^3: slope 3/2
    assert newton_slope(G, fuel=64).value == (2, 3)


def test_newton_slope_runs_out_of_fuel_on_degenerate_input():
    F = make_poly({(2, 0): 1})  # Y^2: no unit coefficient anywhere
    with pytest.raises(FuelExhausted):
        newton_slope(F, fuel=8)


def test_expand_trivial_and_single_branch():
    lin = expand(make_poly({(1, 0): 1}))  # Y
    assert len(lin) == 1
    assert lin[0].tower.dimension == 1
    assert len(lin[0].factors) == 1
    assert all(lin[0].factors[0].eta.coeff(i).is_zero() for i in range(6))
    with pytest.raises(InvariantViolation):
        expand(make_poly({(0, 0): 1}))


def test_expand_square_root_branch():
    branches = expand(make_poly({(2, 0): 1, (0, 1): -1}))  # Y^2 - X
    assert len(branches) == 1
    b = branches[0]
    assert b.ramification == 2
    assert b.tower.dimension == 2
    assert len(b.factors) == 2
    g = b.tower.gen(0)
    etas = {1: None, -1: None}
    for pf in b.factors:
        lead = pf.eta.coeff(1)
        assert lead in (g, -g)
        assert all(pf.eta.coeff(i).is_zero() for i in (0, 2, 3, 4, 5))
    assert verify_product(make_poly({(2, 0): 1, (0, 1): -1}), b, 30)


def test_expand_modes_and_fuel():
    F = make_poly(QUARTIC)
    all_branches = expand(F, mode="all")
    first = expand(F, mode="first")
    assert len(first) == 1
    assert len(all_branches) >= len(first)
    with pytest.raises(ValueError):
        expand(F, mode="some")
    with pytest.raises(FuelExhausted):
        expand(F, fuel=1)


def test_verify_product_accepts_and_rejects():
    F = make_poly(QUARTIC)
    for branch in expand(F):
        assert verify_product(F, branch, 30)
    branch = expand(F)[0]
    eta = branch.factors[0].eta
    bump = Series(branch.tower, lambda n, e=eta: e.coeff(n) + (branch.tower.one if n == 5 else branch.tower.zero))
    tampered = dataclasses.replace(
        branch, factors=(PuiseuxFactor(bump),) + branch.factors[1:]
    )
    assert not verify_product(F, tampered, 30)


def test_ramified_branch_verifies_on_the_t_grid():
    F = make_poly({(3, 0): 1, (0, 2): -1})  # Y^3 - X^2
    branches = expand(F)
    assert len(branches) == 1
    b = branches[0]
    assert b.ramification == 3
    assert verify_product(F, b, 30)
    # every expansion solves F(T^m, eta) = 0 through T^29
    Fb = substitute_ramify(F.mapped(b.hom), b.ramification)
    for pf in b.factors:
        acc = Series.from_list(b.tower, [b.tower.zero])
        for i in range(Fb.degree + 1):
            acc = acc * pf.eta + Fb.alpha(i)
        for q in range(30):
            assert acc.coeff(q).is_zero()
