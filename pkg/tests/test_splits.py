"""Splitting witnesses, homomorphism families, and pair normalization."""

from fractions import Fraction

import pytest

from puiseux import (
    AutomorphismCertificate,
    TowerHom,
    adjoin_root,
    endo_decompose,
    enumerate_homs,
    expand,
    harvest_root_hints,
    normalize_pair,
    splits_check,
)
from puiseux.errors import DoNotSplitEachOther
from helpers import Q, QUARTIC, make_poly, upoly


def two_leaves():
    return adjoin_root(Q, upoly(Q, 0, -1, 1), name="e")  # e^2 = e


def sqrt_tower(n, name):
    return adjoin_root(Q, upoly(Q, -n, 0, 1), name=name)


def test_everything_splits_the_rationals():
    for tower in (Q, two_leaves(), sqrt_tower(2, "a")):
        witness = splits_check(tower, Q)
        witness.validate()
        assert len(enumerate_homs(witness)) == 1


def test_split_towers_split_themselves():
    A = two_leaves()
    witness = splits_check(A, A)
    witness.validate()
    homs = enumerate_homs(witness)
    assert len(homs) == A.dimension
    ident = TowerHom.identity(A)
    assert any(h.images == ident.images for h in homs)


def test_fields_do_not_split_unrelated_fields():
    A = sqrt_tower(2, "a")
    B = sqrt_tower(3, "b")
    assert splits_check(A, B) is None
    assert splits_check(B, A) is None
    with pytest.raises(DoNotSplitEachOther):
        normalize_pair(A, B)


def test_normalize_small_pairs():
    A = two_leaves()
    assert normalize_pair(Q, Q)[1:] == (1, 1)
    R, n, m = normalize_pair(A, Q)
    assert (R.dimension, n, m) == (1, 2, 1)
    R, n, m = normalize_pair(Q, A)
    assert (R.dimension, n, m) == (1, 1, 2)
    R, n, m = normalize_pair(A, A)
    assert (R.dimension, n, m) == (2, 1, 1)


def test_normalize_conjugate_presentations_through_hints():
    # x^2 = 2 and y^2 = 8 generate the same field (y = 2x), but the root
    # 2x of Y^2 - 8 is not a generator, a harvested value, or rational, so
    # the candidate-bounded search stays undecided without hints.
    A = sqrt_tower(2, "x")
    B = sqrt_tower(8, "y")
    assert splits_check(A, B) is None
    x, y = A.gen(0), B.gen(0)
    assert splits_check(A, B, hints=[x + x]) is not None
    R, n, m = normalize_pair(A, B, [x + x], [y * B.scalar(Fraction(1, 2))])
    assert (R.dimension, n, m) == (2, 1, 1)


def test_endo_decompose_cuts_along_a_projection_kernel():
    A = two_leaves()
    e = A.gen(0)
    # x -> (value at the e=1 leaf) extended constantly: an endomorphism
    # with kernel (1-e); its image algebra is one leaf.
    pi = TowerHom(A, A, [A.one])
    assert pi.is_valid()
    e, parts = endo_decompose(A, pi)
    assert e * e == e
    assert sorted(p.tower.dimension for p in parts) == [1, 1]
    assert sum(p.tower.dimension for p in parts) == A.dimension
    ident = TowerHom.identity(A)
    cert = endo_decompose(A, ident)
    assert isinstance(cert, AutomorphismCertificate)
    assert cert.inverse.compose(ident).images == ident.images


def test_witnesses_on_the_quartic_expansion():
    branches = expand(make_poly(QUARTIC))
    towers = [b.tower for b in branches]
    hints = [harvest_root_hints(b, depth=8) for b in branches]
    for i, a in enumerate(towers):
        for j, b in enumerate(towers):
            witness = splits_check(a, b, hints[i])
            witness.validate()
            assert len(enumerate_homs(witness)) == b.dimension
    for i in range(len(towers)):
        for j in range(len(towers)):
            R, n, m = normalize_pair(towers[i], towers[j], hints[i], hints[j])
            assert (R.dimension, n, m) == (4, 1, 1)


def test_hints_are_elements_of_the_branch_tower():
    branches = expand(make_poly(QUARTIC))
    for b in branches:
        for h in harvest_root_hints(b, depth=6):
            assert h.owner == b.tower
