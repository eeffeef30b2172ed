"""Shared builders for the test suite: canonical inputs and seeded randomness."""

from __future__ import annotations

import random
from fractions import Fraction

from puiseux import Poly, Series, SeriesPoly, Tower, adjoin_root
from puiseux.errors import NotSeparable

Q = Tower.rationals()

# {(Y-degree, X-degree): coefficient} tables for the standard inputs.
QUARTIC = {(4, 0): 1, (2, 0): -3, (1, 1): 1, (0, 2): 1}
SEXTIC = {(6, 0): 1, (0, 6): 1, (4, 2): 3, (2, 4): 3, (2, 2): -4}
SUITE = (
    {(2, 0): 1, (0, 1): -1},  # Y^2 - X
    {(2, 0): 1, (0, 3): -1},  # Y^2 - X^3
    {(3, 0): 1, (0, 2): -1},  # Y^3 - X^2
    QUARTIC,
    SEXTIC,
)


def make_poly(table: dict) -> SeriesPoly:
    """A SeriesPoly over the rationals from a coefficient table."""
    n = max(y for (y, _) in table)
    rows = []
    for i in range(n + 1):
        ydeg = n - i
        col = {x: c for (y, x), c in table.items() if y == ydeg}
        width = max(col) + 1 if col else 1
        rows.append(Series.from_list(Q, [Q.scalar(col.get(k, 0)) for k in range(width)]))
    return SeriesPoly.from_rows(Q, rows)


def upoly(tower: Tower, *coeffs) -> Poly:
    """A univariate Poly from ascending rational (or AlgElem) coefficients."""
    made = []
    for c in coeffs:
        made.append(c if hasattr(c, "owner") else tower.scalar(Fraction(c)))
    return Poly(tower, tuple(made))


# A pool of monic separable polynomials (ascending coefficient tuples) used to
# grow random towers; mixing irreducible, split, and non-field quadratics
# keeps zero divisors common.
_POOL = (
    (-2, 0, 1),          # Y^2 - 2
    (1, 0, 1),           # Y^2 + 1
    (-1, 0, 1),          # Y^2 - 1        (splits: two leaves)
    (0, -1, 1),          # Y^2 - Y        (idempotent generator)
    (-1, -1, 1),         # Y^2 - Y - 1
    (-3, 0, 1),          # Y^2 - 3
    (-2, 0, 0, 1),       # Y^3 - 2
    (0, -1, 0, 1),       # Y^3 - Y        (three rational leaves)
    (Fraction(1, 2), 1),  # Y + 1/2       (degree-1 level)
)


def random_tower(rng: random.Random, max_dim: int = 16) -> Tower:
    """A random tower with dimension <= max_dim, grown from the pool."""
    tower = Q
    while True:
        options = [p for p in _POOL if tower.dimension * (len(p) - 1) <= max_dim]
        if not options or rng.random() < 0.25 and tower.levels:
            return tower
        coeffs = rng.choice(options)
        try:
            tower = adjoin_root(tower, upoly(tower, *coeffs))
        except NotSeparable:
            continue


def random_element(rng: random.Random, tower: Tower, density: float = 0.5):
    """A random element: sparse rational combination of basis monomials."""
    x = tower.zero
    gens = [tower.gen(i) for i in range(len(tower.levels))]
    for exps in tower.basis_exponents():
        if rng.random() > density:
            continue
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if c == 0:
            continue
        term = tower.scalar(c)
        for g, e in zip(gens, exps):
            if e:
                term = term * g**e
        x = x + term
    return x
