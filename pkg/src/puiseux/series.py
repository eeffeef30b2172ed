"""Lazy formal power series over a tower, and Y-polynomials with series coefficients.

A :class:`Series` is a memoized coefficient function; arithmetic builds a
DAG of closures, so any finite prefix is computable on demand and all
coefficients are exact tower elements.  ``known_zero_below`` is a certified
lower bound on the order (coefficients below it are zero by construction),
which keeps Cauchy products from scanning dead ranges.

A :class:`SeriesPoly` stores the coefficients of Y^n, Y^{n-1}, ..., Y^0 in
that order (leading first), matching how the factorization driver indexes
them: ``alpha(i)`` is the coefficient of Y^{n-i}.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Optional, Sequence

from .errors import (
    FuelExhausted,
    InvariantViolation,
    NonUnitConstantTerm,
    OwnerMismatch,
    SlopeViolation,
)
from .scalars import RatLike
from .tower import AlgElem, Split, SplitOutcome, Tower, TowerHom, Value, invert_or_split
from .upoly import Poly


class Series:
    """An exact lazy power series with AlgElem coefficients."""

    __slots__ = ("owner", "_fn", "_memo", "known_zero_below")

    def __init__(self, owner: Tower, fn: Callable[[int], AlgElem], known_zero_below: int = 0):
        self.owner = owner
        self._fn = fn
        self._memo = {}
        self.known_zero_below = known_zero_below

    def coeff(self, n: int) -> AlgElem:
        if n < self.known_zero_below:
            return self.owner.zero
        got = self._memo.get(n)
        if got is None:
            got = self._fn(n)
            self._memo[n] = got
        return got

    def prefix(self, n: int) -> list:
        return [self.coeff(i) for i in range(n)]

    # -- constructors ----------------------------------------------------------

    @staticmethod
    def from_list(tower: Tower, values: Sequence) -> "Series":
        elems = tuple(
            v if isinstance(v, AlgElem) else tower.scalar(v) for v in values
        )
        for e in elems:
            if e.owner != tower:
                raise OwnerMismatch("series values must live in the owner tower")
        return Series(tower, lambda n: elems[n] if n < len(elems) else tower.zero)

    @staticmethod
    def zero(tower: Tower) -> "Series":
        return Series(tower, lambda n: tower.zero)

    @staticmethod
    def one(tower: Tower) -> "Series":
        return Series(tower, lambda n: tower.one if n == 0 else tower.zero)

    @staticmethod
    def monomial(tower: Tower, c, k: int) -> "Series":
        ce = c if isinstance(c, AlgElem) else tower.scalar(c)
        return Series(tower, lambda n: ce if n == k else tower.zero, known_zero_below=k)

    # -- arithmetic --------------------------------------------------------------

    def _check(self, other: "Series") -> None:
        if other.owner != self.owner:
            raise OwnerMismatch("series belong to different towers")

    def __add__(self, other: "Series") -> "Series":
        self._check(other)
        return Series(
            self.owner,
            lambda n: self.coeff(n) + other.coeff(n),
            min(self.known_zero_below, other.known_zero_below),
        )

    def __neg__(self) -> "Series":
        return Series(self.owner, lambda n: -self.coeff(n), self.known_zero_below)

    def __sub__(self, other: "Series") -> "Series":
        self._check(other)
        return Series(
            self.owner,
            lambda n: self.coeff(n) - other.coeff(n),
            min(self.known_zero_below, other.known_zero_below),
        )

    def __mul__(self, other: "Series") -> "Series":
        self._check(other)

        def fn(n: int) -> AlgElem:
            acc = self.owner.zero
            lo = self.known_zero_below
            hi = n - other.known_zero_below
            for i in range(lo, hi + 1):
                a = self.coeff(i)
                if a.is_zero():
                    continue
                acc = acc + a * other.coeff(n - i)
            return acc

        return Series(self.owner, fn, self.known_zero_below + other.known_zero_below)

    def scale(self, c: AlgElem) -> "Series":
        if c.owner != self.owner:
            raise OwnerMismatch("scalar belongs to a different tower")
        return Series(self.owner, lambda n: self.coeff(n) * c, self.known_zero_below)

    def scale_int(self, k: int) -> "Series":
        return self.scale(self.owner.scalar(k))

    def shift(self, k: int) -> "Series":
        """Multiply by T^k (k >= 0)."""
        if k == 0:
            return self
        return Series(self.owner, lambda n: self.coeff(n - k), self.known_zero_below + k)

    def mapped(self, hom: TowerHom) -> "Series":
        if hom.source != self.owner:
            raise OwnerMismatch("hom source does not match series owner")
        return Series(hom.target, lambda n: hom(self.coeff(n)), self.known_zero_below)

    def ramify(self, m: int) -> "Series":
        """Substitute T -> T^m."""
        if m == 1:
            return self
        return Series(
            self.owner,
            lambda n: self.coeff(n // m) if n % m == 0 else self.owner.zero,
            self.known_zero_below * m,
        )


def series_inverse(s: Series) -> SplitOutcome:
    """Multiplicative inverse: Value(Series) or a Split of the tower.

    Raises NonUnitConstantTerm when the constant coefficient is zero; a
    zero-divisor constant coefficient splits the tower instead, and the
    caller re-runs on each part with the mapped series.
    """
    res = invert_or_split(s.coeff(0))
    if isinstance(res, Split):
        return res
    if res.value is None:
        raise NonUnitConstantTerm("series has no inverse: constant term is zero")
    c0i = res.value
    owner = s.owner
    holder = []

    def fn(n: int) -> AlgElem:
        if n == 0:
            return c0i
        acc = owner.zero
        for k in range(max(1, s.known_zero_below), n + 1):
            a = s.coeff(k)
            if a.is_zero():
                continue
            acc = acc + a * holder[0].coeff(n - k)
        return -(c0i * acc)

    inv = Series(owner, fn)
    holder.append(inv)
    return Value(inv)


# ---------------------------------------------------------------------------
# Polynomials in Y with series coefficients


@dataclass(frozen=True)
class SeriesPoly:
    """Monic-by-construction polynomial in Y over Series.

    ``ycoeffs`` is leading-first: ``ycoeffs[i]`` (= ``alpha(i)``) is the
    coefficient of Y^(degree - i).  Constructors and transforms preserve the
    leading coefficient exactly, so monicity is a structural property of how
    the object was built, checked only on the constant term of the leading
    series.
    """

    owner: Tower
    ycoeffs: tuple

    @property
    def degree(self) -> int:
        return len(self.ycoeffs) - 1

    def alpha(self, i: int) -> Series:
        return self.ycoeffs[i]

    def is_monic(self) -> bool:
        return self.degree >= 0 and self.ycoeffs[0].coeff(0).is_one()

    @staticmethod
    def from_rows(tower: Tower, rows: Sequence[Series]) -> "SeriesPoly":
        for r in rows:
            if r.owner != tower:
                raise OwnerMismatch("coefficient series must live in the owner tower")
        return SeriesPoly(tower, tuple(rows))

    # -- views -------------------------------------------------------------------

    def eval_x0(self) -> Poly:
        """The fiber polynomial F(0, Z) as a plain Poly (ascending)."""
        n = self.degree
        return Poly(self.owner, tuple(self.ycoeffs[n - k].coeff(0) for k in range(n + 1)))

    def x_coefficient(self, q: int) -> Poly:
        """The T^q slice of all coefficients, as a plain Poly (ascending)."""
        n = self.degree
        return Poly(self.owner, tuple(self.ycoeffs[n - k].coeff(q) for k in range(n + 1)))

    # -- transforms ----------------------------------------------------------------

    def shift_y(self, s: Series) -> "SeriesPoly":
        """Substitute Y = W + s, returning the polynomial in W."""
        n = self.degree
        asc = list(reversed(self.ycoeffs))  # asc[k] = coeff of Y^k
        spow = [Series.one(self.owner)]
        for _ in range(n):
            spow.append(spow[-1] * s)
        new_asc = []
        for t in range(n + 1):
            acc = Series.zero(self.owner)
            for k in range(t, n + 1):
                acc = acc + asc[k].scale_int(comb(k, t)) * spow[k - t]
            new_asc.append(acc)
        return SeriesPoly(self.owner, tuple(reversed(new_asc)))

    def product(self, other: "SeriesPoly") -> "SeriesPoly":
        if other.owner != self.owner:
            raise OwnerMismatch("factors belong to different towers")
        a, b = self.ycoeffs, other.ycoeffs
        out = [Series.zero(self.owner) for _ in range(len(a) + len(b) - 1)]
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return SeriesPoly(self.owner, tuple(out))

    def mapped(self, hom: TowerHom) -> "SeriesPoly":
        return SeriesPoly(hom.target, tuple(c.mapped(hom) for c in self.ycoeffs))

    def eval_series(self, s: Series) -> Series:
        """Evaluate at Y = s (a Series over the same tower)."""
        if s.owner != self.owner:
            raise OwnerMismatch("evaluation point belongs to a different tower")
        out = Series.zero(self.owner)
        for c in self.ycoeffs:
            out = out * s + c
        return out


def substitute_ramify(F: SeriesPoly, m: int) -> "SeriesPoly":
    """Substitute X -> T^m in every coefficient."""
    if m == 1:
        return F
    return SeriesPoly(F.owner, tuple(c.ramify(m) for c in F.ycoeffs))


def segment_substitute(F: SeriesPoly, m: int, p: int) -> SeriesPoly:
    """Normalize along a slope: X -> T^m, Y -> T^p * Z, divided by T^(n*p).

    The result's alpha(i) has T-coefficient j equal to the original
    alpha(i)'s coefficient at (j + i*p)/m when that is an integer, else 0.
    Coefficients that would land at negative T-orders are checked eagerly:
    any nonzero one means the slope p/m does not bound the polygon from
    below, which is a SlopeViolation.
    """
    owner = F.owner
    new_rows = []
    for i, row in enumerate(F.ycoeffs):
        bound = -((-i * p) // m)  # ceil(i*p / m)
        for j in range(bound):
            if m * j < i * p and not row.coeff(j).is_zero():
                raise SlopeViolation(
                    f"coefficient of Y^{F.degree - i} has a term below slope {p}/{m}"
                )
        new_rows.append(_segment_series(row, m, p, i, owner))
    return SeriesPoly(owner, tuple(new_rows))


def _segment_series(row: Series, m: int, p: int, i: int, owner: Tower) -> Series:
    def fn(j: int) -> AlgElem:
        tot = j + i * p
        if tot % m:
            return owner.zero
        return row.coeff(tot // m)

    return Series(owner, fn, max(0, m * row.known_zero_below - i * p))


def unsegment_factor(G: SeriesPoly, p: int) -> SeriesPoly:
    """Undo the Y-side of a segment substitution on a factor of degree l:
    the coefficient of Z^(l-i) is multiplied by T^(i*p), so the factor again
    divides the unsegmented polynomial.  The leading coefficient is untouched.
    """
    return SeriesPoly(
        G.owner, tuple(c.shift(i * p) for i, c in enumerate(G.ycoeffs))
    )


def first_unit_coefficient(F: SeriesPoly, fuel: int) -> SplitOutcome:
    """Scan T-orders for the first unit among alpha(n), alpha(n-1).

    Returns Value((i, l)): the index i in {n, n-1} and T-order l of the first
    coefficient that is a unit, scanning l upward and testing alpha(n) before
    alpha(n-1).  A zero-divisor coefficient yields a Split.  Scanning past
    ``fuel`` T-orders raises FuelExhausted.
    """
    n = F.degree
    if n < 2:
        raise InvariantViolation("unit scan requires degree >= 2")
    for l in range(fuel + 1):
        for i in (n, n - 1):
            res = invert_or_split(F.alpha(i).coeff(l))
            if isinstance(res, Split):
                return res
            if res.value is not None:
                return Value((i, l))
    raise FuelExhausted(fuel)
