"""Univariate polynomials over a tower, with split-aware gcd machinery.

Polynomials are dense, lowest-degree-first, and trimmed; the zero polynomial
has an empty coefficient tuple.  Operations that must invert coefficients
(gcds and everything built on them) return :class:`~puiseux.tower.Split`
when they hit a zero divisor, and the caller re-runs on each part.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    Constant,
    InvariantViolation,
    NotCoprime,
    NotMonic,
    OwnerMismatch,
)
from .scalars import RatLike
from .tower import (
    AlgElem,
    Split,
    SplitOutcome,
    Tower,
    Value,
    _egcd_lists,
    _ldivmod,
    _leval,
    _lmul,
    _ltrim,
    invert_or_split,
)


@dataclass(frozen=True)
class Poly:
    """A univariate polynomial with AlgElem coefficients (dense, ascending)."""

    owner: Tower
    coeffs: tuple

    def __post_init__(self):
        cs = list(self.coeffs)
        for c in cs:
            if not isinstance(c, AlgElem) or c.owner != self.owner:
                raise OwnerMismatch("all coefficients must live in the owner tower")
        object.__setattr__(self, "coeffs", tuple(_ltrim(cs)))

    # -- constructors --------------------------------------------------------

    @staticmethod
    def from_scalars(tower: Tower, scalars: Sequence[RatLike]) -> "Poly":
        return Poly(tower, tuple(tower.scalar(s) for s in scalars))

    @staticmethod
    def zero(tower: Tower) -> "Poly":
        return Poly(tower, ())

    @staticmethod
    def one(tower: Tower) -> "Poly":
        return Poly(tower, (tower.one,))

    @staticmethod
    def variable(tower: Tower) -> "Poly":
        return Poly(tower, (tower.zero, tower.one))

    # -- shape ---------------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1].is_one()

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0].is_one()

    def coeff(self, k: int) -> AlgElem:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.owner.zero

    def leading(self) -> AlgElem:
        if not self.coeffs:
            raise InvariantViolation("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    # -- arithmetic ------------------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if other.owner != self.owner:
            raise OwnerMismatch("polynomials belong to different towers")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(self.owner, tuple(out))

    def __neg__(self) -> "Poly":
        return Poly(self.owner, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        return Poly(self.owner, tuple(_lmul(list(self.coeffs), list(other.coeffs), self.owner)))

    def scale(self, s: AlgElem) -> "Poly":
        return Poly(self.owner, tuple(c * s for c in self.coeffs))

    def shift_arg(self, a: AlgElem) -> "Poly":
        """The polynomial q(Z) = self(Z + a)."""
        out = Poly.zero(self.owner)
        zpa = Poly(self.owner, (a, self.owner.one))
        for c in reversed(self.coeffs):
            out = out * zpa + Poly(self.owner, (c,))
        return out

    def eval(self, x: AlgElem) -> AlgElem:
        return _leval(list(self.coeffs), x, self.owner)

    def derivative(self) -> "Poly":
        return Poly(self.owner, tuple(c * i for i, c in enumerate(self.coeffs))[1:])

    def mapped(self, hom) -> "Poly":
        """Apply a tower hom coefficientwise."""
        return Poly(hom.target, tuple(hom(c) for c in self.coeffs))

    # -- rendering -------------------------------------------------------------

    def render(self, var: str = "Y") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            mono = var if k == 1 else (f"{var}^{k}" if k else "")
            cs = c.render()
            if not mono:
                head = cs
            elif c.is_one():
                head = mono
            elif cs == "-1":
                head = f"-{mono}"
            elif c.is_rational():
                head = f"{cs}*{mono}"
            else:
                head = f"({cs})*{mono}"
            parts.append(head)
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self):
        return self.render()


def poly_divmod(f: Poly, d: Poly) -> tuple:
    """Quotient and remainder by a monic divisor (exact; no inversions)."""
    f._check(d)
    if not d.is_monic():
        raise NotMonic("poly_divmod requires a monic divisor")
    q, r = _ldivmod(list(f.coeffs), list(d.coeffs), f.owner)
    return Poly(f.owner, tuple(q)), Poly(f.owner, tuple(r))


def egcd_branching(f: Poly, g: Poly) -> SplitOutcome:
    """Extended gcd with cofactors: Value((d, u, v, f1, g1)) or Split.

    On success, d is monic, f = d*f1, g = d*g1, and u*f1 + v*g1 = 1 exactly
    (the last identity follows from u*f + v*g = d because a monic polynomial
    is never a zero divisor).  Raises BothZero on gcd(0, 0).
    """
    f._check(g)
    res = _egcd_lists(f.owner, list(f.coeffs), list(g.coeffs))
    if res[0] == "split":
        return res[1]
    d, u, v = res[1]
    dp = Poly(f.owner, tuple(d))
    f1, rf = poly_divmod(f, dp)
    g1, rg = poly_divmod(g, dp)
    if not rf.is_zero() or not rg.is_zero():
        raise InvariantViolation("gcd does not divide its inputs")
    return Value((dp, Poly(f.owner, tuple(u)), Poly(f.owner, tuple(v)), f1, g1))


def separable_associate(f: Poly) -> SplitOutcome:
    """The separable polynomial with the same roots, plus its certificate.

    For monic non-constant f, returns Value((h, (r, s))) where h = f / gcd(f, f')
    is monic with the same roots and r*h + s*h' = 1, or a Split to re-run on.
    """
    if not f.is_monic():
        raise NotMonic("separable_associate requires a monic polynomial")
    if f.degree < 1:
        raise Constant("separable_associate requires a non-constant polynomial")
    res = egcd_branching(f, f.derivative())
    if isinstance(res, Split):
        return res
    _, _, _, h, _ = res.value
    res2 = egcd_branching(h, h.derivative())
    if isinstance(res2, Split):
        return res2
    d2, u2, v2, _, _ = res2.value
    if not d2.is_one():
        raise InvariantViolation("the separable associate is not separable")
    return Value((h, (u2, v2)))


def root_multiplicity(q: Poly, a: AlgElem) -> SplitOutcome:
    """Multiplicity s of the root a in q, with the cofactor L = q / (Z-a)^s.

    Repeated synthetic division; each remainder is tested with
    invert_or_split, so a remainder that is a zero divisor yields a Split.
    L(a) is a unit on return.  A monic q equal to a full power (Z-a)^deg with
    deg >= 2 leaves no unit cofactor and violates the caller's separability
    assumptions, so it raises InvariantViolation.
    """
    if a.owner != q.owner:
        raise OwnerMismatch("root must live in the polynomial's tower")
    tower = q.owner
    cur = q
    s = 0
    while True:
        if cur.degree < 1:
            if cur.is_one():
                if s >= 2:
                    raise InvariantViolation(
                        "root exhausts the polynomial with multiplicity >= 2"
                    )
                return Value((s, cur))
            raise InvariantViolation("division chain ended on a non-one constant")
        val = cur.eval(a)
        res = invert_or_split(val)
        if isinstance(res, Split):
            return res
        if res.value is not None:
            return Value((s, cur))
        lin = Poly(tower, (-a, tower.one))
        cur, rem = poly_divmod(cur, lin)
        if not rem.is_zero():
            raise InvariantViolation("zero evaluation but non-zero division remainder")
        s += 1


def bezout_pair(G0: Poly, H0: Poly) -> SplitOutcome:
    """Cofactors (Hstar, Gstar) with G0*Hstar + H0*Gstar = 1 and tight degrees.

    Requires G0 and H0 coprime (NotCoprime otherwise); deg Hstar < deg H0
    and deg Gstar < deg G0, which is what quadratic-free lifting needs.
    """
    res = egcd_branching(G0, H0)
    if isinstance(res, Split):
        return res
    d, u, v, _, _ = res.value
    if d.degree > 0:
        raise NotCoprime("the factor seeds share a non-constant divisor")
    if H0.is_monic():
        quot, hstar = poly_divmod(u, H0)
    else:
        raise NotMonic("bezout_pair requires a monic H0")
    gstar = v + quot * G0
    if hstar.degree >= max(H0.degree, 1) or (
        G0.degree >= 1 and gstar.degree >= G0.degree
    ):
        raise InvariantViolation("Bezout cofactors exceed their degree bounds")
    return Value((hstar, gstar))
