"""Lifting a coprime fiber factorization to a series factorization.

Given F(T, Y) monic in Y and a factorization F(0, Y) = G0 * H0 into monic
coprime polynomials, with Bezout cofactors G0*Hstar + H0*Gstar = 1, this
lifts order by order: writing G = sum G_q T^q, H = sum H_q T^q,

    U_q = F_q - sum_{i+j=q, i,j>=1} G_i H_j
    H_q = (U_q * Hstar) mod H0    (with quotient E_q)
    G_q = E_q * G0 + Gstar * U_q

so that G0*H_q + H0*G_q = U_q exactly.  Every step is ring arithmetic plus
division by the monic H0 — no inversions, hence no splits, ever.  The
returned factors are lazy: order q is computed on first access and shared
between both factors.
"""

from __future__ import annotations

from .errors import PreconditionViolation
from .series import Series, SeriesPoly
from .tower import Tower
from .upoly import Poly, poly_divmod


class _LiftState:
    """Shared order-by-order solver for one lifting problem."""

    def __init__(self, F: SeriesPoly, G0: Poly, H0: Poly, Hstar: Poly, Gstar: Poly):
        self.F = F
        self.Hstar = Hstar
        self.Gstar = Gstar
        self.G = [G0]
        self.H = [H0]

    def ensure(self, q: int) -> None:
        while len(self.G) <= q:
            k = len(self.G)
            Uk = self.F.x_coefficient(k)
            for i in range(1, k):
                Uk = Uk - self.G[i] * self.H[k - i]
            Ek, Hk = poly_divmod(Uk * self.Hstar, self.H[0])
            Gk = Ek * self.G[0] + self.Gstar * Uk
            if Gk.degree >= max(self.G[0].degree, 1) and self.G[0].degree >= 1:
                raise PreconditionViolation("lift produced an out-of-degree correction")
            self.G.append(Gk)
            self.H.append(Hk)


def _factor_rows(state: _LiftState, which: str, deg: int, owner: Tower) -> tuple:
    rows = []
    for i in range(deg + 1):
        k = deg - i  # row i holds the coefficient of Y^(deg-i)

        def fn(q: int, k=k) -> object:
            state.ensure(q)
            table = state.G if which == "G" else state.H
            return table[q].coeff(k)

        rows.append(Series(owner, fn))
    return tuple(rows)


def hensel_lift(F: SeriesPoly, G0: Poly, H0: Poly, Hstar: Poly, Gstar: Poly):
    """Lift F(0,Y) = G0*H0 to F = G*H over series, given Bezout cofactors.

    Returns (G, H) as lazy SeriesPoly factors with G(0,Y) = G0, H(0,Y) = H0.
    Preconditions (PreconditionViolation otherwise): F monic in Y; G0, H0
    monic with degrees summing to deg F and F(0,Y) = G0*H0; cofactors
    satisfying G0*Hstar + H0*Gstar = 1 with deg Hstar < deg H0 (or H0 = 1 and
    Hstar = 0) and deg Gstar < deg G0.
    """
    owner = F.owner
    if not F.is_monic():
        raise PreconditionViolation("hensel_lift requires a monic input")
    if not (G0.is_monic() and H0.is_monic()):
        raise PreconditionViolation("factor seeds must be monic")
    if G0.degree + H0.degree != F.degree:
        raise PreconditionViolation("factor seed degrees do not sum to the input degree")
    if F.eval_x0() != G0 * H0:
        raise PreconditionViolation("factor seeds do not multiply to the fiber polynomial")
    bez = G0 * Hstar + H0 * Gstar
    if not bez.is_one():
        raise PreconditionViolation("cofactors do not witness G0*Hstar + H0*Gstar = 1")
    if H0.degree >= 1 and Hstar.degree >= H0.degree:
        raise PreconditionViolation("Hstar degree must stay below deg H0")
    if G0.degree >= 1 and Gstar.degree >= G0.degree:
        raise PreconditionViolation("Gstar degree must stay below deg G0")

    state = _LiftState(F, G0, H0, Hstar, Gstar)
    G = SeriesPoly(owner, _factor_rows(state, "G", G0.degree, owner))
    H = SeriesPoly(owner, _factor_rows(state, "H", H0.degree, owner))
    return G, H
