"""The factorization driver: slopes, segment steps, and full expansion.

Given F(X, Y) monic and separable in Y, ``expand`` produces branches, each a
tower S and a complete splitting F(T^m, Y) = prod_i (Y - eta_i(T)) with the
eta_i exact lazy series over S.  One segment step factors one polynomial:

  1. shift Y to kill the Y^(n-1) coefficient,
  2. find the smallest Newton slope p/m whose coefficient is a unit,
  3. normalize the slope to the T-grid (X -> T^m, Y -> T^p Z),
  4. adjoin one root b of the separable associate of the fiber polynomial,
  5. split off (Z - b)^s against its cofactor by quadratic-free lifting,
  6. undo the normalization and the shift.

Zero divisors encountered before the adjunction re-run the whole step on
each quotient part; zero divisors after it re-run only the remaining stages
per part (rerunning the adjunction itself would keep enlarging the tower and
never terminate, since the fresh root would again be a zero divisor).  Both
re-run flavors strictly decrease the tower dimension, so they terminate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import InvariantViolation
from .hensel import hensel_lift
from .scalars import rat
from .series import (
    Series,
    SeriesPoly,
    first_unit_coefficient,
    segment_substitute,
    substitute_ramify,
    unsegment_factor,
)
from .tower import (
    Split,
    SplitOutcome,
    Tower,
    TowerHom,
    Value,
    adjoin_root,
    invert_or_split,
)
from .upoly import Poly, bezout_pair, root_multiplicity, separable_associate


def tschirnhaus_shift(F: SeriesPoly):
    """Kill the Y^(n-1) coefficient: returns (F(X, W - sigma), sigma).

    sigma is alpha(1)/n; substituting Y = W - sigma makes the new alpha(1)
    vanish identically, which the slope search relies on.
    """
    n = F.degree
    sigma = F.alpha(1).scale(F.owner.scalar(rat(1, n)))
    return F.shift_y(-sigma), sigma


def newton_slope(F: SeriesPoly, fuel: int) -> SplitOutcome:
    """The smallest slope p/m with a unit coefficient, in lowest terms.

    Precondition: F monic of degree >= 2 with alpha(1) identically zero.
    A first unit among alpha(n), alpha(n-1) anchors the search; the region
    strictly below the anchor slope is then scanned column by column, so the
    returned slope is the true minimum over all unit coefficients.  Zero
    divisors met along the way yield a Split; only the anchor scan consumes
    fuel, because the region below a known slope is finite.
    """
    n = F.degree
    res = first_unit_coefficient(F, fuel)
    if isinstance(res, Split):
        return res
    best_i, best_j = res.value
    for i in range(2, n + 1):
        j = 0
        while j * best_i < best_j * i:  # j/i strictly below the current slope
            r = invert_or_split(F.alpha(i).coeff(j))
            if isinstance(r, Split):
                return r
            if r.value is not None:
                best_i, best_j = i, j
                break
            j += 1
    g = math.gcd(best_i, best_j)  # gcd(i, 0) = i makes integral slopes (1, p) exact
    return Value((best_i // g, best_j // g))


@dataclass(frozen=True)
class StepResult:
    """One branch outcome of a segment step.

    ``hom`` maps the tower the input polynomial lived over into ``tower``
    (projections composed with the adjunction embedding).  G has degree
    s >= 1 and H degree n - s >= 1; both are monic over ``tower`` on the
    refined grid X = T^m, and G * H equals the input under X -> T^m.
    """

    hom: TowerHom
    tower: Tower
    m: int
    G: SeriesPoly
    H: SeriesPoly
    trace: tuple


def _lin_power(lin: Poly, s: int) -> Poly:
    out = Poly.one(lin.owner)
    for _ in range(s):
        out = out * lin
    return out


def _embedding_hom(base: Tower, ext: Tower) -> TowerHom:
    """The inclusion of a tower into an extension of itself by new levels."""
    return TowerHom(base, ext, [ext.gen(i) for i in range(len(base.levels))])


def _phase_b(emb: TowerHom, S: Tower, V: SeriesPoly, sigma: Series, m: int, p: int):
    """Stages after the adjunction, for one candidate tower S.

    Returns Value((S, G, H, s)) or a Split of S; the caller re-runs this
    function (not the whole step) on each part.
    """
    n = V.degree
    Vb = V.mapped(emb)
    beta = S.gen(len(S.levels) - 1)
    q0 = Vb.eval_x0()
    rm = root_multiplicity(q0, beta)
    if isinstance(rm, Split):
        return rm
    s, L = rm.value
    if not 1 <= s <= n - 1:
        raise InvariantViolation(
            f"adjoined root has multiplicity {s} in a degree-{n} fiber"
        )
    G0 = _lin_power(Poly(S, (-beta, S.one)), s)
    bz = bezout_pair(G0, L)
    if isinstance(bz, Split):
        return bz
    hstar, gstar = bz.value
    G1, H1 = hensel_lift(Vb, G0, L, hstar, gstar)
    G2, H2 = unsegment_factor(G1, p), unsegment_factor(H1, p)
    sig = sigma.mapped(emb).ramify(m)
    return Value((G2.shift_y(sig), H2.shift_y(sig), s))


def _step_one(F: SeriesPoly, fuel: int):
    """One attempt at a segment step over F's tower.

    Returns a Split (re-run the whole step per part) or Value(list of
    (tower, hom-from-F-owner, m, G, H, trace)).
    """
    R = F.owner
    n = F.degree
    Fs, sigma = tschirnhaus_shift(F)
    sl = newton_slope(Fs, fuel)
    if isinstance(sl, Split):
        return sl
    m, p = sl.value
    V = segment_substitute(Fs, m, p)
    q0 = V.eval_x0()
    sa = separable_associate(q0)
    if isinstance(sa, Split):
        return sa
    h, cert = sa.value
    S0 = adjoin_root(R, h, cert=cert)
    name = S0.levels[-1].name
    trace = (f"slope {p}/{m}", f"adjoin {name}: deg {h.degree}")
    results = []
    stack = [(_embedding_hom(R, S0), S0, trace)]
    while stack:
        emb, S, tr = stack.pop()
        out = _phase_b(emb, S, V, sigma, m, p)
        if isinstance(out, Split):
            batch = []
            for part in out.parts:
                batch.append(
                    (
                        part.projection.compose(emb),
                        part.tower,
                        tr + (f"split dim {S.dimension} -> {part.tower.dimension}",),
                    )
                )
            stack.extend(reversed(batch))
        else:
            G, H, s = out.value
            results.append((S, emb, m, G, H, tr + (f"factor degrees {s}+{n - s}",)))
    return Value(results)


def segment_factor_step(F: SeriesPoly, fuel: int) -> list:
    """Factor F = G*H (degrees >= 1 each) over extensions of its tower.

    Returns one StepResult per branch the computation resolved into; the
    zero-side part of every split comes first.  Splits hit before the root
    adjunction re-run the whole step on each part; later ones re-run only
    the post-adjunction stages.
    """
    if F.degree < 2:
        raise InvariantViolation("segment step requires degree >= 2")
    R = F.owner
    results = []
    stack = [(TowerHom.identity(R), F, ())]
    while stack:
        hom, Fc, tr = stack.pop()
        out = _step_one(Fc, fuel)
        if isinstance(out, Split):
            batch = []
            for part in out.parts:
                batch.append(
                    (
                        part.projection.compose(hom),
                        Fc.mapped(part.projection),
                        tr + (f"split dim {hom.target.dimension} -> "
                              f"{part.tower.dimension}",),
                    )
                )
            stack.extend(reversed(batch))
        else:
            for S, emb, m, G, H, tr2 in out.value:
                results.append(
                    StepResult(emb.compose(hom), S, m, G, H, tr + tr2)
                )
    return results


# ---------------------------------------------------------------------------
# Full expansion


@dataclass(frozen=True)
class PuiseuxFactor:
    """One linear factor Y - eta of the fully split polynomial."""

    eta: Series


@dataclass(frozen=True)
class Branch:
    """A complete expansion over one tower.

    ``ramification`` is the exponent m in X = T^m; ``hom`` maps the input
    polynomial's tower into ``tower`` (it is the identity-like inclusion of
    the rationals in the common case of rational input coefficients).
    """

    tower: Tower
    ramification: int
    factors: tuple
    trace: tuple
    hom: TowerHom


@dataclass(frozen=True)
class _WorkItem:
    tower: Tower
    hom: TowerHom
    m_total: int
    factors: tuple
    trace: tuple


def expand(F: SeriesPoly, mode: str = "all", fuel: Optional[int] = None) -> list:
    """Fully split F(T^m, Y) into linear factors over towers.

    ``mode`` is "all" (follow every split part) or "first" (follow only the
    first part of every step, giving a single branch).  ``fuel`` bounds the
    unit scan per slope search; the default scales with the degree.
    """
    if mode not in ("all", "first"):
        raise ValueError(f"unknown mode {mode!r}")
    if F.degree < 1:
        raise InvariantViolation("expansion requires degree >= 1 in Y")
    if fuel is None:
        fuel = 64 * F.degree
    branches = []
    stack = [_WorkItem(F.owner, TowerHom.identity(F.owner), 1, (F,), ())]
    while stack:
        it = stack.pop()
        idx = next((i for i, f in enumerate(it.factors) if f.degree >= 2), None)
        if idx is None:
            pfs = tuple(PuiseuxFactor(-f.ycoeffs[1]) for f in it.factors)
            branches.append(Branch(it.tower, it.m_total, pfs, it.trace, it.hom))
            continue
        steps = segment_factor_step(it.factors[idx], fuel)
        if mode == "first":
            steps = steps[:1]
        batch = []
        for st in steps:
            new_factors = []
            for i, f in enumerate(it.factors):
                if i == idx:
                    new_factors.extend((st.G, st.H))
                else:
                    new_factors.append(substitute_ramify(f.mapped(st.hom), st.m))
            batch.append(
                _WorkItem(
                    st.tower,
                    st.hom.compose(it.hom),
                    it.m_total * st.m,
                    tuple(new_factors),
                    it.trace + st.trace,
                )
            )
        stack.extend(reversed(batch))
    return branches


def verify_product(F: SeriesPoly, branch: Branch, N: int) -> bool:
    """Exact check that prod (Y - eta_i) == F(T^m, Y) through T-order N-1."""
    T = branch.tower
    Fb = substitute_ramify(F.mapped(branch.hom), branch.ramification)
    prod = SeriesPoly(T, (Series.one(T),))
    for pf in branch.factors:
        prod = prod.product(SeriesPoly(T, (Series.one(T), -pf.eta)))
    if prod.degree != Fb.degree:
        return False
    for i in range(prod.degree + 1):
        for q in range(N):
            if not (prod.ycoeffs[i].coeff(q) - Fb.ycoeffs[i].coeff(q)).is_zero():
                return False
    return True
