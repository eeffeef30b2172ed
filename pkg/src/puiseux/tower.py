"""Triangular separable algebras over Q, with dynamic splitting.

A :class:`Tower` is an ordered list of levels; level ``i`` adjoins a named
generator with a monic separable minimal polynomial over the sub-tower of the
levels below it.  Every level stores a Bezout certificate ``r*p + s*p' = 1``
witnessing separability.  Elements (:class:`AlgElem`) are reduced term maps
from generator-exponent vectors to rationals; equality is structural, which
makes zero-testing a pure syntactic check.

Zero-divisor handling follows the dynamic-evaluation discipline: operations
that would need to invert a zero divisor return a :class:`Split` of the tower
into quotient parts instead of failing, and callers re-run their computation
on each part.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .errors import (
    BothZero,
    Constant,
    InvariantViolation,
    NotIdempotent,
    NotMonic,
    NotSeparable,
    OwnerMismatch,
    PreconditionViolation,
    TrivialIdempotent,
)
from .scalars import ONE, ZERO, Rat, RatLike, rat, rat_inv, rat_to_str

Term = tuple  # generator-exponent vector, one entry per level


# ---------------------------------------------------------------------------
# Towers and levels


@dataclass(frozen=True)
class Level:
    """One adjunction step: a generator with its monic separable min_poly.

    ``min_poly`` and both certificate halves are dense coefficient lists
    (lowest degree first) of AlgElems owned by the sub-tower below this
    level.  The certificate satisfies ``cert[0]*p + cert[1]*p' = 1`` exactly.
    """

    name: str
    min_poly: tuple
    cert: tuple  # (r: tuple[AlgElem], s: tuple[AlgElem])

    @property
    def degree(self) -> int:
        return len(self.min_poly) - 1


class Tower:
    """An immutable triangular separable algebra.

    The rationals themselves are the empty tower.  Extension never mutates:
    ``extend`` returns a new Tower whose parent is ``self``.
    """

    __slots__ = ("levels", "parent", "_sig", "_pow_cache", "_hash")

    def __init__(self, levels: tuple, parent: Optional["Tower"]):
        self.levels = levels
        self.parent = parent
        self._sig = None
        self._hash = None
        # per level: exponent -> canonical term dict (width level+1) for gen**exponent
        self._pow_cache = [{} for _ in levels]

    # -- construction ------------------------------------------------------

    @staticmethod
    def rationals() -> "Tower":
        return Tower((), None)

    def extend(self, name: str, min_poly: Sequence["AlgElem"], cert) -> "Tower":
        """Add one level.  ``min_poly`` must be monic non-constant over self."""
        coeffs = tuple(min_poly)
        if len(coeffs) < 2:
            raise Constant(f"minimal polynomial for {name} is constant")
        if not coeffs[-1].is_one():
            raise NotMonic(f"minimal polynomial for {name} is not monic")
        for c in coeffs:
            if c.owner != self:
                raise OwnerMismatch("min_poly coefficients must live in the sub-tower")
        r, s = tuple(cert[0]), tuple(cert[1])
        return Tower(self.levels + (Level(name, coeffs, (r, s)),), self)

    # -- identity ----------------------------------------------------------

    @property
    def signature(self):
        if self._sig is None:
            sig = []
            for lvl in self.levels:
                sig.append(
                    (
                        lvl.name,
                        tuple(tuple(sorted(c.terms.items())) for c in lvl.min_poly),
                    )
                )
            self._sig = tuple(sig)
        return self._sig

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Tower):
            return NotImplemented
        return self.signature == other.signature

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.signature)
        return self._hash

    def __repr__(self):
        gens = ", ".join(l.name for l in self.levels) or "Q"
        return f"Tower({gens}; dim {self.dimension})"

    # -- shape -------------------------------------------------------------

    @property
    def degrees(self) -> tuple:
        return tuple(l.degree for l in self.levels)

    @property
    def names(self) -> tuple:
        return tuple(l.name for l in self.levels)

    @property
    def dimension(self) -> int:
        d = 1
        for l in self.levels:
            d *= l.degree
        return d

    def prefix(self, k: int) -> "Tower":
        """The sub-tower of the first k levels."""
        t = self
        for _ in range(len(self.levels) - k):
            t = t.parent
        return t

    def basis_exponents(self) -> list:
        """All reduced exponent vectors, in deterministic order."""
        return [tuple(t) for t in itertools.product(*[range(d) for d in self.degrees])]

    # -- element constructors ----------------------------------------------

    def _make(self, terms: dict) -> "AlgElem":
        """Wrap an already-canonical term dict (no reduction, no copy)."""
        return AlgElem(self, terms)

    def element(self, terms: dict) -> "AlgElem":
        """Build an element from a raw term dict, reducing to canonical form."""
        width = len(self.levels)
        acc = {}
        for t, c in terms.items():
            c = rat(c)
            if c == 0:
                continue
            if len(t) != width:
                raise ValueError(f"exponent vector {t} has wrong width")
            nt = tuple(t)
            v = acc.get(nt, ZERO) + c
            if v == 0:
                acc.pop(nt, None)
            else:
                acc[nt] = v
        _reduce_terms(self, acc, width)
        return AlgElem(self, acc)

    def scalar(self, c: RatLike) -> "AlgElem":
        c = rat(c)
        if c == 0:
            return AlgElem(self, {})
        return AlgElem(self, {(0,) * len(self.levels): c})

    @property
    def zero(self) -> "AlgElem":
        return AlgElem(self, {})

    @property
    def one(self) -> "AlgElem":
        return self.scalar(1)

    def gen(self, i: int) -> "AlgElem":
        """The i-th generator (0-based), reduced if its level has degree 1."""
        width = len(self.levels)
        t = tuple(1 if j == i else 0 for j in range(width))
        return self.element({t: ONE})

    def embed(self, x: "AlgElem") -> "AlgElem":
        """Embed an element of a prefix sub-tower into this tower."""
        k = len(x.owner.levels)
        if x.owner != self.prefix(k):
            raise OwnerMismatch("embed expects an element of a prefix sub-tower")
        pad = (0,) * (len(self.levels) - k)
        return AlgElem(self, {t + pad: c for t, c in x.terms.items()})

    # -- reduction cache ----------------------------------------------------

    def _power(self, i: int, e: int) -> dict:
        """Canonical term dict (width i+1) for gen_i ** e, with e >= degree_i."""
        cache = self._pow_cache[i]
        got = cache.get(e)
        if got is not None:
            return got
        deg = self.levels[i].degree
        if e == deg:
            base = {}
            for j, coeff in enumerate(self.levels[i].min_poly[:-1]):
                for st, sc in coeff.terms.items():
                    t = st + (j,)
                    v = base.get(t, ZERO) - sc
                    if v == 0:
                        base.pop(t, None)
                    else:
                        base[t] = v
            cache[deg] = base
            return base
        prev = self._power(i, e - 1)
        base = self._power(i, deg)
        acc = {}
        for t, c in prev.items():
            ne = t[i] + 1
            if ne < deg:
                nt = t[:i] + (ne,)
                v = acc.get(nt, ZERO) + c
                if v == 0:
                    acc.pop(nt, None)
                else:
                    acc[nt] = v
            else:
                for bt, bc in base.items():
                    nt = tuple(t[j] + bt[j] for j in range(i)) + (bt[i],)
                    v = acc.get(nt, ZERO) + c * bc
                    if v == 0:
                        acc.pop(nt, None)
                    else:
                        acc[nt] = v
        _reduce_terms(self, acc, i + 1)
        cache[e] = acc
        return acc


def _reduce_terms(tower: Tower, terms: dict, width: int) -> None:
    """Reduce a raw term dict in place to canonical form (top level first)."""
    degrees = tower.degrees
    for i in range(width - 1, -1, -1):
        deg = degrees[i]
        bad = [t for t in terms if t[i] >= deg]
        for t in bad:
            c = terms.pop(t)
            rep = tower._power(i, t[i])
            for rt, rc in rep.items():
                nt = tuple(t[j] + rt[j] for j in range(i)) + (rt[i],) + t[i + 1 :]
                v = terms.get(nt, ZERO) + c * rc
                if v == 0:
                    terms.pop(nt, None)
                else:
                    terms[nt] = v


# ---------------------------------------------------------------------------
# Elements


class AlgElem:
    """A reduced element of a Tower.

    ``terms`` maps exponent vectors (one entry per level, each strictly below
    the level degree) to nonzero rationals.  The zero element has an empty
    map; equality and hashing are structural.
    """

    __slots__ = ("owner", "terms")

    def __init__(self, owner: Tower, terms: dict):
        self.owner = owner
        self.terms = terms

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * len(self.owner.levels): ONE}

    def is_rational(self) -> bool:
        return not self.terms or (
            len(self.terms) == 1 and (0,) * len(self.owner.levels) in self.terms
        )

    def rational_value(self) -> Rat:
        """The value of a rational element (precondition: is_rational)."""
        if not self.terms:
            return ZERO
        return self.terms[(0,) * len(self.owner.levels)]

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, AlgElem):
            if other.owner != self.owner:
                raise OwnerMismatch("operands belong to different towers")
            return other
        if isinstance(other, (int, Rat)) or type(other).__name__ in ("mpq", "mpz"):
            return self.owner.scalar(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc = dict(self.terms)
        for t, c in o.terms.items():
            v = acc.get(t, ZERO) + c
            if v == 0:
                acc.pop(t, None)
            else:
                acc[t] = v
        return AlgElem(self.owner, acc)

    __radd__ = __add__

    def __neg__(self):
        return AlgElem(self.owner, {t: -c for t, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.terms or not o.terms:
            return AlgElem(self.owner, {})
        acc = {}
        for t1, c1 in self.terms.items():
            for t2, c2 in o.terms.items():
                t = tuple(a + b for a, b in zip(t1, t2))
                v = acc.get(t, ZERO) + c1 * c2
                if v == 0:
                    acc.pop(t, None)
                else:
                    acc[t] = v
        _reduce_terms(self.owner, acc, len(self.owner.levels))
        return AlgElem(self.owner, acc)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a rational scalar only; use invert_or_split for ring division."""
        if isinstance(other, AlgElem):
            return NotImplemented
        return self * rat_inv(rat(other))

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not ring operations; use invert_or_split")
        result = self.owner.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- structure -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, AlgElem):
            return self.owner == other.owner and self.terms == other.terms
        if isinstance(other, int) or type(other).__name__ == "mpq":
            return self.terms == self.owner.scalar(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def as_top_poly(self) -> list:
        """Dense coefficients of this element in the top generator (over parent)."""
        owner = self.owner
        if not owner.levels:
            raise InvariantViolation("the rational tower has no top generator")
        parent = owner.parent
        deg = owner.levels[-1].degree
        buckets = [dict() for _ in range(deg)]
        for t, c in self.terms.items():
            buckets[t[-1]][t[:-1]] = c
        coeffs = [AlgElem(parent, b) for b in buckets]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        return coeffs

    def project_down(self) -> "AlgElem":
        """Reinterpret an element with zero top exponent in the parent tower."""
        for t in self.terms:
            if t[-1] != 0:
                raise InvariantViolation("element does not live in the sub-tower")
        return AlgElem(self.owner.parent, {t[:-1]: c for t, c in self.terms.items()})

    # -- rendering -----------------------------------------------------------

    def render(self, names: Optional[Sequence[str]] = None) -> str:
        if not self.terms:
            return "0"
        if names is None:
            names = self.owner.names
        parts = []
        for t in sorted(self.terms, reverse=True):
            c = self.terms[t]
            mono = "*".join(
                f"{names[i]}^{e}" if e > 1 else names[i] for i, e in enumerate(t) if e
            )
            if not mono:
                parts.append(rat_to_str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{rat_to_str(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"<{self.render()} in {self.owner!r}>"


def lift_element(x: AlgElem, target: Tower) -> AlgElem:
    """Reinterpret an element of a quotient leaf inside an original tower.

    Valid when the leaf has the same level names and elementwise smaller or
    equal degrees (true for every tower produced by splitting ``target``):
    reduced exponent vectors of the leaf are already reduced in ``target``,
    and projecting the result back to the leaf returns ``x``.
    """
    src = x.owner
    if src == target:
        return x
    if len(src.levels) != len(target.levels) or any(
        a > b for a, b in zip(src.degrees, target.degrees)
    ):
        raise OwnerMismatch("element does not come from a quotient of the target tower")
    return AlgElem(target, dict(x.terms))


# ---------------------------------------------------------------------------
# Homomorphisms


class TowerHom:
    """A homomorphism between towers, given by generator images."""

    __slots__ = ("source", "target", "images", "_im_pows")

    def __init__(self, source: Tower, target: Tower, images: Sequence[AlgElem]):
        if len(images) != len(source.levels):
            raise ValueError("one image per source generator required")
        for im in images:
            if im.owner != target:
                raise OwnerMismatch("images must live in the target tower")
        self.source = source
        self.target = target
        self.images = tuple(images)
        self._im_pows = [dict() for _ in images]

    @staticmethod
    def identity(tower: Tower) -> "TowerHom":
        return TowerHom(tower, tower, [tower.gen(i) for i in range(len(tower.levels))])

    def _image_power(self, i: int, e: int) -> AlgElem:
        if e == 0:
            return self.target.one
        cache = self._im_pows[i]
        got = cache.get(e)
        if got is None:
            got = self._image_power(i, e - 1) * self.images[i]
            cache[e] = got
        return got

    def __call__(self, x: AlgElem) -> AlgElem:
        if x.owner != self.source:
            raise OwnerMismatch("element is not owned by the hom's source tower")
        out = self.target.zero
        for t, c in x.terms.items():
            m = self.target.scalar(c)
            for i, e in enumerate(t):
                if e:
                    m = m * self._image_power(i, e)
            out = out + m
        return out

    def compose(self, inner: "TowerHom") -> "TowerHom":
        """self o inner (apply inner first)."""
        if inner.target != self.source:
            raise OwnerMismatch("hom composition mismatch")
        return TowerHom(inner.source, self.target, [self(im) for im in inner.images])

    def is_valid(self) -> bool:
        """Check that every level's min_poly maps to zero."""
        src = self.source
        for i, lvl in enumerate(src.levels):
            val = self.target.zero
            for j, c in enumerate(lvl.min_poly):
                val = val + self(src.embed(c)) * self._image_power(i, j)
            if not val.is_zero():
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, TowerHom):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.images == other.images
        )

    def __hash__(self):
        return hash((self.source, self.target, self.images))

    def __repr__(self):
        ims = ", ".join(
            f"{l.name} -> {im.render()}" for l, im in zip(self.source.levels, self.images)
        )
        return f"TowerHom({ims or 'Q'})"


def hom_apply(h: TowerHom, x: AlgElem) -> AlgElem:
    """Apply a homomorphism to an element."""
    return h(x)


# ---------------------------------------------------------------------------
# Split outcomes


@dataclass(frozen=True)
class Value:
    """A computation finished without splitting."""

    value: object


@dataclass(frozen=True)
class SplitPart:
    """One quotient part of a split tower.

    ``indicator`` is the orthogonal idempotent of the *source* tower that is
    1 on this part and 0 on the others; it is what lets results computed per
    part be recombined inside the source.
    """

    projection: TowerHom
    tower: Tower
    indicator: AlgElem


@dataclass(frozen=True)
class Split:
    """The tower decomposed into >= 2 quotient parts.

    Callers re-run their computation on each part (projecting their inputs)
    rather than transporting intermediate state.
    """

    parts: tuple

    def __init__(self, parts):
        object.__setattr__(self, "parts", tuple(parts))
        if len(self.parts) < 2:
            raise InvariantViolation("a split needs at least two parts")


SplitOutcome = Union[Value, Split]


# ---------------------------------------------------------------------------
# Raw dense polynomial helpers (coefficient lists over a tower)

# These power the extended-gcd engine below and the public upoly module.
# Lists are lowest-degree-first and trimmed (no zero leading coefficients).


def _ltrim(cs: list) -> list:
    while cs and cs[-1].is_zero():
        cs.pop()
    return cs


def _ladd(a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return _ltrim(out)


def _lsub(a: list, b: list, tower: Tower) -> list:
    out = list(a) + [tower.zero] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = out[i] - c
    return _ltrim(out)


def _lmul(a: list, b: list, tower: Tower) -> list:
    if not a or not b:
        return []
    out = [tower.zero] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca.is_zero():
            continue
        for j, cb in enumerate(b):
            out[i + j] = out[i + j] + ca * cb
    return _ltrim(out)


def _lscale(a: list, s: AlgElem) -> list:
    return _ltrim([c * s for c in a])


def _lderiv(a: list) -> list:
    return _ltrim([c * i for i, c in enumerate(a)][1:])


def _ldivmod(f: list, d: list, tower: Tower) -> tuple:
    """Divide by a monic divisor; exact, no inversions needed."""
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    if not d[-1].is_one():
        raise NotMonic("division requires a monic divisor")
    r = list(f)
    n, m = len(r), len(d)
    if n < m:
        return [], _ltrim(r)
    q = [tower.zero] * (n - m + 1)
    for k in range(n - m, -1, -1):
        c = r[k + m - 1]
        if c.is_zero():
            continue
        q[k] = c
        for j in range(m):
            r[k + j] = r[k + j] - c * d[j]
    return _ltrim(q), _ltrim(r[: m - 1])


def _leval(f: list, x: AlgElem, tower: Tower) -> AlgElem:
    out = tower.zero
    for c in reversed(f):
        out = out * x + c
    return out


# ---------------------------------------------------------------------------
# Extended gcd over a tower (the splitting engine)


def _egcd_lists(tower: Tower, f: list, g: list):
    """Monic extended gcd of coefficient lists over ``tower``.

    Returns ``("value", (d, u, v))`` with ``u*f + v*g = d`` (d monic), or
    ``("split", Split)`` when a leading coefficient is a zero divisor.
    Remainders are monicized at every step; reduction is always by the
    higher-degree operand, so the branch tree is deterministic.
    """
    if not f and not g:
        raise BothZero("gcd(0, 0) is undefined")
    one = tower.one
    r0, u0, v0 = list(f), [one], []
    r1, u1, v1 = list(g), [], [one]
    if len(r0) < len(r1):
        (r0, u0, v0), (r1, u1, v1) = (r1, u1, v1), (r0, u0, v0)
    while r1:
        lc = r1[-1]
        if not lc.is_one():
            res = invert_or_split(lc)
            if isinstance(res, Split):
                return ("split", res)
            ilc = res.value
            if ilc is None:
                raise InvariantViolation("trimmed polynomial has zero leading coefficient")
            r1, u1, v1 = _lscale(r1, ilc), _lscale(u1, ilc), _lscale(v1, ilc)
        q, r2 = _ldivmod(r0, r1, tower)
        u2 = _lsub(u0, _lmul(q, u1, tower), tower)
        v2 = _lsub(v0, _lmul(q, v1, tower), tower)
        (r0, u0, v0), (r1, u1, v1) = (r1, u1, v1), (r2, u2, v2)
    if r0 and not r0[-1].is_one():
        res = invert_or_split(r0[-1])
        if isinstance(res, Split):
            return ("split", res)
        ilc = res.value
        r0, u0, v0 = _lscale(r0, ilc), _lscale(u0, ilc), _lscale(v0, ilc)
    return ("value", (r0, u0, v0))


# ---------------------------------------------------------------------------
# invert_or_split and friends


def _from_top_poly(tower: Tower, coeffs: list) -> AlgElem:
    """Assemble an element of ``tower`` from dense coefficients over its parent."""
    deg = tower.levels[-1].degree
    if len(coeffs) > deg:
        raise InvariantViolation("top-variable representative exceeds the level degree")
    terms = {}
    for j, c in enumerate(coeffs):
        for st, sc in c.terms.items():
            terms[st + (j,)] = sc
    return AlgElem(tower, terms)


def _lift_subsplit(tower: Tower, sub: Split) -> Split:
    """Lift a split of the parent tower through the top level."""
    lvl = tower.levels[-1]
    parts = []
    for part in sub.parts:
        hom_s, part_tower = part.projection, part.tower
        new_poly = [hom_s(c) for c in lvl.min_poly]
        new_cert = (
            [hom_s(c) for c in lvl.cert[0]],
            [hom_s(c) for c in lvl.cert[1]],
        )
        lifted = part_tower.extend(lvl.name, new_poly, new_cert)
        images = [lifted.embed(im) for im in hom_s.images]
        images.append(lifted.gen(len(lifted.levels) - 1))
        proj = TowerHom(tower, lifted, images)
        parts.append(SplitPart(proj, lifted, tower.embed(part.indicator)))
    return Split(parts)


def _split_top(tower: Tower, g: list, q: list) -> Split:
    """Split along a proper monic factorization p_top = g * q.

    The separability certificate of the top level yields, without any further
    gcd computation, both the certificates of the two new levels and the
    idempotent that separates them:  from r*p + s*p' = 1 and p = g*q,

        g*(r*q + s*q') + q*(s*g') = 1

    so e = g(a)*(r*q + s*q')(a) is 1 exactly where g(a) is invertible, i.e.
    on the q-part.  The g-part (where the inverted element was zero) is
    listed first.
    """
    parent = tower.parent
    lvl = tower.levels[-1]
    r, s = list(lvl.cert[0]), list(lvl.cert[1])
    gp, qp = _lderiv(g), _lderiv(q)
    a_cof = _ladd(_lmul(r, q, parent), _lmul(s, qp, parent))  # multiplies g
    w = _lmul(g, a_cof, parent)
    _, w = _ldivmod(w, list(lvl.min_poly), parent)
    e = _from_top_poly(tower, w)
    cert_g = (a_cof, _lmul(s, q, parent))
    cert_q = (_ladd(_lmul(r, g, parent), _lmul(s, gp, parent)), _lmul(s, g, parent))
    tower_g = parent.extend(lvl.name, g, cert_g)
    tower_q = parent.extend(lvl.name, q, cert_q)
    gens = list(range(len(tower.levels)))
    proj_g = TowerHom(tower, tower_g, [tower_g.gen(i) for i in gens])
    proj_q = TowerHom(tower, tower_q, [tower_q.gen(i) for i in gens])
    one = tower.one
    return Split(
        [
            SplitPart(proj_g, tower_g, one - e),
            SplitPart(proj_q, tower_q, e),
        ]
    )


def invert_or_split(x: AlgElem) -> SplitOutcome:
    """Invert x, report it zero, or split the tower.

    Returns ``Value(Some inverse)``, ``Value(None)`` iff x = 0, or a
    ``Split`` whose parts each see the projection of x as zero or invertible
    (after re-running per part).  The computation is an extended gcd of x's
    top-variable representative against the top min_poly; zero-divisor
    leading coefficients at lower levels trigger recursive splits, which are
    lifted back through the top level.
    """
    tower = x.owner
    if x.is_zero():
        return Value(None)
    if not tower.levels:
        return Value(tower.scalar(rat_inv(x.rational_value())))
    u = x.as_top_poly()
    if len(u) == 1:
        res = invert_or_split(u[0])
        if isinstance(res, Value):
            return Value(tower.embed(res.value))
        return _lift_subsplit(tower, res)
    parent = tower.parent
    p = list(tower.levels[-1].min_poly)
    res = _egcd_lists(parent, p, u)
    if res[0] == "split":
        return _lift_subsplit(tower, res[1])
    d, _, v = res[1]
    if len(d) == 1:
        if len(v) >= len(p):
            _, v = _ldivmod(v, p, parent)
        return Value(_from_top_poly(tower, v))
    q, rem = _ldivmod(p, d, parent)
    if rem:
        raise InvariantViolation("gcd does not divide the top min_poly")
    return _split_top(tower, d, q)


@dataclass(frozen=True)
class InvertLeaf:
    """A fully-resolved branch of invert_or_split.

    ``indicator`` lives in the original tower; ``inverse`` is None exactly
    when the projection of the element to this leaf is zero.
    """

    projection: TowerHom
    tower: Tower
    kind: str  # "zero" | "unit"
    inverse: Optional[AlgElem]
    indicator: AlgElem


def resolve_invert(x: AlgElem) -> list:
    """Run invert_or_split to completion, re-running per part after splits.

    Returns the leaves in deterministic order (zero-side parts first at every
    split).  The leaf indicators are orthogonal idempotents of x's tower
    summing to 1.
    """
    tower = x.owner
    leaves = []
    stack = [(TowerHom.identity(tower), tower.one, x)]
    while stack:
        hom, ind, xc = stack.pop()
        res = invert_or_split(xc)
        if isinstance(res, Value):
            kind = "zero" if res.value is None else "unit"
            leaves.append(InvertLeaf(hom, hom.target, kind, res.value, ind))
        else:
            batch = []
            for part in res.parts:
                batch.append(
                    (
                        part.projection.compose(hom),
                        ind * lift_element(part.indicator, tower),
                        part.projection(xc),
                    )
                )
            stack.extend(reversed(batch))
    return leaves


def quasi_inverse(x: AlgElem) -> AlgElem:
    """The element b with x*b*x = x and b*x*b = b.

    Assembled across invert_or_split branches: the inverse where x is a unit,
    0 where x is zero, recombined through the split idempotents.
    """
    res = invert_or_split(x)
    if isinstance(res, Value):
        return x.owner.zero if res.value is None else res.value
    tower = x.owner
    b = tower.zero
    for leaf in resolve_invert(x):
        if leaf.kind == "unit":
            b = b + lift_element(leaf.inverse, tower) * leaf.indicator
    return b


# ---------------------------------------------------------------------------
# Root adjunction and idempotent decomposition


def _poly_coeff_list(p, tower: Tower) -> list:
    """Accept a upoly.Poly or a plain coefficient sequence over ``tower``."""
    coeffs = list(p.coeffs) if hasattr(p, "coeffs") else list(p)
    for c in coeffs:
        if not isinstance(c, AlgElem) or c.owner != tower:
            raise OwnerMismatch("polynomial coefficients must live in the base tower")
    return _ltrim(coeffs)


def _separability_cert(tower: Tower, p: list, dp: list) -> tuple:
    """Compute (r, s) with r*p + s*p' = 1, resolving splits by CRT recombination."""
    leaves = []
    stack = [(TowerHom.identity(tower), tower.one, p, dp)]
    while stack:
        hom, ind, f, g = stack.pop()
        res = _egcd_lists(hom.target, f, g)
        if res[0] == "value":
            d, u, v = res[1]
            if len(d) != 1:
                raise NotSeparable(
                    "polynomial and its derivative share a non-constant factor"
                )
            leaves.append((hom, ind, u, v))
        else:
            batch = []
            for part in res[1].parts:
                batch.append(
                    (
                        part.projection.compose(hom),
                        ind * lift_element(part.indicator, tower),
                        [part.projection(c) for c in f],
                        [part.projection(c) for c in g],
                    )
                )
            stack.extend(reversed(batch))
    deg_r = max(len(l[2]) for l in leaves)
    deg_s = max(len(l[3]) for l in leaves)
    r = [tower.zero] * deg_r
    s = [tower.zero] * deg_s
    for hom, ind, u, v in leaves:
        for k, c in enumerate(u):
            r[k] = r[k] + lift_element(c, tower) * ind
        for k, c in enumerate(v):
            s[k] = s[k] + lift_element(c, tower) * ind
    return _ltrim(r), _ltrim(s)


def adjoin_root(R: Tower, p, name: Optional[str] = None, cert=None) -> Tower:
    """Extend R by a root of the monic separable polynomial p.

    The separability certificate r*p + s*p' = 1 is computed by extended gcd
    when not supplied; if that gcd splits the tower, per-part certificates
    are recombined through the split idempotents, and any part on which the
    gcd is non-constant makes the adjunction fail with NotSeparable.
    """
    coeffs = _poly_coeff_list(p, R)
    if len(coeffs) < 2:
        raise Constant("cannot adjoin a root of a constant polynomial")
    if not coeffs[-1].is_one():
        raise NotMonic("adjoin_root requires a monic polynomial")
    if name is None:
        name = f"a{len(R.levels) + 1}"
    dp = _lderiv(coeffs)
    if cert is None:
        cert = _separability_cert(R, coeffs, dp)
    else:
        halves = []
        for half in cert:
            hc = list(half.coeffs) if hasattr(half, "coeffs") else list(half)
            halves.append(_ltrim(hc))
        cert = tuple(halves)
    lhs = _ladd(_lmul(list(cert[0]), coeffs, R), _lmul(list(cert[1]), dp, R))
    if len(lhs) != 1 or not lhs[0].is_one():
        raise NotSeparable("certificate does not witness r*p + s*p' = 1")
    return R.extend(name, coeffs, cert)


def decompose_by_idempotent(R: Tower, e: AlgElem):
    """Split R along a non-trivial idempotent e.

    Returns (hom0, R0, hom1, R1) with R0 = R/<e> (where e maps to 0) first.
    The quotients are presented as towers of the same shape, obtained from a
    factorization of a single level's min_poly; idempotents whose resolution
    needs more than one binary split (e.g. products of idempotents at
    different levels) have no such presentation and raise
    PreconditionViolation.
    """
    if e.owner != R:
        raise OwnerMismatch("idempotent not owned by the tower being decomposed")
    if e * e != e:
        raise NotIdempotent("element does not satisfy e*e = e")
    if e.is_zero() or e.is_one():
        raise TrivialIdempotent("idempotent 0 or 1 induces no proper decomposition")
    leaves = resolve_invert(e)
    if len(leaves) != 2:
        raise PreconditionViolation(
            "idempotent does not decompose the tower into exactly two towers "
            f"of its shape (resolution produced {len(leaves)} parts)"
        )
    zero = [l for l in leaves if l.kind == "zero"]
    unit = [l for l in leaves if l.kind == "unit"]
    if len(zero) != 1 or len(unit) != 1:
        raise InvariantViolation("idempotent resolution is not one zero and one unit part")
    z, u = zero[0], unit[0]
    if not u.projection(e).is_one():
        raise InvariantViolation("idempotent is a unit but not 1 on its unit part")
    return z.projection, z.tower, u.projection, u.tower


# ---------------------------------------------------------------------------
# Functional aliases for the operator forms


def elem_add(x: AlgElem, y: AlgElem) -> AlgElem:
    return x + y


def elem_mul(x: AlgElem, y: AlgElem) -> AlgElem:
    return x * y
