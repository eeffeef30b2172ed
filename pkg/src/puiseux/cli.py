"""Command-line front end: parse, expand, verify, split, normalize.

The input language is a polynomial in X and Y with rational coefficients,
monic in Y::

    poly := '-'? term (('+'|'-') term)*
    term := coeff ('*'? atom)* | atom ('*'? atom)*
    atom := ('X'|'Y') ('^' nat)?
    coeff := int ('/' int)?

Whitespace is insignificant.  Subcommands:

``expand``
    Print the Puiseux factorization of the input: one block per branch with
    the branch's algebra (one generator line per level) followed by one
    parenthesized factor per line.  Exponents are reported in the X-scale as
    reduced fractions j/m; every factor line ends with a uniform "+ ..."
    truncation marker.
``verify``
    Expand, then re-multiply every branch's factors and compare against the
    input through T-order ``--order``; one report line per branch.
``splits``
    Expand, then check for every ordered pair of branch algebras that the
    first splits the second (complete root tree, with the induced
    homomorphism family verified).
``normalize``
    Expand, then reduce the pair of branch algebras selected by ``--pair``
    to a common refinement R with multiplicities: A ~ R^n and B ~ R^m.

Exit codes: 0 success, 1 usage or parse error, 2 input not separable,
3 fuel exhausted, 4 verification failed.  I/O is stdin/stdout/file only;
the tool is single-threaded and touches no network or environment state.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import (
    DoNotSplitEachOther,
    FuelExhausted,
    InvariantViolation,
    NotMonicInY,
    NotSeparable,
    NotSeparableInput,
    ParseError,
)
from .newton import Branch, expand, verify_product
from .scalars import rat_to_str
from .series import Series, SeriesPoly
from .splits import harvest_root_hints, normalize_pair, splits_check
from .tower import AlgElem, Tower, adjoin_root
from .upoly import Poly

# Root-candidate harvest depth used by the splits/normalize subcommands.
_HINT_DEPTH = 10


# ---------------------------------------------------------------------------
# Input polynomials: tokenizer, parser, renderer


@dataclass(frozen=True)
class _Token:
    kind: str  # INT X Y ^ * / + - END
    text: str
    pos: int


def _tokenize(text: str) -> list:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(_Token("INT", text[i:j], i))
            i = j
            continue
        if ch in "XY^*/+-":
            tokens.append(_Token(ch if ch in "^*/+-" else ch, ch, i))
            i += 1
            continue
        raise ParseError(i, f"unexpected character {ch!r}")
    tokens.append(_Token("END", "", len(text)))
    return tokens


class _PolyParser:
    """Recursive-descent parser producing a {(ydeg, xdeg): Fraction} table."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.k = 0

    def peek(self) -> _Token:
        return self.tokens[self.k]

    def take(self) -> _Token:
        t = self.tokens[self.k]
        self.k += 1
        return t

    def parse(self) -> dict:
        table: dict = {}
        sign = 1
        if self.peek().kind == "-":
            self.take()
            sign = -1
        self._term(table, sign)
        while self.peek().kind in ("+", "-"):
            sign = 1 if self.take().kind == "+" else -1
            self._term(table, sign)
        t = self.peek()
        if t.kind != "END":
            raise ParseError(t.pos, f"unexpected {t.text!r}")
        return {key: c for key, c in table.items() if c != 0}

    def _term(self, table: dict, sign: int) -> None:
        t = self.peek()
        coeff = Fraction(sign)
        got = False
        if t.kind == "INT":
            self.take()
            num = int(t.text)
            if self.peek().kind == "/":
                self.take()
                d = self.peek()
                if d.kind != "INT":
                    raise ParseError(d.pos, "expected an integer denominator")
                self.take()
                if int(d.text) == 0:
                    raise ParseError(d.pos, "zero denominator")
                coeff *= Fraction(num, int(d.text))
            else:
                coeff *= num
            got = True
        xdeg = 0
        ydeg = 0
        while True:
            t = self.peek()
            if t.kind == "*":
                self.take()
                t = self.peek()
                if t.kind not in ("X", "Y"):
                    raise ParseError(t.pos, "expected X or Y after '*'")
            if t.kind not in ("X", "Y"):
                break
            self.take()
            e = 1
            if self.peek().kind == "^":
                self.take()
                n = self.peek()
                if n.kind != "INT":
                    raise ParseError(n.pos, "expected a natural exponent after '^'")
                self.take()
                e = int(n.text)
            if t.kind == "X":
                xdeg += e
            else:
                ydeg += e
            got = True
        if not got:
            t = self.peek()
            raise ParseError(t.pos, "expected a term")
        table[(ydeg, xdeg)] = table.get((ydeg, xdeg), Fraction(0)) + coeff


def _render_table(table: dict) -> str:
    """Canonical text for a coefficient table (Y-degree descending)."""
    if not table:
        return "0"
    parts = []
    for (ydeg, xdeg) in sorted(table, key=lambda k: (-k[0], k[1])):
        c = table[(ydeg, xdeg)]
        atoms = []
        if xdeg == 1:
            atoms.append("X")
        elif xdeg > 1:
            atoms.append(f"X^{xdeg}")
        if ydeg == 1:
            atoms.append("Y")
        elif ydeg > 1:
            atoms.append(f"Y^{ydeg}")
        mag = abs(c)
        if mag != 1 or not atoms:
            atoms.insert(0, str(mag))
        body = "*".join(atoms)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


@dataclass(frozen=True)
class InputPoly:
    """A parsed input polynomial: source text, coefficient table, SeriesPoly."""

    expr: str
    table: dict
    parsed: SeriesPoly

    def render(self) -> str:
        return _render_table(self.table)

    def __eq__(self, other) -> bool:
        return isinstance(other, InputPoly) and self.table == other.table


def _table_to_seriespoly(table: dict) -> SeriesPoly:
    Q = Tower.rationals()
    n = max(y for (y, _) in table)
    rows = []
    for i in range(n + 1):
        ydeg = n - i
        col = {x: c for (y, x), c in table.items() if y == ydeg}
        width = max(col) + 1 if col else 1
        rows.append(
            Series.from_list(Q, [Q.scalar(col.get(k, Fraction(0))) for k in range(width)])
        )
    return SeriesPoly.from_rows(Q, rows)


def parse_poly(text: str) -> InputPoly:
    """Parse source text into a monic-in-Y polynomial over the rationals."""
    table = _PolyParser(text).parse()
    if not table:
        raise ParseError(0, "polynomial is zero")
    n = max(y for (y, _) in table)
    if n < 1:
        raise ParseError(0, "polynomial must involve Y")
    lead = {x: c for (y, x), c in table.items() if y == n}
    if lead != {0: Fraction(1)}:
        named = _render_table({(0, x): c for x, c in lead.items()})
        raise NotMonicInY(f"leading Y-coefficient is {named}, expected 1")
    return InputPoly(text, table, _table_to_seriespoly(table))


# ---------------------------------------------------------------------------
# Separability gate: Euclid over the rational-function field Q(X)
#
# X-polynomials are tuples of Fractions (ascending); rational functions are
# reduced (numerator, monic denominator) pairs; Y-polynomials over them are
# ascending lists.  All arithmetic is exact.


def _xp_norm(c: Sequence) -> tuple:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


_XP_ZERO: tuple = ()
_XP_ONE = (Fraction(1),)


def _xp_add(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _xp_norm(out)


def _xp_neg(a):
    return tuple(-c for c in a)


def _xp_mul(a, b):
    if not a or not b:
        return _XP_ZERO
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                out[i + j] += c * d
    return _xp_norm(out)


def _xp_divmod(a, b):
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    inv = 1 / b[-1]
    while len(r) >= len(b) and _xp_norm(r):
        r = list(_xp_norm(r))
        if len(r) < len(b):
            break
        k = len(r) - len(b)
        f = r[-1] * inv
        q[k] = f
        for j, d in enumerate(b):
            r[k + j] -= f * d
        r.pop()
    return _xp_norm(q), _xp_norm(r)


def _xp_gcd(a, b):
    a, b = _xp_norm(a), _xp_norm(b)
    while b:
        a, b = b, _xp_divmod(a, b)[1]
    if not a:
        return _XP_ZERO
    inv = 1 / a[-1]
    return tuple(c * inv for c in a)


def _rf(num, den=_XP_ONE):
    """Reduced rational function with monic denominator."""
    num, den = _xp_norm(num), _xp_norm(den)
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return (_XP_ZERO, _XP_ONE)
    g = _xp_gcd(num, den)
    if len(g) > 1:
        num = _xp_divmod(num, g)[0]
        den = _xp_divmod(den, g)[0]
    inv = 1 / den[-1]
    return (tuple(c * inv for c in num), tuple(c * inv for c in den))


def _rf_add(a, b):
    return _rf(_xp_add(_xp_mul(a[0], b[1]), _xp_mul(b[0], a[1])), _xp_mul(a[1], b[1]))


def _rf_mul(a, b):
    return _rf(_xp_mul(a[0], b[0]), _xp_mul(a[1], b[1]))


def _rf_neg(a):
    return (_xp_neg(a[0]), a[1])


def _rf_inv(a):
    return _rf(a[1], a[0])


def _yp_norm(f):
    f = list(f)
    while f and not f[-1][0]:
        f.pop()
    return f


def _yp_divmod(f, g):
    g = _yp_norm(list(g))
    r = _yp_norm(list(f))
    q = [(_XP_ZERO, _XP_ONE)] * max(len(r) - len(g) + 1, 0)
    lead_inv = _rf_inv(g[-1])
    while len(r) >= len(g):
        k = len(r) - len(g)
        fac = _rf_mul(r[-1], lead_inv)
        q[k] = fac
        for j, d in enumerate(g):
            r[k + j] = _rf_add(r[k + j], _rf_neg(_rf_mul(fac, d)))
        r = _yp_norm(r[:-1])
        if not r:
            break
    return q, r


def _yp_gcd(f, g):
    f, g = _yp_norm(list(f)), _yp_norm(list(g))
    while g:
        f, g = g, _yp_divmod(f, g)[1]
    if not f:
        return f
    lead_inv = _rf_inv(f[-1])
    return [_rf_mul(c, lead_inv) for c in f]


def _table_to_yp(table: dict) -> list:
    n = max(y for (y, _) in table)
    out = []
    for ydeg in range(n + 1):
        col = {x: c for (y, x), c in table.items() if y == ydeg}
        width = max(col) + 1 if col else 1
        out.append(_rf(tuple(col.get(k, Fraction(0)) for k in range(width))))
    return _yp_norm(out)


def _yp_to_table(f) -> dict:
    table = {}
    for ydeg, (num, den) in enumerate(f):
        if den != _XP_ONE:
            raise InvariantViolation(
                "a monic divisor of a monic input must have polynomial coefficients"
            )
        for xdeg, c in enumerate(num):
            if c:
                table[(ydeg, xdeg)] = c
    return table


def _separable_table(F: InputPoly, make_separable: bool) -> dict:
    """F's coefficient table, reduced to the separable associate if needed.

    Returns F.table itself (same object) when gcd(F, dF/dY) is constant.
    """
    f = _table_to_yp(F.table)
    fp = [
        _rf_mul((tuple([Fraction(ydeg)]), _XP_ONE), c)
        for ydeg, c in enumerate(f)
        if ydeg >= 1
    ]
    g = _yp_gcd(f, fp)
    if len(g) <= 1:
        return F.table
    if not make_separable:
        raise NotSeparableInput(
            f"input has a repeated factor: gcd(F, dF/dY) = {_render_table(_yp_to_table(g))}"
        )
    h, rem = _yp_divmod(f, g)
    if _yp_norm(rem):
        raise InvariantViolation("gcd does not divide its argument")
    return _yp_to_table(h)


def separability_gate(F: InputPoly, make_separable: bool) -> SeriesPoly:
    """Pass F through when gcd(F, dF/dY) is constant; otherwise either
    return the separable associate F/gcd (flag set) or fail naming the gcd."""
    table = _separable_table(F, make_separable)
    return F.parsed if table is F.table else _table_to_seriespoly(table)


# ---------------------------------------------------------------------------
# Display: optional pruning of degree-1 levels, text and JSON emitters


def _eval_terms(target: Tower, images: Sequence, x: AlgElem) -> AlgElem:
    """Evaluate x's terms with the i-th generator replaced by images[i].

    Works for elements owned by any prefix of the tower the images describe,
    since a prefix element's exponent tuples are simply shorter.
    """
    out = target.zero
    for t, c in x.terms.items():
        m = target.scalar(c)
        for i, e in enumerate(t):
            if e:
                m = m * images[i] ** e
        out = out + m
    return out


def _display_view(tower: Tower, prune: bool):
    """(display tower, generator images) — an isomorphic presentation.

    With ``prune`` set, degree-1 levels are eliminated by substituting each
    linear generator's value into everything above it; the result has the
    same dimension.  Without it, the tower is returned as is.
    """
    if not prune or all(lvl.degree > 1 for lvl in tower.levels):
        return tower, [tower.gen(i) for i in range(len(tower.levels))]
    disp = Tower.rationals()
    images: list = []
    for lvl in tower.levels:
        mp = [_eval_terms(disp, images, c) for c in lvl.min_poly]
        if lvl.degree == 1:
            images.append(-mp[0])
            continue
        rc = tuple(_eval_terms(disp, images, c) for c in lvl.cert[0])
        sc = tuple(_eval_terms(disp, images, c) for c in lvl.cert[1])
        disp = adjoin_root(disp, Poly(disp, tuple(mp)), name=lvl.name, cert=(rc, sc))
        gens = [disp.gen(i) for i in range(len(disp.levels))]
        images = [_eval_terms(disp, gens, x) for x in images]
        images.append(disp.gen(len(disp.levels) - 1))
    return disp, images


def _coeff_piece(c: AlgElem, names: Sequence[str], mono: str) -> str:
    """One additive piece "coeff*mono" with 1/-1 coefficients elided."""
    if not mono:
        s = c.render(names)
        return f"({s})" if len(c.terms) > 1 else s
    if c.is_one():
        return mono
    if (-c).is_one():
        return f"-{mono}"
    s = c.render(names)
    if len(c.terms) > 1:
        return f"({s})*{mono}"
    return f"{s}*{mono}"


def _join_pieces(pieces: Sequence[str]) -> str:
    return " + ".join(pieces).replace("+ -", "- ")


def _render_level_poly(name: str, min_poly: Sequence, names: Sequence[str]) -> str:
    pieces = []
    deg = len(min_poly) - 1
    for d in range(deg, -1, -1):
        c = min_poly[d]
        if c.is_zero():
            continue
        mono = name if d == 1 else (f"{name}^{d}" if d > 1 else "")
        pieces.append(_coeff_piece(c, names, mono))
    return _join_pieces(pieces)


def _x_power(j: int, m: int) -> str:
    f = Fraction(j, m)
    if f == 1:
        return "X"
    if f.denominator == 1:
        return f"X^{f.numerator}"
    return f"X^({f.numerator}/{f.denominator})"


def _exponent_str(j: int, m: int) -> str:
    f = Fraction(j, m)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _term_map(c: AlgElem, names: Sequence[str]) -> dict:
    """JSON form of an algebra element: monomial string -> rational string."""
    out = {}
    for t in sorted(c.terms, reverse=True):
        mono = "*".join(
            f"{names[i]}^{e}" if e > 1 else names[i] for i, e in enumerate(t) if e
        )
        out[mono or "1"] = rat_to_str(c.terms[t])
    return out


def _factor_terms(branch: Branch, eta, disp, images, order: int) -> list:
    """The factor Y - eta's non-Y terms as (X-exponent j, coefficient) pairs."""
    identity = disp is branch.tower
    out = []
    for j in range(order):
        c = eta.coeff(j)
        if c.is_zero():
            continue
        c = c if identity else _eval_terms(disp, images, c)
        out.append((j, -c))
    return out


def _branch_views(branches: Sequence[Branch], prune: bool) -> list:
    return [(b, *_display_view(b.tower, prune)) for b in branches]


def _emit_expand_text(views, order: int, out) -> None:
    for k, (branch, disp, images) in enumerate(views, 1):
        out.write(
            f"branch {k}: dimension {disp.dimension}, ramification {branch.ramification}\n"
        )
        names = disp.names
        for i, lvl in enumerate(disp.levels):
            poly = _render_level_poly(lvl.name, lvl.min_poly, names)
            out.write(f"  {lvl.name}: {poly} = 0\n")
        for pf in branch.factors:
            pieces = ["Y"]
            for j, c in _factor_terms(branch, pf.eta, disp, images, order):
                mono = _x_power(j, branch.ramification) if j else ""
                pieces.append(_coeff_piece(c, names, mono))
            out.write(f"  ({_join_pieces(pieces)} + ...)\n")
        out.write("\n")


def _algebra_json(disp: Tower) -> list:
    names = disp.names
    return [
        {"gen": lvl.name, "poly": _render_level_poly(lvl.name, lvl.min_poly, names)}
        for lvl in disp.levels
    ]


def _branch_json(branch: Branch, disp: Tower, images, order: int) -> dict:
    names = disp.names
    expansions = []
    for pf in branch.factors:
        expansions.append(
            [
                {"coeff": _term_map(c, names), "exponent": _exponent_str(j, branch.ramification)}
                for j, c in _factor_terms(branch, pf.eta, disp, images, order)
            ]
        )
    return {
        "algebra": _algebra_json(disp),
        "dimension": disp.dimension,
        "ramification": branch.ramification,
        "expansions": expansions,
    }


# ---------------------------------------------------------------------------
# Subcommands


def _cmd_expand(F: SeriesPoly, input_str: str, args, out) -> int:
    branches = expand(F, mode=args.branches, fuel=args.fuel)
    views = _branch_views(branches, args.prune_trivial_levels)
    if args.format == "json":
        doc = {
            "input": input_str,
            "branches": [
                _branch_json(b, disp, images, args.order) for b, disp, images in views
            ],
        }
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        _emit_expand_text(views, args.order, out)
    return 0


def _cmd_verify(F: SeriesPoly, input_str: str, args, out) -> int:
    branches = expand(F, mode=args.branches, fuel=args.fuel)
    results = [verify_product(F, b, args.order) for b in branches]
    if args.format == "json":
        doc = {
            "input": input_str,
            "order": args.order,
            "branches": [
                {
                    "dimension": b.tower.dimension,
                    "ramification": b.ramification,
                    "ok": ok,
                }
                for b, ok in zip(branches, results)
            ],
            "ok": all(results),
        }
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        for k, (b, ok) in enumerate(zip(branches, results), 1):
            verdict = "holds" if ok else "FAILS"
            out.write(
                f"branch {k} (dimension {b.tower.dimension}, ramification "
                f"{b.ramification}): product identity {verdict} through T^{args.order - 1}\n"
            )
    return 0 if all(results) else 4


def _cmd_splits(F: SeriesPoly, input_str: str, args, out) -> int:
    branches = expand(F, mode=args.branches, fuel=args.fuel)
    hints = [harvest_root_hints(b, depth=_HINT_DEPTH) for b in branches]
    matrix = []
    for i, a in enumerate(branches):
        row = []
        for b in branches:
            row.append(splits_check(a.tower, b.tower, hints[i]) is not None)
        matrix.append(row)
    ok = all(all(row) for row in matrix)
    if args.format == "json":
        doc = {
            "input": input_str,
            "dimensions": [b.tower.dimension for b in branches],
            "matrix": matrix,
            "ok": ok,
        }
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        dims = [b.tower.dimension for b in branches]
        out.write(f"towers: {len(branches)} branches with dimensions {dims}\n")
        out.write("splits matrix (entry i,j: tower i splits tower j):\n")
        for i, row in enumerate(matrix, 1):
            cells = " ".join("T" if v else "F" for v in row)
            out.write(f"  {i}: {cells}\n")
    return 0 if ok else 4


def _cmd_normalize(F: SeriesPoly, input_str: str, args, out, parser) -> int:
    branches = expand(F, mode=args.branches, fuel=args.fuel)
    if args.pair is None:
        i, j = (0, 1) if len(branches) >= 2 else (0, 0)
    else:
        i, j = args.pair
    if not (0 <= i < len(branches) and 0 <= j < len(branches)):
        parser.error(f"--pair indices must be in 0..{len(branches) - 1}")
    A, B = branches[i].tower, branches[j].tower
    hints_a = harvest_root_hints(branches[i], depth=_HINT_DEPTH)
    hints_b = harvest_root_hints(branches[j], depth=_HINT_DEPTH)
    R, n, m = normalize_pair(A, B, hints_a, hints_b)
    disp, _ = _display_view(R, args.prune_trivial_levels)
    if args.format == "json":
        doc = {
            "input": input_str,
            "pair": [i, j],
            "dimensions": [A.dimension, B.dimension],
            "normal_form": {"algebra": _algebra_json(disp), "dimension": disp.dimension},
            "n": n,
            "m": m,
        }
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(
            f"towers: branch {i + 1} (dimension {A.dimension}) = A, "
            f"branch {j + 1} (dimension {B.dimension}) = B\n"
        )
        out.write(f"common refinement R (dimension {disp.dimension}):\n")
        for lvl in disp.levels:
            poly = _render_level_poly(lvl.name, lvl.min_poly, disp.names)
            out.write(f"  {lvl.name}: {poly} = 0\n")
        out.write(f"A ~ R^{n} (n = {n})\n")
        out.write(f"B ~ R^{m} (m = {m})\n")
    return 0


# ---------------------------------------------------------------------------
# Argument handling and entry point


class _Parser(argparse.ArgumentParser):
    """argparse maps usage errors to exit code 2; this tool reserves 2 for
    non-separable input, so usage errors exit with code 1 instead."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(1)


def _build_parser() -> _Parser:
    ap = _Parser(
        prog="puiseux",
        description="Exact Puiseux factorization of polynomials monic in Y.",
    )
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)
    helps = {
        "expand": "print the Puiseux factorization branch by branch",
        "verify": "re-multiply every branch's factors and compare with the input",
        "splits": "check that every branch algebra splits every other",
        "normalize": "reduce two branch algebras to a common refinement",
    }
    parsers = {}
    for name, text in helps.items():
        p = sub.add_parser(name, help=text, description=text)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--expr", metavar="STR", help="polynomial source text")
        src.add_argument("--input", metavar="FILE", help="read source from FILE ('-' = stdin)")
        p.add_argument("--order", type=int, default=16, metavar="N",
                       help="series order: report/verify coefficients below T^N (default 16)")
        p.add_argument("--branches", choices=("all", "first"), default="all",
                       help="follow every split part or only the first (default all)")
        p.add_argument("--make-separable", action="store_true",
                       help="replace a non-separable input by its separable associate")
        p.add_argument("--fuel", type=int, default=None, metavar="N",
                       help="bounded-search budget per slope (default 64 * Y-degree)")
        p.add_argument("--format", choices=("text", "json"), default="text",
                       help="output format (default text)")
        p.add_argument("--prune-trivial-levels", action="store_true",
                       help="eliminate degree-1 generators from displayed algebras")
        parsers[name] = p
    parsers["normalize"].add_argument(
        "--pair", nargs=2, type=int, default=None, metavar=("I", "J"),
        help="0-based branch indices to normalize (default: 0 1 when available)")
    return ap


def _read_source(args, parser) -> str:
    if args.expr is not None:
        return args.expr
    if args.input == "-":
        return sys.stdin.read()
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        parser.error(f"cannot read {args.input}: {e}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.order < 1:
        parser.error("--order must be at least 1")
    if args.fuel is not None and args.fuel < 1:
        parser.error("--fuel must be at least 1")
    out = sys.stdout
    try:
        ip = parse_poly(_read_source(args, parser))
        table = _separable_table(ip, args.make_separable)
        F = ip.parsed if table is ip.table else _table_to_seriespoly(table)
        input_str = _render_table(table)
        if args.command == "expand":
            return _cmd_expand(F, input_str, args, out)
        if args.command == "verify":
            return _cmd_verify(F, input_str, args, out)
        if args.command == "splits":
            return _cmd_splits(F, input_str, args, out)
        return _cmd_normalize(F, input_str, args, out, parser)
    except (ParseError, NotMonicInY) as e:
        sys.stderr.write(f"puiseux: {e}\n")
        return 1
    except (NotSeparableInput, NotSeparable) as e:
        sys.stderr.write(f"puiseux: {e}\n")
        return 2
    except FuelExhausted as e:
        sys.stderr.write(f"puiseux: {e}\n")
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
