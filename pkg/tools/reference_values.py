"""Independent reference computations for the test suite's expected values.

Every non-trivial constant asserted in tests/ was produced (or cross-checked)
by this script using sympy, which shares no code with the package.  Run it and
compare its output against the frozen literals whenever a constant looks
suspicious.
"""

from fractions import Fraction

import sympy
from sympy import Poly, Rational, Symbol, gcd, quo, series, sqrt, symbols


def main() -> None:
    X, Y, T = symbols("X Y T")

    print("== series inverse of 1 + T/2 - T^2/8, through T^5")
    inv = series(1 / (1 + T / 2 - T**2 / 8), T, 0, 6).removeO()
    print("  ", sympy.expand(inv))

    print("== sqrt(1+X) series through X^6 (Hensel factor for Y^2 - 1 - X)")
    s = series(sqrt(1 + X), X, 0, 7).removeO()
    print("  ", sympy.expand(s))

    print("== separable associate of Y^3 - 3Y + 2")
    f = Poly(Y**3 - 3 * Y + 2, Y)
    g = gcd(f, f.diff(Y))
    print("   gcd(f, f') =", g.as_expr(), "   f/gcd =", quo(f, g).as_expr())

    print("== separable associate of (Y-X)^2 over Q(X)")
    f2 = Poly(Y**2 - 2 * X * Y + X**2, Y, domain=sympy.QQ.frac_field(X))
    g2 = gcd(f2, f2.diff(Y))
    print("   gcd =", g2.as_expr(), "   f/gcd =", quo(f2, g2).as_expr())

    print("== telescoping: (sum T^k) * (1 - T) == 1, first 8 coefficients")
    tele = sympy.expand(series(1 / (1 - T), T, 0, 8).removeO() * (1 - T))
    print("  ", sympy.Poly(tele, T).all_coeffs()[::-1][:8])

    print("== Tschirnhaus: Y^2 + 2XY at Y = W - X and Y^2 + 2XY + X^3")
    W = Symbol("W")
    print("  ", sympy.expand((W - X) ** 2 + 2 * X * (W - X)))
    print("  ", sympy.expand((W - X) ** 2 + 2 * X * (W - X) + X**3))

    print("== Puiseux roots of Y^2 - X at X = T^2, Y^2 - X^3 at X = T^2")
    print("   (Y-T)(Y+T) =", sympy.expand((Y - T) * (Y + T)))
    print("   (Y-T^3)(Y+T^3) =", sympy.expand((Y - T**3) * (Y + T**3)))

    print("== the quartic's Puiseux expansions through X^5 (cross-check)")
    # Y^4 - 3Y^2 + XY + X^2: two roots through Y=0 (X-coefficient solves
    # 3a^2 - a - 1 = 0, i.e. a = (1 +- sqrt(13))/6) and two through Y = +-sqrt(3).
    # Solve order by order: substitute prefix + corr*X^k, kill the lowest
    # X-coefficient that involves corr (linear except at the branch point).
    F = Y**4 - 3 * Y**2 + X * Y + X**2
    corr = Symbol("corr")

    def extend(prefix, order, pick=None):
        expr = sympy.expand(F.subs(Y, prefix + corr * X**order))
        poly = Poly(expr, X)
        for power in range(0, 4 * order + 5):
            c = sympy.expand(poly.coeff_monomial((power,)))
            if c == 0:
                continue
            if corr not in c.free_symbols:
                raise AssertionError(f"stuck at X^{power}: {c}")
            sols = sympy.solve(c, corr)
            sol = sols[pick] if pick is not None else sols[0]
            return sympy.expand(prefix + sympy.radsimp(sol) * X**order)
        raise AssertionError("no constraining coefficient found")

    for name, seed, pick in (
        ("factor1 (a1 = -(1+sqrt13)/6... i.e. eta coeff (1+sqrt13)/6?)", 0, 0),
        ("factor2", 0, 1),
    ):
        eta = sympy.Integer(0)
        eta = extend(eta, 1, pick=pick)
        for order in range(2, 6):
            eta = extend(eta, order)
        print("   ", name, "eta =", sympy.expand(sympy.radsimp(eta)))
    for name, seed in (("factor3", sqrt(3)), ("factor4", -sqrt(3))):
        eta = sympy.sympify(seed)
        for order in range(1, 6):
            eta = extend(eta, order)
        print("   ", name, "eta =", sympy.expand(sympy.radsimp(eta)))
    print("   printed-coefficient convention: factor = Y - eta, so displayed")
    print("   'Y + c1 X + c3 X^3 + ...' lines carry c_i = -[X^i] eta.")
    b = sqrt(13) / 6
    print("   factor1 printed X^5 coefficient should be -415b/41067 - 29/1458 =",
          sympy.nsimplify(-415 * b / 41067 - Rational(29, 1458)))
    print("   mirrored (b -> -b) value for factor2:",
          sympy.nsimplify(415 * b / 41067 - Rational(29, 1458)))

    print("== bezout for G0=Y-1, H0=Y+1 (expect -1/2, 1/2)")
    u, v, g = sympy.gcdex(Poly(Y - 1, Y), Poly(Y + 1, Y))
    print("   Hstar =", u.as_expr(), " Gstar =", v.as_expr(), " gcd =", g.as_expr())

    print("== first coefficients of the factor-3 eta as exact rationals")
    # c - X/6 - 5c X^2/72 - 7 X^3/162 - 185 c X^4/10368 - 29 X^5/1458
    vals = {
        "X^1": Fraction(-1, 6),
        "X^2(c)": Fraction(-5, 72),
        "X^3": Fraction(-7, 162),
        "X^4(c)": Fraction(-185, 10368),
        "X^5": Fraction(-29, 1458),
    }
    print("   ", vals)


if __name__ == "__main__":
    main()
