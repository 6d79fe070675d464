"""Exact roots of univariate polynomials inside the Gaussian tower.

Roots of degree one and two pieces are solved directly.  Higher degree
polynomials are first brought down to ``Q(i)`` by a norm, factored there
(sympy's ``QQ_I`` factorization backs this step) and then split by gcds.
Anything left with an irreducible piece of degree above two raises
ExtensionLimitExceeded.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import ExtensionLimitExceeded
from ..gfield import FieldElem, try_sqrt
from .univariate import Poly, gcd, sqfree_decompose


def _solve_low(f: Poly, allow_extend: bool):
    f = f.monic()
    if f.degree == 1:
        return [-f.coeff(0)]
    b, c = f.coeff(1), f.coeff(0)
    disc = b * b - 4 * c
    s = try_sqrt(disc, allow_extend=allow_extend)
    return [(-b + s) / 2, (-b - s) / 2]


def _norm_to_gaussian(f: Poly) -> Poly:
    """Product of all generator conjugates of ``f``; its coefficients lie in Q(i)."""
    tower = f.tower()
    n = f
    for j in range(tower.ngen):
        n = n * n.map_coeffs(lambda c, j=j: c.in_tower(tower).conjugate_generator(j))
    return n


def _gaussian_factors(f: Poly):
    """Irreducible factors over Q(i) of a polynomial with Gaussian coefficients."""
    import sympy
    from sympy.polys.domains import QQ_I

    x = sympy.Symbol("x")
    coeffs = []
    for c in reversed(f.coeffs):
        re, im = c.gauss_parts()
        coeffs.append(sympy.Rational(re.numerator, re.denominator)
                      + sympy.I * sympy.Rational(im.numerator, im.denominator))
    sp = sympy.Poly(coeffs, x, domain=QQ_I)
    _, facs = sp.factor_list()
    out = []
    for g, _ in facs:
        cs = []
        for c in reversed(g.rep.to_list()):
            re = Fraction(int(c.x.numerator), int(c.x.denominator))
            im = Fraction(int(c.y.numerator), int(c.y.denominator))
            cs.append(FieldElem.gaussian(re, im))
        out.append(Poly(cs, f.var))
    return out


def _squarefree_roots(f: Poly, allow_extend: bool):
    if f.degree <= 0:
        return []
    if f.degree <= 2:
        return _solve_low(f, allow_extend)
    norm = f if f.tower().ngen == 0 else _norm_to_gaussian(f)
    pieces = []
    rest = f
    for g in _gaussian_factors(norm):
        if rest.degree <= 0:
            break
        h = gcd(rest, g)
        if h.degree > 0:
            pieces.append(h)
            rest = rest.exquo(h)
    out = []
    for h in pieces:
        if h.degree > 4 or h.degree == 3 or (h.degree == 4 and not allow_extend):
            raise ExtensionLimitExceeded(f"{h} has an irreducible factor of degree {h.degree}")
        out.extend(_solve_quartic(h) if h.degree == 4 else _solve_low(h, allow_extend))
    return out


def _solve_quartic(f: Poly):
    """Ferrari's method, for quartics whose roots are nested square roots."""
    f = f.monic()
    shift = -f.coeff(3) / 4
    g = f.compose(Poly([shift, 1], f.var))
    p, q, r = g.coeff(2), g.coeff(1), g.coeff(0)
    if q.is_zero():
        out = []
        for y in _solve_low(Poly([r, p, 1], f.var), True):
            s = try_sqrt(y, allow_extend=True)
            out.extend((s + shift, -s + shift))
        return out
    resolvent = Poly([-q * q, 2 * p * p - 8 * r, 8 * p, 8], f.var)
    last = None
    for m in _rational_roots(resolvent):
        try:
            s = try_sqrt(2 * m, allow_extend=True)
            out = []
            for sg in (1, -1):
                quad = Poly([p / 2 + m + sg * q / (2 * s), -sg * s, 1], f.var)
                out.extend(x + shift for x in _solve_low(quad, True))
            return out
        except ExtensionLimitExceeded as e:
            last = e
    raise last or ExtensionLimitExceeded(f"{f} is not solvable by nested square roots in the tower")


def _rational_roots(f: Poly):
    """Roots of ``f`` lying in the tower of its coefficients."""
    norm = f if f.tower().ngen == 0 else _norm_to_gaussian(f)
    out = []
    for g in _gaussian_factors(norm):
        h = gcd(f, g)
        if h.degree == 1:
            out.append(-h.coeff(0) / h.coeff(1))
    return out


def roots(p: Poly, allow_extend: bool = True):
    """All roots of ``p`` with multiplicities, as ``[(root, multiplicity)]``.

    Raises ExtensionLimitExceeded when a root needs more than the tower can
    hold, and NotASquare for a quadratic piece when ``allow_extend`` is off.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has every value as a root")
    out = []
    for f, m in sqfree_decompose(p).pairs:
        out.extend((r, m) for r in _squarefree_roots(f, allow_extend))
    return out


def distinct_roots(p: Poly, allow_extend: bool = True):
    return [r for r, _ in roots(p, allow_extend)]
