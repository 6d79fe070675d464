"""Plane curves given by rational parametrizations, foci and excluded cases."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import DegenerateImage, DivisionByZero
from .gfield import FieldElem, as_elem
from .poly import BiPoly, Poly, lcm
from .poly import multivariate as mv
from .ratfn import RatFn

FOCUS_VARS = ("a", "b")


def _ratfn(x, var="t") -> RatFn:
    if isinstance(x, RatFn):
        return x.rename(var)
    if isinstance(x, Poly):
        return RatFn(x.rename(var))
    return RatFn.const(x, var)


class ParamCurve:
    """The curve ``t -> (x(t), y(t))``; properness and implicit equation are computed lazily."""

    def __init__(self, x, y):
        self.x = _ratfn(x)
        self.y = _ratfn(y)
        if self.x.is_constant() and self.y.is_constant():
            raise DegenerateImage(f"({self.x}, {self.y}) parametrizes a point, not a curve")

    @classmethod
    def from_polys(cls, p1: Poly, p2: Poly, p: Poly) -> "ParamCurve":
        return cls(RatFn(p1, p), RatFn(p2, p))

    @cached_property
    def common_denominator_form(self):
        """``(p1, p2, p)`` with ``x = p1/p``, ``y = p2/p`` and ``gcd(p1, p2, p) = 1``."""
        p = lcm(self.x.den, self.y.den)
        return self.x.num * p.exquo(self.x.den), self.y.num * p.exquo(self.y.den), p

    @cached_property
    def proper(self) -> bool:
        return is_proper(self)

    @cached_property
    def implicit(self) -> BiPoly:
        return implicitize(self)

    @property
    def degree(self) -> int:
        return max(self.x.degree, self.y.degree)

    def __call__(self, t0):
        return self.x(t0), self.y(t0)

    def compose(self, phi: RatFn) -> "ParamCurve":
        return ParamCurve(self.x.compose(phi), self.y.compose(phi))

    def components(self):
        return self.x, self.y

    def tower(self):
        from .gfield import unify_towers

        return unify_towers(self.x.tower(), self.y.tower())

    def __eq__(self, other):
        return isinstance(other, ParamCurve) and self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))

    def __repr__(self):
        return f"ParamCurve({str(self.x)!r}, {str(self.y)!r})"


@dataclass(frozen=True)
class Focus:
    a: FieldElem
    b: FieldElem

    def __post_init__(self):
        object.__setattr__(self, "a", as_elem(self.a))
        object.__setattr__(self, "b", as_elem(self.b))

    def __iter__(self):
        return iter((self.a, self.b))

    def __str__(self):
        return f"({self.a}, {self.b})"


@dataclass(frozen=True)
class ConchoidProblem:
    curve: ParamCurve
    focus: Focus
    distance: FieldElem

    def __post_init__(self):
        if not isinstance(self.focus, Focus):
            object.__setattr__(self, "focus", Focus(*self.focus))
        d = as_elem(self.distance)
        if d.is_zero():
            raise DivisionByZero("the conchoid distance must be nonzero")
        object.__setattr__(self, "distance", d)


class Exclusion(enum.Enum):
    IsotropicLine = "conchoid is empty"
    LineThroughFocus = "conchoid equals the base curve"
    CircleAtFocusRadiusD = "focus union circle centered at focus, radius 2d"

    @property
    def description(self) -> str:
        return self.value


def norm_sq(P: ParamCurve, A: Focus) -> RatFn:
    """``(x - a)**2 + (y - b)**2``."""
    dx = P.x - A.a
    dy = P.y - A.b
    return dx * dx + dy * dy


def _pair_poly(f: RatFn, vars) -> BiPoly:
    """Numerator of ``f(s) - f(t)`` as a polynomial in ``vars = (s, t)``."""
    s, t = vars

    def lift(p: Poly, v: str) -> BiPoly:
        return BiPoly.from_poly(p, vars, v)

    return lift(f.num, s) * lift(f.den, t) - lift(f.num, t) * lift(f.den, s)


def is_proper(P: ParamCurve) -> bool:
    """Generic injectivity: ``gcd(G1, G2)`` has degree one in ``s``."""
    vars = ("s", "t")
    g1, g2 = _pair_poly(P.x, vars), _pair_poly(P.y, vars)
    return mv.gcd(g1, g2, "s").degree("s") == 1


def implicitize(P: ParamCurve) -> BiPoly:
    """Squarefree ``R(a, b)`` vanishing on the image: ``Res_t(p1 - a p, p2 - b p)``."""
    p1, p2, p = P.common_denominator_form
    vars = ("a", "b", "t")
    a, b = BiPoly.gen("a", vars), BiPoly.gen("b", vars)
    lift = lambda f: BiPoly.from_poly(f, vars, "t")
    d1 = lift(p1) - a * lift(p)
    d2 = lift(p2) - b * lift(p)
    r = mv.resultant(d1, d2, "t").with_vars(FOCUS_VARS)
    if r.is_zero():
        raise DegenerateImage(f"{P} has no implicit equation")
    main = "b" if r.degree("b") > 0 else "a"
    return mv.squarefree_part2(r, main)


def on_curve(P: ParamCurve, A: Focus) -> bool:
    return P.implicit.evaluate({"a": A.a, "b": A.b}).is_zero()


def _line_coeffs(R: BiPoly):
    """``(alpha, beta, gamma)`` for ``R = alpha a + beta b + gamma``."""
    get = lambda e: R.terms.get(e, as_elem(0))
    return get((1, 0)), get((0, 1)), get((0, 0))


def excluded_case(prob: ConchoidProblem):
    """First matching :class:`Exclusion`, or ``None``."""
    R = prob.curve.implicit
    A = prob.focus
    if R.degree() == 1:
        alpha, beta, _ = _line_coeffs(R)
        if (alpha * alpha + beta * beta).is_zero():
            return Exclusion.IsotropicLine
        if R.evaluate({"a": A.a, "b": A.b}).is_zero():
            return Exclusion.LineThroughFocus
    elif R.degree() == 2:
        a, b = BiPoly.gen("a", FOCUS_VARS), BiPoly.gen("b", FOCUS_VARS)
        circle = (a - A.a) ** 2 + (b - A.b) ** 2 - prob.distance * prob.distance
        if R.equal_up_to_unit(circle):
            return Exclusion.CircleAtFocusRadiusD
    return None


def point_on_param(P: ParamCurve, t0) -> Focus:
    x, y = P(as_elem(t0) if isinstance(t0, (int, Fraction)) else t0)
    return Focus(x, y)
