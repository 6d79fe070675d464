"""Hypothesis-driven invariants complementing the fixed-seed acceptance sweep."""

from fractions import Fraction

from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from conchoidal.cli.parser import parse_constant, parse_ratfn
from conchoidal.geometry import ParamCurve, implicitize, is_proper
from conchoidal.gfield import FieldElem, try_sqrt
from conchoidal.poly import BiPoly, Poly, gcdex
from conchoidal.poly import multivariate as mv
from conchoidal.ratfn import RatFn

SETTINGS = settings(max_examples=60, deadline=None, derandomize=True,
                    suppress_health_check=[HealthCheck.too_slow])

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=9)
gaussians = st.builds(FieldElem.gaussian, rationals, rationals)


def polys(max_deg=4, elems=gaussians):
    return st.lists(elems, min_size=1, max_size=max_deg + 1).map(Poly)


def ratfns(max_deg=3):
    nonzero = polys(max_deg).filter(lambda p: not p.is_zero())
    return st.builds(RatFn, polys(max_deg), nonzero)


@SETTINGS
@given(ratfns())
def test_render_parse_round_trip(f):
    assert parse_ratfn(str(f)) == f


@SETTINGS
@given(gaussians, st.sampled_from([2, 3, 5, -7]))
def test_tower_constant_round_trip(c, n):
    x = c * try_sqrt(n, allow_extend=True) + c * c
    assert parse_constant(str(x)) == x


@SETTINGS
@given(polys(), polys())
def test_bezout_identity(p, q):
    assume(not (p.is_zero() and q.is_zero()))
    g, s, t = gcdex(p, q)
    assert s * p + t * q == g


@SETTINGS
@given(polys(3), polys(3), polys(2))
def test_bipoly_exquo_inverts_mul(p, q, r):
    vars = ("a", "t")
    P = BiPoly.from_poly(p, vars, "a") * BiPoly.from_poly(q, vars, "t") + BiPoly.from_poly(r, vars, "t")
    Q = BiPoly.from_poly(q, vars, "a") + BiPoly.gen("t", vars)
    assert (P * Q).exquo(Q) == P


@SETTINGS
@given(polys(3), polys(3))
def test_bivariate_gcd_recovers_common_factor(p, q):
    vars = ("a", "t")
    A, T = BiPoly.gen("a", vars), BiPoly.gen("t", vars)
    common = A * T - 1
    P = common * (BiPoly.from_poly(p, vars, "t") + A)
    Q = common * (BiPoly.from_poly(q, vars, "a") + T * T)
    g = mv.gcd(P, Q, "t")
    assert P.exquo(g) * g == P
    assert g.degree("t") >= 1


@SETTINGS
@given(ratfns(2), rationals, rationals, rationals, rationals)
def test_mobius_composition_round_trip(f, p, q, u, v):
    assume(p * v - q * u != 0)
    t = RatFn.x()
    m = (p * t + q) / (u * t + v)
    inv = (v * t - q) / (-u * t + p)
    assert f.compose(m).compose(inv) == f


@SETTINGS
@given(st.lists(st.integers(-4, 4), min_size=9, max_size=9))
def test_implicit_equation_vanishes_on_random_conics(cs):
    t = RatFn.x()
    den = Poly([cs[0], cs[1], 1])
    assume(den.degree == 2)
    x = RatFn(Poly(cs[2:5]), den)
    y = RatFn(Poly(cs[5:8]), den)
    assume(not (x.is_constant() and y.is_constant()))
    P = ParamCurve(x, y)
    assume(is_proper(P))
    R = implicitize(P)
    acc = RatFn.const(0)
    for (i, j), c in R.terms.items():
        acc = acc + c * x ** i * y ** j
    assert acc.is_zero()


@SETTINGS
@given(ratfns(2))
def test_square_detection(f):
    assume(not f.is_zero())
    assert (f * f).is_square()
    m = (f * f).try_square_root()
    assert m * m == f * f
