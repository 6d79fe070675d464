import random
from fractions import Fraction

import pytest

from conchoidal.errors import DegenerateImage, DivisionByZero
from conchoidal.geometry import (
    ConchoidProblem, Exclusion, Focus, ParamCurve, excluded_case, implicitize, is_proper, norm_sq, on_curve,
)
from conchoidal.gfield import I
from conchoidal.poly import BiPoly
from conchoidal.ratfn import RatFn

from .oracles import eval_ratfn_numeric, preimage_count

t = RatFn.x()
AB = ("a", "b")
a, b = BiPoly.gen("a", AB), BiPoly.gen("b", AB)


def test_norm_sq(curves):
    P = curves["parabola"]
    assert norm_sq(P, Focus(0, 0)) == t ** 2 * (t ** 2 + 1)
    assert norm_sq(P, Focus(0, Fraction(1, 4))) == Fraction(1, 16) * (1 + 4 * t ** 2) ** 2
    assert norm_sq(P, Focus(1, 1))(1) == 0


def test_norm_sq_numeric(curves):
    rng = random.Random(3)
    P, A = curves["ellipse"], Focus(Fraction(1, 2), -2)
    n = norm_sq(P, A)
    for _ in range(5):
        t0 = Fraction(rng.randint(-20, 20), rng.randint(1, 7))
        x, y = P(t0)
        assert n(t0) == (x - A.a) ** 2 + (y - A.b) ** 2


def test_properness(curves):
    assert is_proper(curves["parabola"])
    assert not is_proper(ParamCurve(t ** 2, t ** 4))
    assert is_proper(ParamCurve(2 * t / (t ** 2 + 1), (t ** 2 - 1) / (t ** 2 + 1)))
    assert not is_proper(ParamCurve((t ** 2 + 1) / t ** 2, 1 / t ** 4))


def test_properness_brute_force(curves):
    for name, P in curves.items():
        expected = preimage_count(P, complex(0.37, 0.21)) == 1
        assert P.proper == expected, name


def test_degenerate():
    with pytest.raises(DegenerateImage):
        ParamCurve(RatFn.const(1), RatFn.const(2))
    with pytest.raises(DivisionByZero):
        ConchoidProblem(ParamCurve(t, t), Focus(0, 0), 0)


def test_implicitization(curves):
    assert curves["parabola"].implicit.equal_up_to_unit(a * a - b)
    assert curves["circle"].implicit.equal_up_to_unit(a * a + b * b - 1)
    assert curves["ellipse"].implicit.equal_up_to_unit(a * a / 4 + b * b / 9 - 1)
    # non-proper input still yields the squarefree equation
    assert implicitize(ParamCurve(t ** 2, t ** 4)).equal_up_to_unit(a * a - b)


def test_implicit_vanishes_on_curve(curves):
    for P in curves.values():
        R = P.implicit
        total = RatFn.const(0)
        for (i, j), c in R.terms.items():
            total = total + P.x ** i * P.y ** j * c
        assert total.is_zero()


def test_exclusions():
    d = 3
    circle_d = ParamCurve(2 * t / (t ** 2 + 1) * d, (t ** 2 - 1) / (t ** 2 + 1) * d)
    assert excluded_case(ConchoidProblem(ParamCurve(t, I * t), Focus(5, 7), 2)) is Exclusion.IsotropicLine
    assert excluded_case(ConchoidProblem(ParamCurve(t + 1, -I * t), Focus(0, 0), 1)) is Exclusion.IsotropicLine
    assert excluded_case(ConchoidProblem(ParamCurve(t, t), Focus(0, 0), 1)) is Exclusion.LineThroughFocus
    assert excluded_case(ConchoidProblem(ParamCurve(t, t), Focus(0, 1), 1)) is None
    assert excluded_case(ConchoidProblem(circle_d, Focus(0, 0), d)) is Exclusion.CircleAtFocusRadiusD
    assert excluded_case(ConchoidProblem(circle_d, Focus(0, 0), 2)) is None


def test_on_curve(curves):
    assert on_curve(curves["parabola"], Focus(3, 9))
    assert not on_curve(curves["parabola"], Focus(0, Fraction(1, 4)))
    assert not on_curve(curves["circle"], Focus(0, 0))
