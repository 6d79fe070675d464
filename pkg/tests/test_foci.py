from fractions import Fraction

import pytest

from conchoidal.conchoid import Verdict
from conchoidal.foci import Line, candidate_locus, find_double_rational_foci, line_delta, sweep_line
from conchoidal.geometry import Focus, norm_sq
from conchoidal.gfield import I, try_sqrt
from conchoidal.poly import BiPoly, Poly

from .oracles import numeric_is_square

AB = ("a", "b")
a, b = BiPoly.gen("a", AB), BiPoly.gen("b", AB)
h = Poly.x("h")
SQ5 = try_sqrt(5, allow_extend=True)
SQ2 = try_sqrt(2, allow_extend=True)


def _up_to_unit(p: Poly, q: Poly) -> bool:
    return p.degree == q.degree and p.monic() == q.monic()


@pytest.fixture(scope="module")
def reports(curves):
    return {n: find_double_rational_foci(curves[n]) for n in ("parabola", "circle", "ellipse", "hyperbola")}


def _line(rep, orientation, constant):
    for sw in rep.sweeps:
        if sw.line == Line(orientation, constant):
            return sw
    raise AssertionError(f"no sweep for {orientation} {constant}")


def test_parabola(reports):
    rep = reports["parabola"]
    assert set(rep.foci) == {Focus(0, Fraction(1, 4))}
    # variables swapped relative to the x = t^2 convention
    assert rep.locus.R.equal_up_to_unit(a * a - b)
    assert rep.locus.D1.equal_up_to_unit(a * 4 + b * 4 * I - I)
    assert rep.locus.D2.equal_up_to_unit(a * 4 - b * 4 * I + I)
    sw = _line(rep, "plus", I / 4)
    assert _up_to_unit(sw.condition, (1 - 4 * h) * 128)


def test_parabola_delta_factorization(curves):
    # 16*Delta = (4t^2 + 4it + 1 - 8h)(2t - i)^2
    delta = line_delta(curves["parabola"], Line("plus", I / 4))
    V = delta.vars
    t_, h_ = BiPoly.gen("t", V), BiPoly.gen("h", V)
    expected = (t_ * t_ * 4 + t_ * 4 * I + 1 - h_ * 8) * (t_ * 2 - I) ** 2 / 16
    assert delta == expected


def test_circle(reports):
    rep = reports["circle"]
    assert set(rep.foci) == {Focus(0, 0)}
    assert rep.locus.R.equal_up_to_unit(a * a + b * b - 1)
    u = a + b * I
    assert rep.locus.D1.equal_up_to_unit((u - I) * u)
    sw = _line(rep, "plus", 0)
    assert _up_to_unit(sw.condition, h * h * (2 * h - 1) * 16)
    rejected = {c.point: c for c in rep.rejected}
    bad = rejected[Focus(-I / 2, Fraction(1, 2))]
    assert bad.verdict is not Verdict.DoubleRational


def test_ellipse_with_extension(reports):
    rep = reports["ellipse"]
    assert set(rep.foci) == {Focus(0, SQ5), Focus(0, -SQ5), Focus(I * SQ5, 0), Focus(-I * SQ5, 0)}
    assert rep.locus.R.equal_up_to_unit(a * a / 4 + b * b / 9 - 1)
    u = a + b * I
    assert rep.locus.D1.equal_up_to_unit((u + SQ5 * I) * (u - SQ5 * I) * (u - 3 * I))
    sw = _line(rep, "plus", -I * SQ5)
    expected = (h * h + h * (SQ5 * 3 - 3) / 2 + (5 - SQ5 * 3) / 2) * h * 32
    assert _up_to_unit(sw.condition, expected)
    alpha = (3 - SQ5) / 2
    on_line = {c.h: c for c in sw.candidates}
    assert set(on_line) == {alpha, -SQ5, 0}
    assert on_line[alpha].verdict is Verdict.Rational
    assert any(c.h == alpha for c in rep.rejected)


def test_hyperbola(reports):
    rep = reports["hyperbola"]
    assert set(rep.foci) == {Focus(SQ2, 0), Focus(-SQ2, 0), Focus(0, I * SQ2), Focus(0, -I * SQ2)}
    assert rep.locus.R.equal_up_to_unit(a * a - b * b - 1)
    u = a + b * I
    assert rep.locus.D1.equal_up_to_unit((u - SQ2) * (u + SQ2) * (u + 1))


@pytest.mark.parametrize("name", ["parabola", "circle", "ellipse", "hyperbola"])
def test_verdicts_agree_with_numeric_oracle(reports, curves, name):
    # double rational off the curve <=> |P - A|^2 is a square
    for c in reports[name].candidates:
        if c.on_curve:
            continue
        sq = numeric_is_square(norm_sq(curves[name], c.point))
        assert sq == (c.verdict is Verdict.DoubleRational), (name, c.point)


def test_locus_lines_cover_foci(reports):
    for rep in reports.values():
        for A in rep.foci:
            assert (rep.locus.D1.evaluate({"a": A.a, "b": A.b}).is_zero()
                    or rep.locus.D2.evaluate({"a": A.a, "b": A.b}).is_zero()
                    or rep.locus.R.evaluate({"a": A.a, "b": A.b}).is_zero())


def test_generic_line_has_no_candidates(curves):
    sw = sweep_line(curves["parabola"], Line("plus", 5), verify=False)
    assert sw.candidates == [] or all(c.point.a - 5 + I * c.point.b == 0 for c in sw.candidates)


def test_no_extend_limits_locus(curves):
    loc = candidate_locus(curves["parabola"], allow_extend=False)
    assert len(loc.lines) == 2
