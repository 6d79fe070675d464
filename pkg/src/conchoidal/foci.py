"""Search for the foci at which a curve's conchoid is double rational.

A double rational focus ``(a, b)`` makes ``|P(t) - (a, b)|**2`` a square.
Necessarily ``R(a, b) D1(a, b) D2(a, b) = 0`` where ``R`` is the implicit
equation and ``D1``, ``D2`` come from discriminants of
``Sigma(u, t) = (p1 +- i*p2)(t) - u*p(t)``; these depend only on
``u = a +- i*b``, so away from the curve the locus is a finite set of
isotropic lines.  Each line is swept: along ``Q(h)`` the odd part of
``|P(t) - Q(h)|**2`` must degenerate, which pins ``h`` down to finitely many
values.  Every resulting point is confirmed by a full classification.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .conchoid import ConchoidReport, Verdict, classify
from .errors import ExcludedCurve, ExtensionLimitExceeded, InternalCheckFailed
from .geometry import ConchoidProblem, Exclusion, Focus, ParamCurve, excluded_case, on_curve
from .gfield import I, FieldElem
from .poly import BiPoly, Poly, squarefree_part
from .poly import multivariate as mv
from .poly.roots import distinct_roots
from .ratfn import RatFn

PLUS, MINUS = "plus", "minus"


@dataclass(frozen=True)
class Line:
    """The isotropic line ``a + i*b = constant`` (``plus``) or ``a - i*b = constant`` (``minus``)."""

    orientation: str
    constant: FieldElem

    @property
    def sign(self) -> int:
        return 1 if self.orientation == PLUS else -1

    @property
    def param(self):
        """``(Q1(h), Q2(h))`` with ``Q2 = h``."""
        h = RatFn.x("h")
        return (RatFn.const(self.constant, "h") - h * (I * self.sign), h)

    def point(self, h0) -> Focus:
        return Focus(self.constant - I * self.sign * h0, h0)

    def __str__(self):
        op = "+" if self.orientation == PLUS else "-"
        return f"a {op} i*b = {self.constant}"


@dataclass
class CandidateLocus:
    R: BiPoly
    D1: BiPoly
    D2: BiPoly
    D_plus: Poly
    D_minus: Poly
    lines: list


@dataclass
class FocusCandidate:
    point: Focus
    line_index: int | None
    h: FieldElem | None
    verdict: Verdict
    exclusion: Exclusion | None = None
    on_curve: bool = False
    report: ConchoidReport | None = None
    note: str | None = None

    @property
    def accepted(self) -> bool:
        return self.verdict is Verdict.DoubleRational


@dataclass
class LineSweep:
    line: Line
    delta: BiPoly
    f_odd: BiPoly
    condition: Poly | None
    candidate_poly: Poly | None
    candidates: list = field(default_factory=list)
    generic: bool = False


@dataclass
class FociReport:
    curve: ParamCurve
    locus: CandidateLocus
    sweeps: list
    candidates: list
    on_curve_note: str

    @property
    def accepted(self):
        return [c for c in self.candidates if c.accepted]

    @property
    def rejected(self):
        return [c for c in self.candidates if not c.accepted]

    @property
    def foci(self):
        return [c.point for c in self.accepted]


def _isotropic_d(P: ParamCurve, sign: int) -> Poly:
    """Squarefree part of ``Res_t(Sigma, dSigma/dt)`` as a polynomial in ``u``."""
    p1, p2, p = P.common_denominator_form
    vars = ("u", "t")
    lift = lambda f: BiPoly.from_poly(f, vars, "t")
    sigma = lift(p1) + lift(p2) * (I * sign) - BiPoly.gen("u", vars) * lift(p)
    if sigma.degree("t") < 1:
        raise ExcludedCurve("the curve is an isotropic line")
    r = mv.discriminant(sigma, "t", times_lc=True).to_poly("u")
    if r.is_zero():
        raise ExcludedCurve(f"the discriminant in direction {sign:+d} vanishes identically")
    return squarefree_part(r)


def _compose_univariate(D: Poly, u: BiPoly) -> BiPoly:
    acc = BiPoly.const(0, u.vars)
    for c in reversed(D.coeffs):
        acc = acc * u + c
    return acc


def candidate_locus(P: ParamCurve, allow_extend: bool = True) -> CandidateLocus:
    dp, dm = _isotropic_d(P, 1), _isotropic_d(P, -1)
    lines = []
    for D, orient in ((dp, PLUS), (dm, MINUS)):
        if D.degree > 0:
            lines.extend(Line(orient, r) for r in distinct_roots(D, allow_extend=allow_extend))
    return CandidateLocus(P.implicit, _compose_univariate(dp, _ab_u(1)), _compose_univariate(dm, _ab_u(-1)), dp, dm, lines)


def _ab_u(sign: int) -> BiPoly:
    vars = ("a", "b")
    return BiPoly.gen("a", vars) + BiPoly.gen("b", vars) * (I * sign)


def line_delta(P: ParamCurve, line: Line) -> BiPoly:
    """``Delta(h, t) = (p1 - Q1(h) p)**2 + (p2 - Q2(h) p)**2``."""
    p1, p2, p = P.common_denominator_form
    vars = ("h", "t")
    lift = lambda f: BiPoly.from_poly(f, vars, "t")
    h = BiPoly.gen("h", vars)
    q1 = h * (-I * line.sign) + line.constant
    d1 = lift(p1) - q1 * lift(p)
    d2 = lift(p2) - h * lift(p)
    return d1 * d1 + d2 * d2


def _verify_point(P: ParamCurve, point: Focus, allow_extend: bool):
    """Classify at ``point``; distance 1, or 2 when 1 hits the circle exclusion."""
    prob = ConchoidProblem(P, point, 1)
    if excluded_case(prob) is Exclusion.CircleAtFocusRadiusD:
        prob = ConchoidProblem(P, point, 2)
    try:
        return classify(prob, allow_extend=allow_extend), None
    except ExtensionLimitExceeded as exc:
        return classify(prob, allow_extend=allow_extend, components=False), f"components not built: {exc}"


def sweep_line(P: ParamCurve, line: Line, index: int = 0, allow_extend: bool = True, verify: bool = True) -> LineSweep:
    delta = line_delta(P, line)
    cont, _, pairs = mv.sqfree_decompose2(delta, "t")
    vars = delta.vars
    f_odd = BiPoly.const(1, vars)
    for f, k in pairs:
        if k % 2:
            f_odd = f_odd * f
    if f_odd.degree("t") < 1:
        return LineSweep(line, delta, f_odd, None, None, generic=True)
    condition = mv.discriminant(f_odd, "t", times_lc=True).to_poly("h")
    full = condition * f_odd.lc_in("t").to_poly("h") * cont.rename("h")
    cpoly = squarefree_part(full)
    sweep = LineSweep(line, delta, f_odd, condition, cpoly)
    if cpoly.degree < 1:
        return sweep
    for h0 in distinct_roots(cpoly, allow_extend=allow_extend):
        point = line.point(h0)
        restricted = delta.subs("h", h0).to_poly("t")
        if restricted.degree < 1:
            raise InternalCheckFailed(f"|P(t) - {point}|^2 is constant along the sweep")
        cand = FocusCandidate(point, index, h0, Verdict.NotRational, on_curve=on_curve(P, point))
        if verify:
            report, note = _verify_point(P, point, allow_extend)
            cand.verdict, cand.exclusion, cand.report, cand.note = report.verdict, report.exclusion, report, note
        sweep.candidates.append(cand)
    return sweep


def find_double_rational_foci(P: ParamCurve, allow_extend: bool = True) -> FociReport:
    """Sweep every isotropic line of the candidate locus and verify each candidate point."""
    locus = candidate_locus(P, allow_extend=allow_extend)
    sweeps = [sweep_line(P, line, k, allow_extend) for k, line in enumerate(locus.lines)]
    seen = {}
    for sw in sweeps:
        for c in sw.candidates:
            key = (c.point.a, c.point.b)
            if key not in seen:
                seen[key] = c
    if P.degree <= 2:
        note = "every focus on the curve gives a rational conchoid"
    else:
        note = "focuses on the curve are not swept; classify them point by point"
    return FociReport(P, locus, sweeps, list(seen.values()), note)
