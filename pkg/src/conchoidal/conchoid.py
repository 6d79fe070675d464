"""Rationality of conchoids and parametrization of their components.

The pipeline for a problem ``(P, A, d)``:

1. refuse excluded configurations;
2. if ``|P(t) - A|**2`` is a square ``m(t)**2`` the conchoid splits into the
   two rational components ``P +- (d/m)(P - A)``;
3. otherwise build the reparametrizing curve ``g(x1, x2) = 0``, a conic
   bundle over the ``x1`` line whose genus is read off a hyperelliptic
   model ``y**2 = s(x1)``;
4. for genus zero, parametrize ``g = 0`` by ``(phi1, phi2)``; then
   ``Q = P(phi1)`` is at rational distance to ``A`` and the conchoid is
   parametrized through ``Q``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import (
    ExcludedCurve,
    GenusPositive,
    InternalCheckFailed,
    LinearInX2,
    NotASquare,
    NotProper,
)
from .geometry import ConchoidProblem, Exclusion, Focus, ParamCurve, excluded_case, is_proper, norm_sq
from .gfield import EMPTY, Tower, try_sqrt, unify_towers
from .poly import BiPoly, Poly, gcd, lcm, sqfree_decompose
from .ratfn import RatFn

REPARAM_VARS = ("x1", "x2")


class Verdict(enum.Enum):
    DoubleRational = "double_rational"
    Rational = "rational"
    NotRational = "not_rational"
    Excluded = "excluded"


@dataclass(frozen=True)
class ReparamCurve:
    """``g = A2(x1)*x2**2 + B1(x1)*x2 + C0(x1)``, primitive in ``x2``; ``C0 == -A2``."""

    g: BiPoly
    A2: Poly
    B1: Poly
    C0: Poly
    content: Poly

    @property
    def deg_x2(self) -> int:
        return self.g.degree("x2")

    @property
    def deg_x1(self) -> int:
        return self.g.degree("x1")


@dataclass(frozen=True)
class HyperellipticModel:
    """``B1**2 - 4*A2*C0 = unit * s * q**2`` with ``s`` squarefree; ``g = 0`` is birational to ``y**2 = unit*s``."""

    delta: Poly
    unit: object
    s: Poly
    q: Poly

    @property
    def genus(self) -> int:
        n = self.s.degree
        return (n - 1) // 2 if n >= 1 else 0


@dataclass
class ConchoidReport:
    problem: ConchoidProblem
    verdict: Verdict
    exclusion: Exclusion | None = None
    rdf_witness: RatFn | None = None
    reparam: ReparamCurve | None = None
    model: HyperellipticModel | None = None
    phi: tuple | None = None
    components: list = field(default_factory=list)
    tower: Tower = EMPTY

    @property
    def reason(self) -> str | None:
        return self.exclusion.description if self.exclusion else None

    @property
    def genus(self) -> int | None:
        return self.model.genus if self.model else None


# -- reparametrizing curve ------------------------------------------------------


def reparam_curve(P: ParamCurve, A: Focus) -> ReparamCurve:
    """Primitive part in ``x2`` of the numerator of ``-2*x2*(P1(x1) - a) + (x2**2 - 1)*(P2(x1) - b)``."""
    f1, f2 = P.x - A.a, P.y - A.b
    L = lcm(f1.den, f2.den)
    N1 = (f1.num * L.exquo(f1.den)).rename("x1")
    N2 = (f2.num * L.exquo(f2.den)).rename("x1")
    if N1.is_zero() and N2.is_zero():
        raise ExcludedCurve("the base curve collapses onto the focus")
    content = gcd(N1, N2)
    A2 = N2.exquo(content)
    B1 = (N1 * -2).exquo(content)
    C0 = -A2
    vars = REPARAM_VARS
    x2 = BiPoly.gen("x2", vars)
    lift = lambda p: BiPoly.from_poly(p, vars, "x1")
    g = lift(A2) * x2 * x2 + lift(B1) * x2 + lift(C0)
    return ReparamCurve(g, A2, B1, C0, content)


def hyperelliptic_model(rc: ReparamCurve) -> HyperellipticModel:
    if rc.A2.is_zero():
        raise LinearInX2("the reparametrizing curve is linear in x2")
    delta = rc.B1 * rc.B1 - rc.A2 * rc.C0 * 4
    dec = sqfree_decompose(delta)
    return HyperellipticModel(delta, dec.unit, dec.odd_part("x1"), dec.square_root_part("x1"))


# -- rational distance to the focus ---------------------------------------------


def is_rdf(P: ParamCurve, A: Focus) -> bool:
    """Whether ``|P(t) - A|**2`` is a square of a rational function (constants always are)."""
    n = norm_sq(P, A)
    return not n.is_zero() and n.is_square()


def rdf_witness(P: ParamCurve, A: Focus, allow_extend: bool = True) -> RatFn | None:
    """``m`` with ``m**2 == |P(t) - A|**2``, or ``None`` when ``P`` is not at rational distance to ``A``."""
    n = norm_sq(P, A)
    if n.is_zero():
        return None
    try:
        return n.try_square_root(allow_extend=allow_extend)
    except NotASquare:
        if n.is_square():
            raise
        return None


# -- parametrizing the reparametrizing curve ------------------------------------


def _substitute(g: BiPoly, phi1: RatFn, phi2: RatFn) -> RatFn:
    total = RatFn.const(0, phi1.var)
    for (i, j), c in g.terms.items():
        total = total + phi1 ** i * phi2 ** j * c
    return total


def _as_ratfn(p: Poly, var: str = "t") -> RatFn:
    return RatFn(p.rename(var))


def parametrize_reparam(rc: ReparamCurve, model: HyperellipticModel | None, allow_extend: bool = True):
    """A proper parametrization ``(phi1, phi2)`` of the genus-zero curve ``g = 0``."""
    t = RatFn.x("t")
    if rc.deg_x2 == 1:
        # g = B1(x1) * x2 (C0 == -A2 == 0): the component x2 = 0
        phi = (t, RatFn.const(0))
    elif rc.deg_x1 == 1:
        # g = B'(x2)*x1 + C'(x2)
        cs = rc.g.coeffs_in("x1")
        Bp = cs[1].to_poly("x2").rename("t")
        Cp = cs[0].to_poly("x2").rename("t") if not cs[0].is_zero() else Poly((), "t")
        phi = (RatFn(-Cp, Bp), t)
    else:
        if model is None:
            model = hyperelliptic_model(rc)
        if model.genus > 0:
            raise GenusPositive(f"the reparametrizing curve has genus {model.genus}")
        S = model.s * model.unit
        if S.degree == 1:
            x = (t * t - S.coeff(0)) / S.coeff(1)
            Y = t
        elif S.degree == 2:
            alpha, beta, gamma = S.coeff(2), S.coeff(1), S.coeff(0)
            r = try_sqrt(alpha, allow_extend=allow_extend)
            x = (t * t * -1 + gamma) / (t * (2 * r) - beta)
            Y = x * r + t
        else:
            raise InternalCheckFailed("the reparametrizing curve is reducible; no single parametrization")
        ev = lambda p: _as_ratfn(p).compose(x)
        x2 = (ev(model.q) * Y - ev(rc.B1)) / (ev(rc.A2) * 2)
        phi = (x, x2)
    if not _substitute(rc.g, *phi).is_zero():
        raise InternalCheckFailed(f"{phi} does not parametrize g = {rc.g}")
    if not is_proper(ParamCurve(*phi)):
        raise InternalCheckFailed(f"{phi} is not a proper parametrization of g = {rc.g}")
    return phi


# -- classification --------------------------------------------------------------


def _branches(Q: ParamCurve, A: Focus, d, m: RatFn):
    k = RatFn.const(d) / m
    plus = (Q.x + k * (Q.x - A.a), Q.y + k * (Q.y - A.b))
    minus = (Q.x - k * (Q.x - A.a), Q.y - k * (Q.y - A.b))
    return [plus, minus]


def _tower_of(report: ConchoidReport) -> Tower:
    t = report.problem.curve.tower()
    for c in (report.problem.focus.a, report.problem.focus.b, report.problem.distance):
        t = unify_towers(t, c.tower)
    for f in [report.rdf_witness, *(report.phi or ()), *(f for comp in report.components for f in comp)]:
        if f is not None:
            t = unify_towers(t, f.tower())
    return t


def classify(prob: ConchoidProblem, allow_extend: bool = True, components: bool = True) -> ConchoidReport:
    """Decide whether the conchoid is double rational, rational or not rational.

    With ``components`` off only the verdict is computed, which never needs
    a field extension.  Raises NotProper for non-proper input.
    """
    P, A, d = prob.curve, prob.focus, prob.distance
    if not P.proper:
        raise NotProper(f"{P} is not a proper parametrization")
    exclusion = excluded_case(prob)
    if exclusion is not None:
        return ConchoidReport(prob, Verdict.Excluded, exclusion=exclusion, tower=P.tower())

    if is_rdf(P, A):
        report = ConchoidReport(prob, Verdict.DoubleRational)
        if components:
            m = norm_sq(P, A).try_square_root(allow_extend=allow_extend)
            report.rdf_witness = m
            report.components = _branches(P, A, d, m)
        report.tower = _tower_of(report)
        return report

    rc = reparam_curve(P, A)
    model = hyperelliptic_model(rc) if rc.deg_x2 == 2 else None
    if model is not None and model.genus > 0:
        report = ConchoidReport(prob, Verdict.NotRational, reparam=rc, model=model)
        report.tower = _tower_of(report)
        return report

    report = ConchoidReport(prob, Verdict.Rational, reparam=rc, model=model)
    if components:
        phi = parametrize_reparam(rc, model, allow_extend=allow_extend)
        Q = P.compose(phi[0])
        try:
            m = norm_sq(Q, A).try_square_root(allow_extend=allow_extend)
        except NotASquare as exc:
            raise InternalCheckFailed(f"P(phi1) is not at rational distance to {A}") from exc
        report.phi = phi
        report.rdf_witness = m
        report.components = _branches(Q, A, d, m)
    report.tower = _tower_of(report)
    return report


def verify_component(T, prob: ConchoidProblem, phi1: RatFn | None = None) -> bool:
    """Exact check that ``T`` lies at distance ``d`` from ``Q = P(phi1)`` on the line through ``A``."""
    P, A, d = prob.curve, prob.focus, prob.distance
    Q = P if phi1 is None else P.compose(phi1)
    T1, T2 = T
    dist = (T1 - Q.x) ** 2 + (T2 - Q.y) ** 2 - d * d
    coll = (T1 - A.a) * (Q.y - A.b) - (T2 - A.b) * (Q.x - A.a)
    return dist.is_zero() and coll.is_zero()
