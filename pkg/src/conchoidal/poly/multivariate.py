"""Sparse polynomials in a few named variables, plus bivariate gcd machinery.

``BiPoly`` is used with two variables almost everywhere (``x1, x2`` for the
reparametrizing curve, ``a, b`` for focus loci, ``h, t`` for line sweeps);
resultants that eliminate a third variable simply carry three names.

Bivariate gcd and squarefree decomposition go through a recursive dense
representation (a list of univariate :class:`Poly` coefficients in the other
variable) with primitive pseudo-remainder sequences, so no rational
functions are ever formed.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import DivisionByZero
from ..gfield import EMPTY, ONE, ZERO, FieldElem, as_elem, unify_towers
from ._format import format_terms, power
from .matrix import sylvester_resultant
from .univariate import Poly, SqfDecomp, gcd as ugcd, sqfree_decompose


class BiPoly:
    """Sparse polynomial: ``terms`` maps exponent tuples (aligned with ``vars``) to coefficients."""

    __slots__ = ("terms", "vars")

    def __init__(self, terms=None, vars=("x1", "x2")):
        self.vars = tuple(vars)
        out = {}
        for e, c in (terms or {}).items():
            c = as_elem(c)
            if not c.is_zero():
                e = tuple(e)
                if len(e) != len(self.vars):
                    raise ValueError(f"exponent {e} does not match variables {self.vars}")
                out[e] = c
        self.terms = out

    @classmethod
    def _raw(cls, terms, vars):
        obj = object.__new__(cls)
        obj.terms = terms
        obj.vars = vars
        return obj

    @classmethod
    def gen(cls, name: str, vars) -> "BiPoly":
        vars = tuple(vars)
        e = tuple(1 if v == name else 0 for v in vars)
        if sum(e) != 1:
            raise ValueError(f"{name!r} is not one of {vars}")
        return cls._raw({e: ONE}, vars)

    @classmethod
    def const(cls, c, vars) -> "BiPoly":
        vars = tuple(vars)
        c = as_elem(c)
        return cls._raw({} if c.is_zero() else {(0,) * len(vars): c}, vars)

    @classmethod
    def from_poly(cls, p: Poly, vars, var: str | None = None) -> "BiPoly":
        vars = tuple(vars)
        i = vars.index(var or p.var)
        terms = {}
        for k, c in enumerate(p.coeffs):
            if not c.is_zero():
                e = [0] * len(vars)
                e[i] = k
                terms[tuple(e)] = c
        return cls._raw(terms, vars)

    @classmethod
    def from_coeffs_in(cls, coeffs, var: str, vars) -> "BiPoly":
        """Inverse of :meth:`coeffs_in`: ``sum(coeffs[k] * var**k)``."""
        vars = tuple(vars)
        i = vars.index(var)
        terms = {}
        for k, c in enumerate(coeffs):
            for e, v in c.terms.items():
                e = list(e)
                e[i] += k
                terms[tuple(e)] = v
        return cls._raw(terms, vars)

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self) -> FieldElem:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return next(iter(self.terms.values())) if self.terms else ZERO

    def degree(self, var: str | None = None) -> int:
        """Degree in ``var`` (total degree when omitted); ``-1`` for zero."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def free_vars(self):
        return tuple(v for j, v in enumerate(self.vars) if any(e[j] for e in self.terms))

    def tower(self):
        t = EMPTY
        for c in self.terms.values():
            if c.tower is not t:
                t = unify_towers(t, c.tower)
        return t

    def coeffs_in(self, var: str):
        """Coefficients w.r.t. ``var``, lowest first, as polynomials free of ``var``."""
        i = self.vars.index(var)
        n = self.degree(var)
        buckets = [{} for _ in range(n + 1)]
        for e, c in self.terms.items():
            k = e[i]
            e2 = e[:i] + (0,) + e[i + 1:]
            buckets[k][e2] = c
        return [BiPoly._raw(b, self.vars) for b in buckets]

    def lc_in(self, var: str) -> "BiPoly":
        return self.coeffs_in(var)[-1]

    def leading_term(self):
        e = max(self.terms)
        return e, self.terms[e]

    # -- arithmetic ----------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, BiPoly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        if isinstance(other, (FieldElem, int, Fraction)):
            return BiPoly.const(other, self.vars)
        if isinstance(other, Poly):
            return BiPoly.from_poly(other, self.vars)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                s = v + c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
        return BiPoly._raw(out, self.vars)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly._raw({e: -c for e, c in self.terms.items()}, self.vars)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (FieldElem, int, Fraction)):
            c = as_elem(other)
            if c.is_zero():
                return BiPoly._raw({}, self.vars)
            return BiPoly._raw({e: v * c for e, v in self.terms.items()}, self.vars)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return BiPoly._raw({e: c for e, c in out.items() if not c.is_zero()}, self.vars)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = BiPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (FieldElem, int, Fraction)):
            c = as_elem(other)
            if c.is_zero():
                raise DivisionByZero("division by zero")
            inv = c.inverse()
            return BiPoly._raw({e: v * inv for e, v in self.terms.items()}, self.vars)
        return NotImplemented

    def exquo(self, other: "BiPoly") -> "BiPoly":
        """Exact division (lexicographic leading terms); raises ArithmeticError otherwise."""
        other = self._lift(other)
        if other.is_zero():
            raise DivisionByZero("division by the zero polynomial")
        if other.is_constant():
            return self / other.constant_value()
        ge, gc = other.leading_term()
        ginv = gc.inverse()
        rem = dict(self.terms)
        quo = {}
        gterms = list(other.terms.items())
        while rem:
            e = max(rem)
            c = rem[e]
            diff = tuple(a - b for a, b in zip(e, ge))
            if any(d < 0 for d in diff):
                raise ArithmeticError(f"{other} does not divide {self}")
            f = c * ginv
            quo[diff] = f
            for ee, cc in gterms:
                t = tuple(a + b for a, b in zip(ee, diff))
                v = rem.get(t)
                nv = -(f * cc) if v is None else v - f * cc
                if nv.is_zero():
                    rem.pop(t, None)
                else:
                    rem[t] = nv
        return BiPoly._raw(quo, self.vars)

    def diff(self, var: str) -> "BiPoly":
        i = self.vars.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                out[e[:i] + (e[i] - 1,) + e[i + 1:]] = c * e[i]
        return BiPoly._raw(out, self.vars)

    def subs(self, var: str, value) -> "BiPoly":
        """Substitute a constant or a polynomial (same variables) for ``var``."""
        coeffs = self.coeffs_in(var)
        if isinstance(value, (FieldElem, int, Fraction)):
            value = BiPoly.const(value, self.vars)
        elif isinstance(value, Poly):
            value = BiPoly.from_poly(value, self.vars)
        acc = BiPoly._raw({}, self.vars)
        for c in reversed(coeffs):
            acc = acc * value + c
        return acc

    def evaluate(self, point) -> FieldElem:
        """Evaluate at ``point``: a mapping from variable name to value."""
        vals = [as_elem(point[v]) if v in point else None for v in self.vars]
        total = ZERO
        for e, c in self.terms.items():
            term = c
            for j, k in enumerate(e):
                if k:
                    if vals[j] is None:
                        raise KeyError(self.vars[j])
                    term = term * vals[j] ** k
            total = total + term
        return total

    def to_poly(self, var: str | None = None) -> Poly:
        fv = self.free_vars()
        if var is None:
            if len(fv) > 1:
                raise ValueError(f"{self} is not univariate")
            var = fv[0] if fv else self.vars[0]
        elif any(v != var for v in fv):
            raise ValueError(f"{self} involves variables other than {var}")
        i = self.vars.index(var)
        n = self.degree(var)
        coeffs = [ZERO] * (n + 1)
        for e, c in self.terms.items():
            coeffs[e[i]] = c
        return Poly(coeffs, var)

    def with_vars(self, vars) -> "BiPoly":
        """Re-express over another variable tuple (variables that occur must be kept)."""
        vars = tuple(vars)
        if vars == self.vars:
            return self
        idx = {v: j for j, v in enumerate(vars)}
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(vars)
            for j, k in enumerate(e):
                if k:
                    if self.vars[j] not in idx:
                        raise ValueError(f"variable {self.vars[j]} occurs in {self}")
                    ne[idx[self.vars[j]]] = k
            out[tuple(ne)] = c
        return BiPoly._raw(out, vars)

    def rename(self, mapping) -> "BiPoly":
        return BiPoly._raw(dict(self.terms), tuple(mapping.get(v, v) for v in self.vars))

    def map_coeffs(self, f) -> "BiPoly":
        return BiPoly({e: f(c) for e, c in self.terms.items()}, self.vars)

    def monic(self) -> "BiPoly":
        """Scale so the lexicographically leading coefficient is 1."""
        if not self.terms:
            return self
        _, c = self.leading_term()
        return self if c == 1 else self / c

    def equal_up_to_unit(self, other: "BiPoly") -> bool:
        if other.vars != self.vars:
            other = other.with_vars(self.vars)
        return self.monic() == other.monic()

    # -- comparison & rendering ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            if other.vars != self.vars:
                try:
                    other = other.with_vars(self.vars)
                except ValueError:
                    return False
            return self.terms == other.terms
        if isinstance(other, (FieldElem, int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self):
        """Terms in canonical order: total degree descending, then lexicographic descending."""
        return sorted(self.terms.items(), key=lambda ec: (sum(ec[0]), ec[0]), reverse=True)

    def __repr__(self):
        return f"BiPoly({str(self)!r}, vars={self.vars!r})"

    def __str__(self):
        terms = []
        for e, c in self.sorted_terms():
            mono = "*".join(power(v, k) for v, k in zip(self.vars, e) if k)
            terms.append((c, mono))
        return format_terms(terms)


# -- resultants, discriminants, content ---------------------------------------


def _exquo(a, b):
    return a.exquo(b)


def resultant(p, q, var: str | None = None):
    """``Res_var(p, q)`` via the Sylvester matrix (``p`` rows first) and Bareiss.

    For two :class:`Poly` arguments the result is a field element; for
    :class:`BiPoly` arguments it is a :class:`BiPoly` free of ``var``.
    """
    if isinstance(p, Poly) and isinstance(q, Poly):
        from .univariate import resultant as ures

        return ures(p, q)
    if p.vars != q.vars:
        vs = p.vars + tuple(v for v in q.vars if v not in p.vars)
        p, q = p.with_vars(vs), q.with_vars(vs)
    zero = BiPoly._raw({}, p.vars)
    if p.is_zero() or q.is_zero():
        return zero
    one = BiPoly.const(1, p.vars)
    return sylvester_resultant(p.coeffs_in(var), q.coeffs_in(var), _exquo, zero, one)


def discriminant(p: BiPoly, var: str, times_lc: bool = False) -> BiPoly:
    """Discriminant w.r.t. ``var``; with ``times_lc`` the plain ``Res(p, dp/dvar)``."""
    n = p.degree(var)
    if n < 1:
        raise ValueError(f"{p} has degree {n} in {var}")
    r = resultant(p, p.diff(var), var)
    if times_lc:
        return r
    r = r.exquo(p.lc_in(var))
    return -r if (n * (n - 1) // 2) % 2 else r


def _other_var(p: BiPoly, main: str) -> str:
    others = [v for v in p.vars if v != main]
    fv = [v for v in p.free_vars() if v != main]
    if len(fv) > 1:
        raise ValueError(f"{p} is not bivariate in {main} and one other variable")
    if fv:
        return fv[0]
    return others[0] if others else "_"


def to_rec(p: BiPoly, main: str, other: str | None = None):
    """Coefficients of ``p`` in ``main`` (lowest first) as univariate polynomials."""
    other = other or _other_var(p, main)
    i = p.vars.index(main)
    j = p.vars.index(other) if other in p.vars else None
    n = p.degree(main)
    cols = [dict() for _ in range(max(n + 1, 0))]
    for e, c in p.terms.items():
        cols[e[i]][e[j] if j is not None else 0] = c
    out = []
    for col in cols:
        if col:
            m = max(col)
            out.append(Poly([col.get(k, ZERO) for k in range(m + 1)], other))
        else:
            out.append(Poly((), other))
    return out


def from_rec(cs, main: str, vars) -> BiPoly:
    vars = tuple(vars)
    i = vars.index(main)
    out = {}
    for k, c in enumerate(cs):
        if c.is_zero():
            continue
        j = vars.index(c.var) if c.var in vars else None
        for m, v in enumerate(c.coeffs):
            if v.is_zero():
                continue
            e = [0] * len(vars)
            e[i] = k
            if j is not None:
                e[j] = m
            elif m:
                raise ValueError(f"variable {c.var} not in {vars}")
            out[tuple(e)] = v
    return BiPoly._raw(out, vars)


def _rstrip(cs):
    n = len(cs)
    while n and cs[n - 1].is_zero():
        n -= 1
    return list(cs[:n])


def rec_content(cs) -> Poly:
    g = None
    for c in cs:
        if c.is_zero():
            continue
        g = c.monic() if g is None else ugcd(g, c)
        if g.degree == 0:
            break
    return g


def rec_primitive(cs):
    """``(content, primitive part)`` of a recursive polynomial."""
    cs = _rstrip(cs)
    if not cs:
        return None, cs
    g = rec_content(cs)
    if g.degree == 0:
        return g, cs
    return g, [c.exquo(g) for c in cs]


def rec_derivative(cs):
    return _rstrip([c * k for k, c in enumerate(cs)][1:])


def rec_sub(a, b):
    n = max(len(a), len(b))
    zero = (a or b)[0] * 0 if (a or b) else None
    out = []
    for k in range(n):
        x = a[k] if k < len(a) else zero
        y = b[k] if k < len(b) else zero
        out.append(x - y)
    return _rstrip(out)


def rec_mul(a, b):
    if not a or not b:
        return []
    zero = a[0] * 0
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            if not y.is_zero():
                out[i + j] = out[i + j] + x * y
    return _rstrip(out)


def rec_prem(f, g):
    """Pseudo-remainder ``lc(g)**(deg f - deg g + 1) * f mod g``."""
    r = list(f)
    dg = len(g) - 1
    lg = g[-1]
    e = len(f) - len(g) + 1
    while r and len(r) - 1 >= dg:
        lr = r[-1]
        k = len(r) - 1 - dg
        r = [c * lg for c in r]
        for j in range(dg + 1):
            r[k + j] = r[k + j] - lr * g[j]
        r = _rstrip(r[:-1]) if r[-1].is_zero() else _rstrip(r)
        e -= 1
    if e > 0:
        r = [c * lg ** e for c in r]
    return _rstrip(r)


def rec_exquo(f, g):
    """Exact division in ``K[y][x]``; raises ArithmeticError when inexact."""
    r = list(f)
    dg = len(g) - 1
    lg = g[-1]
    if len(r) - 1 < dg:
        if r:
            raise ArithmeticError("inexact recursive division")
        return []
    q = [lg * 0] * (len(r) - dg)
    for k in range(len(r) - 1, dg - 1, -1):
        c = r[k]
        if c.is_zero():
            continue
        qc = c.exquo(lg)
        q[k - dg] = qc
        for j in range(dg + 1):
            r[k - dg + j] = r[k - dg + j] - qc * g[j]
    if any(not c.is_zero() for c in r):
        raise ArithmeticError("inexact recursive division")
    return _rstrip(q)


def _rec_normalize(cs):
    lc = cs[-1].lc
    return [c / lc for c in cs] if lc != 1 else cs


def rec_gcd(f, g):
    """gcd in ``K[y][x]`` by the primitive pseudo-remainder sequence."""
    f, g = _rstrip(f), _rstrip(g)
    if not f and not g:
        raise ValueError("gcd of two zero polynomials")
    if not f:
        return _rec_normalize(g)
    if not g:
        return _rec_normalize(f)
    cf, a = rec_primitive(f)
    cg, b = rec_primitive(g)
    c = ugcd(cf, cg)
    if len(a) < len(b):
        a, b = b, a
    while len(b) > 1:
        r = rec_prem(a, b)
        if not r:
            break
        a, b = b, rec_primitive(r)[1]
    else:
        b = [b[0] * 0 + 1]
    return _rec_normalize([c * x for x in b])


def gcd(p: BiPoly, q: BiPoly, main: str) -> BiPoly:
    """gcd of two bivariate polynomials, normalized to a monic leading coefficient."""
    vars = p.vars
    other = _other_var(p + q.with_vars(vars), main)
    return from_rec(rec_gcd(to_rec(p, main, other), to_rec(q.with_vars(vars), main, other)), main, vars)


def content_primitive(p: BiPoly, var: str):
    """``(content, primitive)`` with ``content`` the monic gcd of the coefficients in ``var``."""
    if p.is_zero():
        raise ValueError("content of the zero polynomial")
    other = _other_var(p, var)
    cont, prim = rec_primitive(to_rec(p, var, other))
    return cont, from_rec(prim, var, p.vars)


def rec_sqf(cs):
    """Yun's algorithm in ``K[y][x]`` for a primitive ``cs``; returns ``[(factor, mult)]``."""
    out = []
    df = rec_derivative(cs)
    if not df:
        return out
    a = rec_gcd(cs, df)
    b = rec_exquo(cs, a)
    c = rec_exquo(df, a)
    d = rec_sub(c, rec_derivative(b))
    i = 1
    while len(b) > 1:
        a = rec_gcd(b, d) if d else _rec_normalize(b)
        if len(a) > 1:
            out.append((a, i))
        b = rec_exquo(b, a)
        c = rec_exquo(d, a) if d else []
        d = rec_sub(c, rec_derivative(b))
        i += 1
    return out


def sqfree_decompose2(p: BiPoly, main: str):
    """Squarefree decomposition w.r.t. ``main``.

    Returns ``(content, unit, pairs)``: ``content`` is the content in the
    other variable (a :class:`Poly`), ``pairs`` lists primitive factors with
    multiplicities and ``p == unit * content * prod(f**i)``.
    """
    other = _other_var(p, main)
    cs = to_rec(p, main, other)
    cont, prim = rec_primitive(cs)
    pairs = rec_sqf(prim)
    recon = [Poly.const(1, other)]
    for f, i in pairs:
        for _ in range(i):
            recon = rec_mul(recon, f)
    recon = rec_mul(recon, [cont])
    unit = cs[-1].lc / recon[-1].lc
    return cont, unit, [(from_rec(f, main, p.vars), i) for f, i in pairs]


def squarefree_part2(p: BiPoly, main: str) -> BiPoly:
    """Squarefree part (monic), removing repeated factors both in ``main`` and in the content."""
    cont, _, pairs = sqfree_decompose2(p, main)
    out = BiPoly.from_poly(sqfree_decompose(cont).squarefree_part(cont.var), p.vars) if cont.var in p.vars \
        else BiPoly.const(1, p.vars)
    for f, _ in pairs:
        out = out * f
    return out.monic()


def content_sqf(cont: Poly) -> SqfDecomp:
    return sqfree_decompose(cont)
