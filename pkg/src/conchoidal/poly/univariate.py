"""Dense univariate polynomials over :class:`~conchoidal.gfield.FieldElem`."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .. import _kernel
from ..errors import DivisionByZero
from ..gfield import EMPTY, ONE, ZERO, FieldElem, as_elem, unify_towers
from ._format import format_terms, power
from .matrix import sylvester_resultant


def _strip(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1].is_zero():
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    """``coeffs[k]`` is the coefficient of ``var**k``; the zero polynomial has no coefficients."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var: str = "t"):
        self.coeffs = _strip([as_elem(c) for c in coeffs])
        self.var = var

    @classmethod
    def _raw(cls, coeffs, var):
        obj = object.__new__(cls)
        obj.coeffs = coeffs
        obj.var = var
        return obj

    @classmethod
    def x(cls, var: str = "t") -> "Poly":
        return cls._raw((ZERO, ONE), var)

    @classmethod
    def const(cls, c, var: str = "t") -> "Poly":
        return cls((c,), var)

    @classmethod
    def monomial(cls, c, k: int, var: str = "t") -> "Poly":
        return cls([ZERO] * k + [c], var)

    @classmethod
    def from_roots(cls, roots, var: str = "t") -> "Poly":
        p = cls.const(1, var)
        for r in roots:
            p = p * cls((-as_elem(r), ONE), var)
        return p

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> FieldElem:
        return self.coeffs[-1] if self.coeffs else ZERO

    def coeff(self, k: int) -> FieldElem:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def tower(self):
        t = EMPTY
        for c in self.coeffs:
            if c.tower is not t:
                t = unify_towers(t, c.tower)
        return t

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    # -- arithmetic --------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (FieldElem, int, Fraction)):
            return Poly._raw(_strip([as_elem(other)]), self.var)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Poly._raw(_strip(out), self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(tuple(-c for c in self.coeffs), self.var)

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
                return Poly._raw((), self.var)
            return Poly._raw(tuple(a * c for a in self.coeffs), self.var)
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly._raw((), self.var)
        if len(self.coeffs) == 1:
            return Poly._raw(tuple(self.coeffs[0] * c for c in other.coeffs), self.var)
        if len(other.coeffs) == 1:
            return self * other.coeffs[0]
        t = unify_towers(self.tower(), other.tower())
        A = [(c.in_tower(t)._c, c._d) for c in self.coeffs]
        B = [(c.in_tower(t)._c, c._d) for c in other.coeffs]
        prod = _kernel.poly_mul(A, B, t.k, t.ngen)
        return Poly._raw(_strip([FieldElem._make(c, d, t) for c, d in prod]), self.var)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Poly.const(1, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise DivisionByZero("polynomial division by zero")
        r = list(self.coeffs)
        db = o.degree
        if len(r) - 1 < db:
            return Poly._raw((), self.var), self
        inv = o.lc.inverse()
        q = [ZERO] * (len(r) - db)
        bc = o.coeffs
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k]
            if c.is_zero():
                continue
            f = c * inv
            q[k - db] = f
            for j in range(db):
                if not bc[j].is_zero():
                    r[k - db + j] = r[k - db + j] - f * bc[j]
            r[k] = ZERO
        return Poly._raw(_strip(q), self.var), Poly._raw(_strip(r[:db]), self.var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exquo(self, other) -> "Poly":
        """Exact quotient; raises ArithmeticError when ``other`` does not divide."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def __truediv__(self, other):
        if isinstance(other, (FieldElem, int, Fraction)):
            c = as_elem(other)
            if c.is_zero():
                raise DivisionByZero("polynomial division by zero")
            inv = c.inverse()
            return Poly._raw(tuple(a * inv for a in self.coeffs), self.var)
        return NotImplemented

    def monic(self) -> "Poly":
        if not self.coeffs or self.lc == 1:
            return self
        return self / self.lc

    def derivative(self) -> "Poly":
        return Poly._raw(_strip([c * k for k, c in enumerate(self.coeffs)][1:]), self.var)

    def __call__(self, x):
        """Horner evaluation; ``x`` may be a field element, polynomial or rational function."""
        if not self.coeffs:
            return x * 0 if not isinstance(x, (int, Fraction)) else ZERO
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        if isinstance(x, (int, Fraction)):
            return as_elem(acc)
        return acc

    def compose(self, other: "Poly") -> "Poly":
        res = self(other)
        if isinstance(res, FieldElem):
            return Poly((res,), other.var)
        return res

    def rename(self, var: str) -> "Poly":
        return Poly._raw(self.coeffs, var)

    def shift(self, k: int) -> "Poly":
        """Multiply by ``var**k``."""
        if not self.coeffs:
            return self
        return Poly._raw((ZERO,) * k + self.coeffs, self.var)

    def reverse(self, n: int | None = None) -> "Poly":
        """``var**n * p(1/var)``, with ``n`` defaulting to the degree."""
        n = self.degree if n is None else n
        c = list(self.coeffs) + [ZERO] * (n + 1 - len(self.coeffs))
        return Poly._raw(_strip(c[::-1]), self.var)

    def map_coeffs(self, f) -> "Poly":
        return Poly._raw(_strip([f(c) for c in self.coeffs]), self.var)

    # -- comparison & rendering --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (FieldElem, int, Fraction)):
            return self.is_constant() and (self.coeffs[0] if self.coeffs else ZERO) == other
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({str(self)!r}, var={self.var!r})"

    def __str__(self):
        terms = [(c, power(self.var, k)) for k, c in reversed(list(enumerate(self.coeffs))) if not c.is_zero()]
        return format_terms(terms)


# -- gcd & friends ----------------------------------------------------------


def gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd by the Euclidean remainder sequence."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of two zero polynomials")
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def gcdex(p: Poly, q: Poly):
    """``(g, s, t)`` with ``s*p + t*q = g = gcd(p, q)``."""
    r0, r1 = p, q
    s0, s1 = Poly.const(1, p.var), Poly((), p.var)
    t0, t1 = Poly((), p.var), Poly.const(1, p.var)
    while not r1.is_zero():
        qt, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - qt * s1
        t0, t1 = t1, t0 - qt * t1
    lc = r0.lc
    return r0 / lc, s0 / lc, t0 / lc


def lcm(p: Poly, q: Poly) -> Poly:
    return (p * q).exquo(gcd(p, q)).monic()


@dataclass(frozen=True)
class SqfDecomp:
    """``unit * prod(f**i for f, i in pairs)``, factors monic, squarefree, pairwise coprime."""

    pairs: tuple
    unit: FieldElem

    def expand(self) -> Poly:
        var = self.pairs[0][0].var if self.pairs else "t"
        p = Poly.const(self.unit, var)
        for f, i in self.pairs:
            p = p * f ** i
        return p

    def squarefree_part(self, var: str = "t") -> Poly:
        p = Poly.const(1, self.pairs[0][0].var if self.pairs else var)
        for f, _ in self.pairs:
            p = p * f
        return p

    def odd_part(self, var: str = "t") -> Poly:
        p = Poly.const(1, self.pairs[0][0].var if self.pairs else var)
        for f, i in self.pairs:
            if i % 2:
                p = p * f
        return p

    def square_root_part(self, var: str = "t") -> Poly:
        """``prod(f**(i // 2))``."""
        p = Poly.const(1, self.pairs[0][0].var if self.pairs else var)
        for f, i in self.pairs:
            if i >= 2:
                p = p * f ** (i // 2)
        return p

    def all_even(self) -> bool:
        return all(i % 2 == 0 for _, i in self.pairs)


def sqfree_decompose(p: Poly) -> SqfDecomp:
    """Yun's squarefree decomposition (valid in characteristic zero)."""
    if p.is_zero():
        raise ValueError("squarefree decomposition of zero")
    unit = p.lc
    f = p.monic()
    if f.degree < 1:
        return SqfDecomp((), unit)
    pairs = []
    df = f.derivative()
    a = gcd(f, df)
    b = f.exquo(a)
    c = df.exquo(a)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = gcd(b, d)
        if a.degree > 0:
            pairs.append((a, i))
        b = b.exquo(a)
        c = d.exquo(a)
        d = c - b.derivative()
        i += 1
    return SqfDecomp(tuple(pairs), unit)


def squarefree_part(p: Poly) -> Poly:
    if p.degree < 1:
        return Poly.const(1, p.var) if not p.is_zero() else p
    return p.exquo(gcd(p, p.derivative())).monic()


def resultant(p: Poly, q: Poly) -> FieldElem:
    """Resultant via the Sylvester matrix (``p`` rows first) and Bareiss elimination."""
    if p.is_zero() or q.is_zero():
        return ZERO
    return sylvester_resultant(list(p.coeffs), list(q.coeffs), lambda a, b: a / b, ZERO, ONE)


def discriminant(p: Poly, times_lc: bool = False) -> FieldElem:
    """Classical discriminant, or ``Res(p, p')`` when ``times_lc`` is set.

    The two differ by the factor ``(-1)**(n(n-1)/2) * lc(p)``.
    """
    n = p.degree
    if n < 1:
        raise ValueError("discriminant of a constant")
    r = resultant(p, p.derivative())
    if times_lc:
        return r
    r = r / p.lc
    return -r if (n * (n - 1) // 2) % 2 else r
