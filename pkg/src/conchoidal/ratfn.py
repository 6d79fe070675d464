"""Reduced rational functions in one variable."""

from __future__ import annotations

from fractions import Fraction

from .errors import DivisionByZero, IdenticallyUndefined, NotASquare
from .gfield import FieldElem, as_elem, try_sqrt
from .poly import Poly, gcd, sqfree_decompose


class RatFn:
    """``num / den`` with coprime parts and monic denominator; zero is ``0/1``."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, var: str | None = None):
        if not isinstance(num, Poly):
            num = Poly.const(num, var or "t")
        var = num.var if var is None else var
        if den is None:
            den = Poly.const(1, var)
        elif not isinstance(den, Poly):
            den = Poly.const(den, var)
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        num, den = num.rename(var), den.rename(var)
        if num.is_zero():
            self.num, self.den = num, Poly.const(1, var)
            return
        g = gcd(num, den)
        if g.degree > 0:
            num, den = num.exquo(g), den.exquo(g)
        lc = den.lc
        if lc != 1:
            num, den = num / lc, den / lc
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num, den):
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def x(cls, var: str = "t") -> "RatFn":
        return cls._raw(Poly.x(var), Poly.const(1, var))

    @classmethod
    def const(cls, c, var: str = "t") -> "RatFn":
        return cls(Poly.const(c, var))

    @property
    def var(self) -> str:
        return self.num.var

    @property
    def degree(self) -> int:
        """``max(deg num, deg den)``; the zero function has degree 0."""
        return max(self.num.degree, self.den.degree, 0)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def constant_value(self) -> FieldElem:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.coeff(0)

    def tower(self):
        from .gfield import unify_towers

        return unify_towers(self.num.tower(), self.den.tower())

    # -- arithmetic ----------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, RatFn):
            return other
        if isinstance(other, Poly):
            return RatFn._raw(other.rename(self.var), Poly.const(1, self.var))
        if isinstance(other, (FieldElem, int, Fraction)):
            return RatFn._raw(Poly.const(other, self.var), Poly.const(1, self.var))
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFn(self.num + o.num, self.den)
        return RatFn(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFn._raw(-self.num, self.den)

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
                return RatFn.const(0, self.var)
            return RatFn._raw(self.num * c, self.den)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RatFn(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFn":
        if self.is_zero():
            raise DivisionByZero("inverse of the zero rational function")
        return RatFn(self.den, self.num)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise DivisionByZero("division by the zero rational function")
        return RatFn(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        return RatFn._raw(self.num ** n, self.den ** n)

    def derivative(self) -> "RatFn":
        return RatFn(self.num.derivative() * self.den - self.num * self.den.derivative(), self.den * self.den)

    # -- evaluation & substitution -------------------------------------------

    def __call__(self, x):
        """Evaluate at a field element; raises DivisionByZero at a pole."""
        x = as_elem(x) if isinstance(x, (int, Fraction)) else x
        if isinstance(x, RatFn):
            return self.compose(x)
        d = self.den(x)
        if d.is_zero():
            raise DivisionByZero(f"{self} has a pole at {x}")
        return self.num(x) / d

    def compose(self, phi: "RatFn") -> "RatFn":
        """``self(phi(t))``, reduced; the result lives in the variable of ``phi``."""
        if not isinstance(phi, RatFn):
            phi = RatFn(phi) if isinstance(phi, Poly) else RatFn.const(phi)
        n = max(self.num.degree, self.den.degree, 0)
        p, q = phi.num, phi.den

        def hom(f: Poly) -> Poly:
            # q**n * f(p/q)
            acc = Poly((), p.var)
            qpow = Poly.const(1, p.var)
            powers = [qpow]
            for _ in range(n):
                powers.append(powers[-1] * q)
            ppow = Poly.const(1, p.var)
            for k, c in enumerate(f.coeffs):
                if not c.is_zero():
                    acc = acc + ppow * powers[n - k] * c
                ppow = ppow * p
            return acc

        den = hom(self.den)
        if den.is_zero():
            raise IdenticallyUndefined(f"{self} is undefined along {phi}")
        return RatFn(hom(self.num), den)

    def rename(self, var: str) -> "RatFn":
        return RatFn._raw(self.num.rename(var), self.den.rename(var))

    def map_coeffs(self, f) -> "RatFn":
        return RatFn(self.num.map_coeffs(f), self.den.map_coeffs(f))

    # -- squares -------------------------------------------------------------

    def try_square_root(self, allow_extend: bool = True) -> "RatFn":
        """``m`` with ``m**2 == self``, or NotASquare.

        Every squarefree factor of numerator and denominator must occur to an
        even power; the remaining constant is rooted in the tower (extending
        it when allowed).  The constant root follows the canonical sign.
        """
        if self.is_zero():
            raise NotASquare("zero is excluded from the square-root test")
        sn = sqfree_decompose(self.num)
        sd = sqfree_decompose(self.den)
        if not (sn.all_even() and sd.all_even()):
            raise NotASquare(f"{self} has a factor of odd multiplicity")
        c = try_sqrt(sn.unit / sd.unit, allow_extend=allow_extend)
        return RatFn(sn.square_root_part(self.var) * c, sd.square_root_part(self.var))

    def is_square(self) -> bool:
        """Square-ness over an algebraically closed field: even multiplicities suffice."""
        if self.is_zero():
            return False
        return sqfree_decompose(self.num).all_even() and sqfree_decompose(self.den).all_even()

    # -- comparison & rendering ----------------------------------------------

    def __eq__(self, other):
        o = self._lift(other) if not isinstance(other, RatFn) else other
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFn({str(self)!r})"

    def __str__(self):
        n = str(self.num)
        if self.den.degree == 0:
            return n
        d = str(self.den)
        if " " in n:
            n = f"({n})"
        if any(ch in d for ch in " */"):
            d = f"({d})"
        return f"{n}/{d}"
