"""Exact arithmetic in Q(i) extended by at most two square roots.

Elements live in a :class:`Tower` ``Q(i)(sqrt(e1))(sqrt(e2))`` whose
generators ``e1, e2`` are Gaussian integers that are not squares at the level
where they were adjoined.  Towers are interned and immutable; adjoining a
square root produces a new tower and every element of the old tower embeds
into it canonically.

Each generator ``sqrt(e)`` stands for the principal complex square root of
``e``; this fixes the complex embedding used for numeric evaluation and the
embedding between towers whose generator lists differ only in order.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from math import gcd, isqrt

from . import _kernel
from .errors import (
    DivisionByZero,
    ExtensionLimitExceeded,
    IncompatibleTowers,
    NotASquare,
)

__all__ = [
    "Tower",
    "FieldElem",
    "EMPTY",
    "ZERO",
    "ONE",
    "I",
    "try_sqrt",
    "as_elem",
]

_ZERO8 = _kernel.ZERO8


def _gmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


class Tower:
    """An immutable, interned list of at most two adjoined generators."""

    MAX_GENS = 2
    _interned: dict = {}
    __slots__ = ("gens", "k", "ngen", "__weakref__")

    def __new__(cls, gens=()):
        gens = tuple((int(r), int(i)) for r, i in gens)
        obj = cls._interned.get(gens)
        if obj is not None:
            return obj
        if len(gens) > cls.MAX_GENS:
            raise ExtensionLimitExceeded(
                f"a tower holds at most {cls.MAX_GENS} generators, got {len(gens)}"
            )
        obj = object.__new__(cls)
        obj.gens = gens
        obj.ngen = len(gens)
        e1 = gens[0] if gens else (0, 0)
        e2 = gens[1] if len(gens) > 1 else (0, 0)
        e12 = _gmul(e1, e2)
        obj.k = (e1[0], e1[1], e2[0], e2[1], e12[0], e12[1])
        if gens:
            # each generator must be a non-square over the tower below it
            below = Tower(gens[:-1])
            e = FieldElem._make((gens[-1][0], gens[-1][1], 0, 0, 0, 0, 0, 0), 1, below)
            if _sqrt_in(e, below.ngen) is not None:
                raise ValueError(f"{_render_gauss(*gens[-1])} is a square in {below}")
        cls._interned[gens] = obj
        return obj

    def __reduce__(self):
        return (Tower, (self.gens,))

    def __repr__(self):
        return f"Tower({list(self.gens)!r})"

    def __str__(self):
        if not self.gens:
            return "Q(i)"
        return "Q(i)[" + ", ".join(f"sqrt({_render_gauss(*g)})" for g in self.gens) + "]"

    def adjoin(self, e) -> "Tower":
        if self.ngen >= self.MAX_GENS:
            raise ExtensionLimitExceeded(
                f"cannot adjoin sqrt({_render_gauss(*e)}): {self} is already full"
            )
        return Tower(self.gens + (tuple(e),))

    def generator(self, j: int) -> "FieldElem":
        c = [0] * 8
        c[2 * (1 << j)] = 1
        return FieldElem._make(tuple(c), 1, self)

    def contains(self, other: "Tower") -> bool:
        return all(g in self.gens for g in other.gens)


EMPTY = Tower(())

_unify_cache: dict = {}


def unify_towers(t1: Tower, t2: Tower) -> Tower:
    if t1 is t2:
        return t1
    key = (t1, t2)
    hit = _unify_cache.get(key)
    if hit is not None:
        return hit
    if t2.contains(t1):
        res = t2
    elif t1.contains(t2):
        res = t1
    else:
        gens = t1.gens + tuple(g for g in t2.gens if g not in t1.gens)
        if len(gens) > Tower.MAX_GENS:
            raise IncompatibleTowers(f"cannot combine {t1} and {t2}")
        try:
            res = Tower(gens)
        except ValueError as exc:
            raise IncompatibleTowers(f"cannot combine {t1} and {t2}: {exc}") from None
    _unify_cache[key] = res
    return res


def _mask_map(src: Tower, dst: Tower):
    pos = [dst.gens.index(g) for g in src.gens]
    out = []
    for m in range(4):
        t = 0
        for j in range(src.ngen):
            if m >> j & 1:
                t |= 1 << pos[j]
        out.append(t)
    return out


_embed_cache: dict = {}


def _embed(x: "FieldElem", dst: Tower):
    src = x.tower
    if src is dst:
        return x._c
    if src.gens == dst.gens[: src.ngen]:
        return x._c
    mm = _embed_cache.get((src, dst))
    if mm is None:
        mm = _embed_cache[(src, dst)] = _mask_map(src, dst)
    c = x._c
    out = [0] * 8
    for m in range(1 << src.ngen):
        t = mm[m]
        out[2 * t] = c[2 * m]
        out[2 * t + 1] = c[2 * m + 1]
    return tuple(out)


def _render_fraction(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _render_gauss(re, im) -> str:
    re, im = Fraction(re), Fraction(im)
    if im == 0:
        return _render_fraction(re)
    if im == 1:
        ims = "i"
    elif im == -1:
        ims = "-i"
    else:
        ims = f"{_render_fraction(im)}*i"
    if re == 0:
        return ims
    if ims.startswith("-"):
        return f"{_render_fraction(re)} - {ims[1:]}"
    return f"{_render_fraction(re)} + {ims}"


class FieldElem:
    """An element of ``Q(i)(sqrt(e1))(sqrt(e2))``.

    Supports ``+ - * / **`` with other elements, ``int`` and ``Fraction``.
    Instances are immutable and hashable; equality and hashing are
    consistent across towers (an element of a subtower compares equal to its
    embedding).
    """

    __slots__ = ("_c", "_d", "tower")

    def __init__(self, value=0, tower: Tower | None = None):
        tower = EMPTY if tower is None else tower
        if isinstance(value, FieldElem):
            self._c, self._d = value._c, value._d
            self.tower = value.tower
            if tower is not EMPTY:
                t = unify_towers(tower, value.tower)
                self._c, self.tower = _embed(value, t), t
            return
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            self._c, self._d = (value, 0, 0, 0, 0, 0, 0, 0), 1
        elif isinstance(value, Fraction):
            self._c, self._d = (value.numerator, 0, 0, 0, 0, 0, 0, 0), value.denominator
        else:
            raise TypeError(f"cannot build a field element from {type(value).__name__}")
        self.tower = tower

    @classmethod
    def _make(cls, c, d, tower):
        obj = object.__new__(cls)
        obj._c = c
        obj._d = d
        obj.tower = tower
        return obj

    @classmethod
    def gaussian(cls, re, im=0) -> "FieldElem":
        re, im = Fraction(re), Fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        c = (re.numerator * (d // re.denominator), im.numerator * (d // im.denominator), 0, 0, 0, 0, 0, 0)
        c, d = _kernel.normalize(c, d)
        return cls._make(c, d, EMPTY)

    @classmethod
    def from_coords(cls, coords, tower: Tower = EMPTY) -> "FieldElem":
        """Build from up to four ``(re, im)`` pairs on the basis ``1, r1, r2, r1*r2``."""
        fr = []
        for re, im in coords:
            fr.append(Fraction(re))
            fr.append(Fraction(im))
        fr += [Fraction(0)] * (8 - len(fr))
        d = 1
        for q in fr:
            d = d * q.denominator // gcd(d, q.denominator)
        c = tuple(q.numerator * (d // q.denominator) for q in fr)
        if any(c[2 * m] or c[2 * m + 1] for m in range(1 << tower.ngen, 4)):
            raise ValueError(f"coordinates outside {tower}")
        c, d = _kernel.normalize(c, d)
        return cls._make(c, d, tower)

    # -- inspection -------------------------------------------------------

    def coords(self):
        """Coordinates as four ``(re, im)`` Fraction pairs."""
        d = self._d
        c = self._c
        return [(Fraction(c[2 * m], d), Fraction(c[2 * m + 1], d)) for m in range(4)]

    def is_zero(self) -> bool:
        return self._c == _ZERO8

    def __bool__(self):
        return self._c != _ZERO8

    def is_gaussian(self) -> bool:
        c = self._c
        return not (c[2] or c[3] or c[4] or c[5] or c[6] or c[7])

    def is_rational(self) -> bool:
        c = self._c
        return not (c[1] or c[2] or c[3] or c[4] or c[5] or c[6] or c[7])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._c[0], self._d)

    def gauss_parts(self):
        if not self.is_gaussian():
            raise ValueError(f"{self} is not a Gaussian rational")
        return Fraction(self._c[0], self._d), Fraction(self._c[1], self._d)

    def minimal_tower(self) -> Tower:
        """The smallest subtower (in generator order) that holds this element."""
        used = [False] * self.tower.ngen
        c = self._c
        for m in range(1, 4):
            if c[2 * m] or c[2 * m + 1]:
                for j in range(self.tower.ngen):
                    if m >> j & 1:
                        used[j] = True
        return Tower(tuple(g for g, u in zip(self.tower.gens, used) if u))

    def in_tower(self, tower: Tower) -> "FieldElem":
        t = unify_towers(self.tower, tower)
        if t is self.tower:
            return self
        return FieldElem._make(_embed(self, t), self._d, t)

    def is_real(self) -> bool:
        """True when every nonzero coordinate is real on a real radical monomial."""
        c = self._c
        for m in range(4):
            if not (c[2 * m] or c[2 * m + 1]):
                continue
            if c[2 * m + 1]:
                return False
            for j in range(self.tower.ngen):
                if m >> j & 1:
                    g = self.tower.gens[j]
                    if g[1] != 0 or g[0] < 0:
                        return False
        return True

    def __complex__(self):
        c, d = self._c, self._d
        roots = [cmath.sqrt(complex(*g)) for g in self.tower.gens]
        total = 0j
        for m in range(1 << self.tower.ngen):
            if not (c[2 * m] or c[2 * m + 1]):
                continue
            v = complex(c[2 * m] / d, c[2 * m + 1] / d)
            for j in range(self.tower.ngen):
                if m >> j & 1:
                    v *= roots[j]
            total += v
        return total

    # -- arithmetic -------------------------------------------------------

    def _pair(self, other):
        if isinstance(other, FieldElem):
            if other.tower is self.tower:
                return self._c, other._c, other._d, self.tower
            t = unify_towers(self.tower, other.tower)
            return _embed(self, t), _embed(other, t), other._d, t
        if isinstance(other, int):
            return self._c, (other, 0, 0, 0, 0, 0, 0, 0), 1, self.tower
        if isinstance(other, Fraction):
            return self._c, (other.numerator, 0, 0, 0, 0, 0, 0, 0), other.denominator, self.tower
        return None

    def __add__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        ac, bc, bd, t = p
        c, d = _kernel.add(ac, self._d, bc, bd)
        return FieldElem._make(c, d, t)

    __radd__ = __add__

    def __sub__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        ac, bc, bd, t = p
        c, d = _kernel.sub(ac, self._d, bc, bd)
        return FieldElem._make(c, d, t)

    def __rsub__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        ac, bc, bd, t = p
        c, d = _kernel.sub(bc, bd, ac, self._d)
        return FieldElem._make(c, d, t)

    def __neg__(self):
        return FieldElem._make(tuple(-x for x in self._c), self._d, self.tower)

    def __pos__(self):
        return self

    def __mul__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        ac, bc, bd, t = p
        c, d = _kernel.mul(ac, self._d, bc, bd, t.k, t.ngen)
        return FieldElem._make(c, d, t)

    __rmul__ = __mul__

    def _conj(self, j):
        bit = 1 << j
        c = list(self._c)
        for m in range(4):
            if m & bit:
                c[2 * m] = -c[2 * m]
                c[2 * m + 1] = -c[2 * m + 1]
        return FieldElem._make(tuple(c), self._d, self.tower)

    def conjugate_generator(self, j: int) -> "FieldElem":
        """Image under ``sqrt(e_j) -> -sqrt(e_j)`` (a field automorphism)."""
        return self._conj(j)

    def inverse(self) -> "FieldElem":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        acc = ONE
        z = self
        for j in range(self.tower.ngen - 1, -1, -1):
            zc = z._conj(j)
            acc = acc * zc
            z = z * zc
        a, b = z._c[0], z._c[1]
        # z = (a + b i)/d  ->  1/z = d (a - b i) / (a^2 + b^2)
        c, d = _kernel.normalize((a * z._d, -b * z._d, 0, 0, 0, 0, 0, 0), a * a + b * b)
        return acc * FieldElem._make(c, d, z.tower)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, FieldElem):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE.in_tower(self.tower)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            if other.tower is self.tower:
                return self._d == other._d and self._c == other._c
            try:
                t = unify_towers(self.tower, other.tower)
            except IncompatibleTowers:
                return self._key() == other._key()
            return self._d == other._d and _embed(self, t) == _embed(other, t)
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self._c[0], self._d) == other
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def _key(self):
        c = self._c
        parts = []
        for m in range(4):
            if c[2 * m] or c[2 * m + 1]:
                gens = frozenset(self.tower.gens[j] for j in range(self.tower.ngen) if m >> j & 1)
                parts.append((gens, c[2 * m], c[2 * m + 1]))
        return (frozenset(parts), self._d)

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self._c[0], self._d))
        return hash(self._key())

    # -- rendering --------------------------------------------------------

    def __repr__(self):
        return f"FieldElem({str(self)!r})"

    def __str__(self):
        terms = []
        for m, (re, im) in enumerate(self.coords()):
            if re == 0 and im == 0:
                continue
            rad = "*".join(
                f"sqrt({_render_gauss(*self.tower.gens[j])})"
                for j in range(self.tower.ngen)
                if m >> j & 1
            )
            coef = _render_gauss(re, im)
            if not rad:
                terms.append(coef)
            elif coef == "1":
                terms.append(rad)
            elif coef == "-1":
                terms.append("-" + rad)
            elif re != 0 and im != 0:
                terms.append(f"({coef})*{rad}")
            else:
                terms.append(f"{coef}*{rad}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out


ZERO = FieldElem(0)
ONE = FieldElem(1)
I = FieldElem.gaussian(0, 1)


def as_elem(x) -> FieldElem:
    if isinstance(x, FieldElem):
        return x
    if isinstance(x, (int, Fraction)):
        return FieldElem(x)
    raise TypeError(f"expected a field element, got {type(x).__name__}")


# -- square roots ---------------------------------------------------------


def _rational_sqrt(q: Fraction):
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    sn, sd = isqrt(n), isqrt(d)
    if sn * sn == n and sd * sd == d:
        return Fraction(sn, sd)
    return None


def _gauss_sqrt(a: Fraction, b: Fraction):
    """Square root of ``a + b i`` in Q(i) as an ``(re, im)`` pair, or None."""
    if b == 0:
        if a >= 0:
            r = _rational_sqrt(a)
            return None if r is None else (r, Fraction(0))
        r = _rational_sqrt(-a)
        return None if r is None else (Fraction(0), r)
    mod = _rational_sqrt(a * a + b * b)
    if mod is None:
        return None
    c = _rational_sqrt((a + mod) / 2)
    if c is None or c == 0:
        return None
    return (c, b / (2 * c))


def _split(x: FieldElem, k: int):
    """Write ``x = alpha + beta * r_k`` with alpha, beta over the first k-1 generators."""
    bit = 1 << (k - 1)
    c = x._c
    a = [0] * 8
    b = [0] * 8
    for m in range(4):
        if m & bit:
            b[2 * (m ^ bit)] = c[2 * m]
            b[2 * (m ^ bit) + 1] = c[2 * m + 1]
        else:
            a[2 * m] = c[2 * m]
            a[2 * m + 1] = c[2 * m + 1]
    ac, ad = _kernel.normalize(tuple(a), x._d)
    bc, bd = _kernel.normalize(tuple(b), x._d)
    return FieldElem._make(ac, ad, x.tower), FieldElem._make(bc, bd, x.tower)


def _gen_value(tower: Tower, k: int) -> FieldElem:
    g = tower.gens[k - 1]
    return FieldElem._make((g[0], g[1], 0, 0, 0, 0, 0, 0), 1, tower)


def _sqrt_in(x: FieldElem, k: int):
    """Square root of ``x`` inside the subfield generated by the first k generators."""
    if k == 0:
        if not x.is_gaussian():
            return None
        a, b = x.gauss_parts()
        r = _gauss_sqrt(a, b)
        if r is None:
            return None
        return FieldElem.from_coords([r], EMPTY).in_tower(x.tower)
    alpha, beta = _split(x, k)
    e = _gen_value(x.tower, k)
    r = x.tower.generator(k - 1)
    if beta.is_zero():
        s = _sqrt_in(alpha, k - 1)
        if s is not None:
            return s
        s = _sqrt_in(alpha / e, k - 1)
        if s is not None:
            return s * r
        return None
    n = _sqrt_in(alpha * alpha - e * beta * beta, k - 1)
    if n is None:
        return None
    for sg in (n, -n):
        p = _sqrt_in((alpha + sg) / 2, k - 1)
        if p is not None and not p.is_zero():
            return p + (beta / (2 * p)) * r
    return None


def _positive(x: FieldElem) -> bool:
    for re, im in x.coords():
        if re != 0:
            return re > 0
        if im != 0:
            return im > 0
    return True


def canonical_sign(x: FieldElem) -> FieldElem:
    """Pick, of ``x`` and ``-x``, the one whose first nonzero coordinate is positive."""
    return x if _positive(x) else -x


def _squarefree_split(n: int):
    """``n = s**2 * r`` with ``r`` free of small square factors; returns ``(s, r)``."""
    s = 1
    p = 2
    while p * p <= n and p < 10_000:
        while n % (p * p) == 0:
            n //= p * p
            s *= p
        p += 1 if p == 2 else 2
    r = isqrt(n)
    if r * r == n:
        return s * r, 1
    return s, n


def normalize_generator(x: FieldElem):
    """Write a Gaussian rational as ``w**2 * e``; returns ``(e, w)``.

    ``e`` is a Gaussian integer with its rational square content removed and
    ``w * sqrt(e)`` is the principal square root of ``x``.
    """
    a, b, d = x._c[0], x._c[1], x._d
    e = (a * d, b * d)
    w = FieldElem(Fraction(1, d))
    if e[1] == 0 and e[0] < 0:
        e = (-e[0], 0)
        w = w * I
    g = gcd(abs(e[0]), abs(e[1]))
    s, _ = _squarefree_split(g)
    if s > 1:
        e = (e[0] // (s * s), e[1] // (s * s))
        w = w * s
    return e, w


def try_sqrt(x, allow_extend: bool = False, tower: Tower | None = None) -> FieldElem:
    """Square root of ``x`` in its tower (or in ``tower`` when that is larger).

    Of the two roots the one under :func:`canonical_sign` is returned.  When
    ``x`` has no root there and ``allow_extend`` is set, a generator is
    adjoined (subject to the two-generator cap) and the result lives in the
    extended tower.

    Raises NotASquare or ExtensionLimitExceeded.
    """
    x = as_elem(x)
    if tower is not None:
        x = x.in_tower(tower)
    t = x.tower
    s = _sqrt_in(x, t.ngen)
    if s is not None:
        return canonical_sign(s)
    if not allow_extend:
        raise NotASquare(f"{x} is not a square in {t}")
    if x.is_gaussian():
        e, w = normalize_generator(x)
        nt = t.adjoin(e)
        return canonical_sign(w.in_tower(nt) * nt.generator(nt.ngen - 1))
    # sqrt(alpha + beta r_k): denest through sqrt((alpha + n)/2) when that lies in Q(i)
    k = t.ngen
    alpha, beta = _split(x, k)
    if not beta.is_zero():
        n = _sqrt_in(alpha * alpha - _gen_value(t, k) * beta * beta, k - 1)
        if n is not None:
            for sg in (n, -n):
                half = (alpha + sg) / 2
                if half.is_gaussian() and not half.is_zero():
                    p = try_sqrt(half, allow_extend=True)
                    r = p.tower.generator(p.tower.gens.index(t.gens[k - 1]))
                    s = p + (beta / (2 * p)) * r
                    if s * s == x:
                        return canonical_sign(s)
    raise ExtensionLimitExceeded(f"sqrt({x}) needs a nested radical outside {t}")
