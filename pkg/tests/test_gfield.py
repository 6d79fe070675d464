from fractions import Fraction

import pytest

from conchoidal.errors import DivisionByZero, ExtensionLimitExceeded, IncompatibleTowers, NotASquare
from conchoidal.gfield import EMPTY, I, ONE, FieldElem, Tower, canonical_sign, try_sqrt, unify_towers


def test_conjugate_product():
    assert (1 + I) * (1 - I) == 2


def test_gaussian_division():
    # multiply by the conjugate: (3+4i)(1-2i)/5 = (11 - 2i)/5
    q = FieldElem.gaussian(3, 4) / FieldElem.gaussian(1, 2)
    assert q == FieldElem.gaussian(Fraction(11, 5), Fraction(-2, 5))
    assert q * FieldElem.gaussian(1, 2) == FieldElem.gaussian(3, 4)


def test_adjoined_square():
    r = try_sqrt(5, allow_extend=True)
    assert r * r == 5
    assert r.tower.gens == ((5, 0),)


def test_sqrt_basic():
    assert try_sqrt(-1) == I
    assert try_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert try_sqrt(FieldElem.gaussian(0, 2)) == 1 + I


def test_sqrt_refuses_without_extension():
    with pytest.raises(NotASquare):
        try_sqrt(5)


def test_sqrt_normalizes_generator():
    assert str(try_sqrt(-5, allow_extend=True)) == "i*sqrt(5)"
    assert str(try_sqrt(8, allow_extend=True)) == "2*sqrt(2)"
    assert str(try_sqrt(Fraction(5, 4), allow_extend=True)) == "1/2*sqrt(5)"


def test_sqrt_denests():
    r5 = try_sqrt(5, allow_extend=True)
    x = Fraction(7, 2) + Fraction(3, 2) * r5
    s = try_sqrt(x)
    assert s * s == x
    assert s == Fraction(3, 2) + Fraction(1, 2) * r5


def test_sqrt_through_new_generator():
    r5 = try_sqrt(5, allow_extend=True)
    # (sqrt(2) + sqrt(10))^2 / ... : sqrt(6 + 2*sqrt(5)) = 1 + sqrt(5) lies in the tower already
    assert try_sqrt(6 + 2 * r5) == 1 + r5
    # sqrt(3 + sqrt(5)) = (sqrt(2) + sqrt(10))/2 needs sqrt(2)
    s = try_sqrt(3 + r5, allow_extend=True)
    assert s * s == 3 + r5
    assert s.tower.ngen == 2


def test_nested_radical_hits_cap():
    r5 = try_sqrt(5, allow_extend=True)
    with pytest.raises(ExtensionLimitExceeded):
        try_sqrt(r5, allow_extend=True)


def test_tower_cap():
    t = Tower([(2, 0), (3, 0)])
    with pytest.raises(ExtensionLimitExceeded):
        t.adjoin((5, 0))
    with pytest.raises(IncompatibleTowers):
        unify_towers(t, Tower([(7, 0)]))


def test_generator_must_be_nonsquare():
    with pytest.raises(ValueError):
        Tower([(4, 0)])
    with pytest.raises(ValueError):
        Tower([(0, 2)])  # 2i = (1+i)^2


def test_canonical_sign():
    r = try_sqrt(FieldElem.gaussian(-4, 0))
    assert r == 2 * I
    assert canonical_sign(-(1 + I)) == 1 + I
    assert canonical_sign(FieldElem.gaussian(0, -3)) == 3 * I


def test_embedding_and_equality():
    r2 = try_sqrt(2, allow_extend=True)
    r3 = try_sqrt(3, allow_extend=True)
    x = r2 * r3
    assert x * x == 6
    assert (r2 + 1) - r2 == 1
    assert (r2 + r3) - r3 == r2
    assert hash(FieldElem(3)) == hash(3)


def test_inverse_and_zero_division():
    r = try_sqrt(5, allow_extend=True)
    x = 2 + r * I
    assert x * x.inverse() == ONE
    with pytest.raises(DivisionByZero):
        FieldElem(0).inverse()
    with pytest.raises(ZeroDivisionError):
        ONE / 0


def test_rendering():
    r5 = try_sqrt(5, allow_extend=True)
    assert str(Fraction(3, 2) + Fraction(1, 2) * r5) == "3/2 + 1/2*sqrt(5)"
    assert str((1 + 2 * I) * r5) == "(1 + 2*i)*sqrt(5)"
    assert str(-I) == "-i"
    assert str(FieldElem(0)) == "0"


def test_numeric_embedding():
    r = try_sqrt(FieldElem.gaussian(0, -1) * 5, allow_extend=True)
    assert abs(complex(r) ** 2 - complex(0, -5)) < 1e-12


def test_empty_tower():
    assert FieldElem(1).tower is EMPTY
    assert FieldElem(1).is_rational()
    assert not I.is_rational() and I.is_gaussian()
