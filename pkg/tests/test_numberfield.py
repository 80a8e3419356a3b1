from fractions import Fraction

import pytest

from knotsig.numberfield import RealAlgebraicField
from knotsig.sturm import isolate_real_roots


def golden_fields():
    neg, pos = isolate_real_roots((-1, -1, 1), Fraction(-2), Fraction(2))
    return (RealAlgebraicField((-1, -1, 1), pos),
            RealAlgebraicField((-1, -1, 1), neg))


def test_sign_examples():
    big, small = golden_fields()
    e = big.element((-1, 1))  # z - 1
    assert big.sign(e) == 1          # golden ratio exceeds 1
    assert small.sign(e) == -1       # negative root case
    assert big.sign(big.zero) == 0


def test_zero_detected_algebraically():
    big, _ = golden_fields()
    # z^2 - z - 1 reduces to zero
    assert big.element((-1, -1, 1)) == ()
    assert big.sign(big.element((-1, -1, 1))) == 0


def test_arithmetic_identities():
    big, _ = golden_fields()
    z = big.generator
    # z^2 = z + 1 in this field
    assert big.mul(z, z) == big.element((1, 1))
    inv = big.inverse(z)
    assert big.mul(z, inv) == big.one
    # 1/z = z - 1 for the golden ratio equation
    assert inv == big.element((-1, 1))


def test_inverse_of_zero():
    big, _ = golden_fields()
    with pytest.raises(ZeroDivisionError):
        big.inverse(big.zero)


def test_degree_one_field():
    root = isolate_real_roots((-7, 4), Fraction(-2), Fraction(2))
    assert len(root) == 1 and root[0].is_exact and root[0].lo == Fraction(7, 4)
    fld = RealAlgebraicField((-7, 4), root[0])
    e = fld.element((Fraction(-3, 2), 1))  # z - 3/2 at z = 7/4
    assert fld.sign(e) == 1
    assert fld.sign(fld.element((-2, 1))) == -1
