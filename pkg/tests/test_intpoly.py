from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotsig import intpoly as ip
from knotsig.errors import DivisibilityError

small_polys = st.lists(st.integers(-6, 6), min_size=0, max_size=7).map(ip.trim)


def test_trim_and_degree():
    assert ip.trim((0, 1, 0, 0)) == (0, 1)
    assert ip.degree(()) == -1
    assert ip.degree((5,)) == 0


@given(small_polys, small_polys)
@settings(max_examples=60)
def test_mul_degree_and_commutativity(f, g):
    assert ip.mul(f, g) == ip.mul(g, f)
    if f and g:
        assert ip.degree(ip.mul(f, g)) == ip.degree(f) + ip.degree(g)


@given(small_polys, small_polys)
@settings(max_examples=60)
def test_divmod_reconstruction(f, g):
    if ip.is_zero(g):
        return
    q, r = ip.divmod_exact(f, g)
    assert ip.add(ip.mul(q, g), r) == tuple(Fraction(c) for c in ip.trim(f)) or \
        ip.add(ip.mul(q, g), r) == ip.trim(f)
    assert ip.degree(r) < ip.degree(g)


def test_div_exact_raises_on_remainder():
    with pytest.raises(DivisibilityError):
        ip.div_exact((1, 1), (1, 2))


def test_gcd_known():
    f = ip.mul((1, 1), (2, 0, 1))
    g = ip.mul((1, 1), (1, 1, 1))
    assert ip.gcd_int_poly(f, g) == (1, 1)


@given(small_polys, small_polys, small_polys)
@settings(max_examples=40)
def test_gcd_divides_both(f, g, h):
    a, b = ip.mul(f, h), ip.mul(g, h)
    if ip.is_zero(a) and ip.is_zero(b):
        return
    d = ip.gcd_int_poly(a, b)
    if ip.is_zero(a):
        assert d == ip.primitive(b)[1]
        return
    for target in (a, b):
        if not ip.is_zero(target):
            _, r = ip.divmod_exact(target, d)
            assert ip.is_zero(r)


def test_squarefree_decomposition():
    f = ip.mul(ip.mul((1, 1), (1, 1)), (-1, 0, 1))  # (x+1)^3 (x-1)
    parts = ip.squarefree_decomposition(f)
    assert parts == [((-1, 1), 1), ((1, 1), 3)]


def test_cyclotomic_values():
    assert ip.cyclotomic(1) == (-1, 1)
    assert ip.cyclotomic(6) == (1, -1, 1)
    assert ip.cyclotomic(10) == (1, -1, 1, -1, 1)
    assert ip.cyclotomic(30) == (1, 1, 0, -1, -1, -1, 0, 1, 1)
    # product of phi_d over d | n gives x^n - 1
    n = 12
    prod = (1,)
    for d in range(1, n + 1):
        if n % d == 0:
            prod = ip.mul(prod, ip.cyclotomic(d))
    assert prod == ip.trim((-1,) + (0,) * (n - 1) + (1,))


def test_interval_eval_contains_true_values():
    f = (1, -3, 0, 2)
    lo, hi = ip.interval_eval(f, Fraction(-1, 2), Fraction(3, 4))
    for k in range(21):
        x = Fraction(-1, 2) + Fraction(k, 16)
        if x > Fraction(3, 4):
            break
        assert lo <= ip.eval_at(f, x) <= hi


def test_mod_monic_matches_divmod():
    f = (3, -1, 4, 1, -5)
    g = (2, -1, 1)  # monic
    _, r = ip.divmod_exact(f, g)
    assert ip.mod_monic(f, g) == tuple(int(c) for c in r)
