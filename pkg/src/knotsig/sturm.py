"""Sturm chains, real root counting, and certified root isolation.

Roots are represented by RealRoot: a squarefree integer polynomial together
with either an exact rational value or an isolating interval with a sign
change.  Intervals only ever shrink; the represented number never changes,
so sharing a RealRoot between threads is safe in the same sense as sharing
an immutable value.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import intpoly as ip
from .errors import SquarefreeError


def sign_at(f, x: Fraction) -> int:
    v = ip.eval_at(f, x)
    return (v > 0) - (v < 0)


def _signed_prem(f, g):
    """r = s * rem(f, g) with s a *positive* rational, over the integers."""
    r = list(ip.trim(f))
    dg, lg = ip.degree(g), g[-1]
    flips = 0
    while len(r) - 1 >= dg and r:
        dr, lr = len(r) - 1, r[-1]
        if lg < 0:
            flips ^= 1
        r = [c * lg for c in r]
        for i in range(dg + 1):
            r[dr - dg + i] -= lr * g[i]
        while r and r[-1] == 0:
            r.pop()
    out = ip.trim(r)
    if flips:
        out = ip.neg(out)
    return out


def _positive_primitive(f):
    """Divide by the positive content, preserving sign."""
    if ip.is_zero(f):
        return f
    c = ip.content(f)
    return tuple(a // c for a in f)


@lru_cache(maxsize=None)
def sturm_chain(q: tuple) -> tuple:
    """The Sturm chain of q, with positive-rational rescaling only."""
    chain = [ip.trim(q), ip.derivative(q)]
    while not ip.is_zero(chain[-1]) and ip.degree(chain[-1]) > 0:
        r = _signed_prem(chain[-2], chain[-1])
        if ip.is_zero(r):
            break
        chain.append(_positive_primitive(ip.neg(r)))
    return tuple(chain)


def _variations(chain, x: Fraction) -> int:
    signs = [s for s in (sign_at(f, x) for f in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def is_squarefree(q) -> bool:
    return ip.degree(ip.gcd_int_poly(q, ip.derivative(q))) == 0


def _deflate_root(q, x: Fraction):
    """Divide out an exact rational root x of q."""
    quo = ip.div_exact(q, (-x, Fraction(1)))
    return ip.rational_primitive(quo)[1]


def count_roots_open(q, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of squarefree q in the open interval."""
    q = ip.primitive(q)[1]
    if not is_squarefree(q):
        raise SquarefreeError("root counting requires a squarefree polynomial")
    if lo >= hi:
        return 0
    while sign_at(q, lo) == 0:
        q = _deflate_root(q, lo)
    while sign_at(q, hi) == 0:
        q = _deflate_root(q, hi)
    if ip.degree(q) < 1:
        return 0
    chain = sturm_chain(tuple(q))
    return _variations(chain, lo) - _variations(chain, hi)


class RealRoot:
    """A real algebraic number: a root of a squarefree integer polynomial.

    Either exact (lo == hi, a rational root) or given by an isolating
    interval (lo, hi) on which the polynomial changes sign exactly once.
    """

    __slots__ = ("poly", "_lo", "_hi")

    def __init__(self, poly, lo: Fraction, hi: Fraction):
        self.poly = ip.trim(poly)
        self._lo = Fraction(lo)
        self._hi = Fraction(hi)
        if lo > hi:
            raise ValueError("empty interval")
        if lo == hi:
            if sign_at(self.poly, lo) != 0:
                raise ValueError("claimed exact root does not vanish")
        elif sign_at(self.poly, lo) * sign_at(self.poly, hi) >= 0:
            raise ValueError("interval endpoints must straddle a sign change")

    @classmethod
    def exact(cls, poly, value: Fraction) -> "RealRoot":
        return cls(poly, value, value)

    @property
    def lo(self) -> Fraction:
        return self._lo

    @property
    def hi(self) -> Fraction:
        return self._hi

    @property
    def is_exact(self) -> bool:
        return self._lo == self._hi

    @property
    def mid(self) -> Fraction:
        return (self._lo + self._hi) / 2

    def width(self) -> Fraction:
        return self._hi - self._lo

    def refine(self) -> None:
        """Halve the isolating interval (no-op for exact roots)."""
        if self.is_exact:
            return
        m = self.mid
        sm = sign_at(self.poly, m)
        if sm == 0:
            self._lo = self._hi = m
        elif sm == sign_at(self.poly, self._lo):
            self._lo = m
        else:
            self._hi = m

    def refine_below(self, width: Fraction) -> None:
        while not self.is_exact and self.width() >= width:
            self.refine()

    def separate_from(self, other: "RealRoot") -> None:
        """Shrink both intervals until they are disjoint (distinct numbers)."""
        for _ in range(10_000):
            if self._hi < other._lo or other._hi < self._lo:
                return
            if self.is_exact and other.is_exact and self._lo == other._lo:
                raise ValueError("roots are equal; cannot separate")
            self.refine()
            other.refine()
        raise ArithmeticError("failed to separate roots (equal numbers?)")

    def compare(self, other: "RealRoot") -> int:
        """-1, 0, +1 ordering; 0 only for exact equal rationals."""
        if self.is_exact and other.is_exact:
            a, b = self._lo, other._lo
            return (a > b) - (a < b)
        self.separate_from(other)
        return -1 if self._hi < other._lo else 1

    def refine_strictly_inside(self, lo: Fraction, hi: Fraction) -> None:
        """Shrink until the interval sits strictly inside (lo, hi)."""
        while not (self.is_exact or (lo < self._lo and self._hi < hi)):
            self.refine()
        if self.is_exact and not (lo < self._lo < hi):
            raise ValueError("exact root is not inside the interval")

    def __repr__(self) -> str:
        if self.is_exact:
            return f"RealRoot({self._lo})"
        return f"RealRoot([{self._lo}, {self._hi}])"


def isolate_real_roots(q, lo: Fraction, hi: Fraction) -> list[RealRoot]:
    """Isolating intervals for all roots of squarefree q in the open (lo, hi).

    The returned RealRoots are pairwise disjoint, sorted increasing, strictly
    inside (lo, hi), and jointly exhaustive (Sturm-certified counts).
    """
    q = ip.primitive(q)[1]
    if ip.degree(q) < 0:
        raise ValueError("cannot isolate roots of the zero polynomial")
    if not is_squarefree(q):
        raise SquarefreeError("root isolation requires a squarefree polynomial")
    lo, hi = Fraction(lo), Fraction(hi)
    def solve(poly, a: Fraction, b: Fraction) -> list[RealRoot]:
        # roots strictly inside (a, b); poly may vanish at the endpoints
        sub = poly
        while sign_at(sub, a) == 0:
            sub = _deflate_root(sub, a)
        while sign_at(sub, b) == 0:
            sub = _deflate_root(sub, b)
        if ip.degree(sub) < 1:
            return []
        chain = sturm_chain(tuple(sub))

        def rec(x: Fraction, y: Fraction, vx: int, vy: int) -> list[RealRoot]:
            n = vx - vy
            if n == 0:
                return []
            if n == 1:
                return [RealRoot(sub, x, y)]
            m = (x + y) / 2
            if sign_at(sub, m) == 0:
                return solve(sub, x, m) + [RealRoot.exact(sub, m)] + solve(sub, m, y)
            vm = _variations(chain, m)
            return rec(x, m, vx, vm) + rec(m, y, vm, vy)

        return rec(a, b, _variations(chain, a), _variations(chain, b))

    roots = solve(q, lo, hi)
    for r in roots:
        r.refine_strictly_inside(lo, hi)
    for a, b in zip(roots, roots[1:]):
        a.separate_from(b)
    return roots
