"""Real algebraic number fields Q[z]/(q) with a chosen real embedding.

Elements are tuples of Fractions of length < deg q (ascending powers of z).
The embedding is a RealRoot of q; signs of nonzero elements are decided by
interval evaluation with on-demand refinement, and the zero test is
algebraic (an element is zero iff its reduced representative is zero).
"""

from __future__ import annotations

from fractions import Fraction

from . import intpoly as ip
from .sturm import RealRoot

Element = tuple  # tuple[Fraction, ...], reduced mod q


class RealAlgebraicField:
    """Q[z]/(q(z)) embedded at a fixed real root of q.

    q must be irreducible over Q (primitive, positive leading coefficient);
    irreducibility is the caller's responsibility and everything here
    (uniqueness of reduced representatives, the zero test, termination of
    sign refinement) relies on it.
    """

    def __init__(self, q, root: RealRoot):
        self.q = ip.trim(q)
        self.degree = ip.degree(self.q)
        if self.degree < 1:
            raise ValueError("defining polynomial must be nonconstant")
        self.root = root

    # -- construction -------------------------------------------------

    def element(self, coeffs) -> Element:
        """Reduce an arbitrary rational polynomial in z to a field element."""
        fr = tuple(Fraction(c) for c in coeffs)
        if len(fr) >= self.degree + 1:
            _, fr = ip.divmod_exact(fr, self.q)
        return ip.trim(fr)

    def from_rational(self, c) -> Element:
        return self.element((Fraction(c),))

    @property
    def zero(self) -> Element:
        return ()

    @property
    def one(self) -> Element:
        return (Fraction(1),)

    @property
    def generator(self) -> Element:
        return self.element((0, 1))

    # -- arithmetic ----------------------------------------------------

    def add(self, a: Element, b: Element) -> Element:
        return ip.add(a, b)

    def sub(self, a: Element, b: Element) -> Element:
        return ip.sub(a, b)

    def neg(self, a: Element) -> Element:
        return ip.neg(a)

    def mul(self, a: Element, b: Element) -> Element:
        return self.element(ip.mul(a, b))

    def inverse(self, a: Element) -> Element:
        """Multiplicative inverse by the extended Euclidean algorithm."""
        if ip.is_zero(a):
            raise ZeroDivisionError("inverse of zero field element")
        r0, r1 = tuple(Fraction(c) for c in self.q), tuple(Fraction(c) for c in a)
        s0, s1 = (), (Fraction(1),)
        while not ip.is_zero(r1):
            qq, rr = ip.divmod_exact(r0, r1)
            r0, r1 = r1, rr
            s0, s1 = s1, ip.sub(s0, ip.mul(qq, s1))
        # r0 is a nonzero constant: q irreducible and a nonzero of lower degree
        assert ip.degree(r0) == 0, "defining polynomial is not irreducible"
        inv_c = 1 / r0[0]
        return self.element(ip.scale(s0, inv_c))

    def div(self, a: Element, b: Element) -> Element:
        return self.mul(a, self.inverse(b))

    def is_zero(self, a: Element) -> bool:
        return ip.is_zero(a)

    # -- the real embedding ---------------------------------------------

    def sign(self, a: Element) -> int:
        """Exact sign of a under the embedding: -1, 0, or +1.

        Zero is decided algebraically; otherwise the isolating interval is
        refined until interval evaluation separates from zero, which must
        happen because a nonzero reduced element cannot vanish at a root
        of the irreducible q.
        """
        if ip.is_zero(a):
            return 0
        if self.root.is_exact:
            v = ip.eval_at(a, self.root.lo)
            assert v != 0
            return 1 if v > 0 else -1
        while True:
            lo, hi = ip.interval_eval(a, self.root.lo, self.root.hi)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            self.root.refine()
