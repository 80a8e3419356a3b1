"""Exact signatures of hermitian forms attached to Seifert matrices.

For a point omega on the upper unit circle with 2*cos(angle) = z0 a root of
an integer polynomial q, the matrix (1-omega)V + (1-conj(omega))V^T is
hermitian over the field Q(omega).  Writing l = lc(q), zhat = l*z and
what = l*omega, everything is scaled into the order

    Z[zhat, what] / (qhat(zhat), what^2 - zhat*what + l^2),

whose elements are pairs (a, b) of integer polynomials in zhat of degree
less than deg q, meaning a + b*what.  The involution fixes zhat and sends
what to zhat - what; diagonal entries of hermitian matrices land in the
real subring (b = 0) and their signs are decided at the embedding.

Signatures are computed by a fraction-free (Bareiss) symmetric elimination:
divisions are exact in the order, pivots are real, and the sign of each
elimination step is sign(d_s * d_{s-1}).  Singular matrices are fine; a
remaining all-zero block is reported as nullity.  When every active
diagonal entry vanishes but the block is nonzero, a standard congruence
repair creates a pivot; if that happens mid-elimination the active
submatrix is restarted fresh, with signs corrected by the sign of the
previous pivot.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from . import intpoly as ip
from .errors import SingularSampleError
from .sturm import RealRoot

Pair = tuple  # (a, b): two int-coefficient tuples, ascending powers of zhat


class ScaledOrder:
    """The order Z[zhat, what] above, with the embedding data for signs."""

    def __init__(self, q, root: RealRoot):
        q = ip.trim(q)
        if ip.is_zero(q) or q[-1] <= 0:
            raise ValueError("defining polynomial must have positive leading coefficient")
        self.q = q
        self.m = ip.degree(q)
        self.l = q[-1]
        l, m = self.l, self.m
        self.qhat = tuple(q[k] * l ** (m - 1 - k) for k in range(m)) + (1,)
        self.e = l * l
        if root.is_exact:
            self.root = RealRoot.exact(self.qhat, l * root.lo)
        else:
            self.root = RealRoot(self.qhat, l * root.lo, l * root.hi)
        self.zero: Pair = ((), ())
        self.one: Pair = ((1,), ())

    # -- ring operations ------------------------------------------------

    def reduce(self, a):
        return ip.mod_monic(a, self.qhat)

    def add(self, x: Pair, y: Pair) -> Pair:
        return (ip.add(x[0], y[0]), ip.add(x[1], y[1]))

    def sub(self, x: Pair, y: Pair) -> Pair:
        return (ip.sub(x[0], y[0]), ip.sub(x[1], y[1]))

    def mul(self, x: Pair, y: Pair) -> Pair:
        a1, b1 = x
        a2, b2 = y
        bb = ip.mul(b1, b2)
        re = ip.sub(ip.mul(a1, a2), ip.scale(bb, self.e))
        im = ip.add(ip.add(ip.mul(a1, b2), ip.mul(a2, b1)), ip.shift(bb, 1))
        return (self.reduce(re), self.reduce(im))

    def conj(self, x: Pair) -> Pair:
        a, b = x
        return (self.reduce(ip.add(a, ip.shift(b, 1))), ip.neg(b))

    def is_zero(self, x: Pair) -> bool:
        return ip.is_zero(x[0]) and ip.is_zero(x[1])

    def size(self, x: Pair) -> int:
        return sum(abs(c).bit_length() for c in x[0]) + sum(abs(c).bit_length() for c in x[1])

    # -- real (involution-fixed) elements --------------------------------

    def real_part_only(self, x: Pair):
        assert ip.is_zero(x[1]), "expected an involution-fixed element"
        return x[0]

    def real_sign(self, a) -> int:
        """Sign of a real element (an integer polynomial in zhat) at the embedding."""
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

    def real_inverse(self, d):
        """(num, den) with num/den the inverse of the real element d mod qhat."""
        if self.m == 1:
            return ((1,), d[0])
        r0 = tuple(Fraction(c) for c in self.qhat)
        r1 = tuple(Fraction(c) for c in d)
        s0, s1 = (), (Fraction(1),)
        while not ip.is_zero(r1):
            qq, rr = ip.divmod_exact(r0, r1)
            r0, r1 = r1, rr
            s0, s1 = s1, ip.sub(s0, ip.mul(qq, s1))
        assert ip.degree(r0) == 0, "pivot not invertible modulo qhat"
        inv = ip.scale(s0, 1 / r0[0])
        den = 1
        for c in inv:
            den = den * c.denominator // gcd(den, c.denominator)
        num = tuple(int(c * den) for c in inv)
        return (num, den)

    def divide_real(self, x: Pair, inv) -> Pair:
        """Divide x by a real element given as (num, den); must be exact."""
        num, den = inv
        out = []
        for comp in x:
            v = self.reduce(ip.mul(comp, num))
            if den != 1:
                assert all(c % den == 0 for c in v), "inexact Bareiss division"
                v = tuple(c // den for c in v)
            out.append(v)
        return (out[0], out[1])


def order_for_sample(z: Fraction) -> ScaledOrder:
    """The (degree-1) order for a rational trace value z in (-2, 2)."""
    z = Fraction(z)
    if not -2 < z < 2:
        raise ValueError("sample must lie strictly inside (-2, 2)")
    p, r = z.numerator, z.denominator
    q = (-p, r)
    return ScaledOrder(q, RealRoot.exact(q, z))


def hermitian_entries(V, order: ScaledOrder) -> list[list[Pair]]:
    """l * [(1-omega)V + (1-conj(omega))V^T] over the order.

    The positive rescale by l leaves the signature unchanged.
    """
    n = len(V)
    l = order.l
    A: list[list[Pair]] = [[order.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            vij, vji = V[i][j], V[j][i]
            a = order.reduce(ip.trim((l * (vij + vji), -vji)))
            b = ip.trim((vji - vij,))
            A[i][j] = (a, b)
    return A


def signature_triple(A: list[list[Pair]], order: ScaledOrder) -> tuple[int, int, int]:
    """(positive, negative, nullity) of a hermitian matrix over the order."""
    n = len(A)
    return _eliminate([row[:] for row in A], list(range(n)), order)


def _eliminate(A, idx: list[int], order: ScaledOrder) -> tuple[int, int, int]:
    pos = neg = null = 0
    prev = order.one
    prev_sign = 1
    fresh = True
    while idx:
        piv, best = None, None
        for i in idx:
            d = A[i][i]
            if not order.is_zero(d):
                sz = order.size(d)
                if best is None or sz < best:
                    piv, best = i, sz
        if piv is None:
            pair = None
            for a_pos, i in enumerate(idx):
                for j in idx[a_pos + 1 :]:
                    if not order.is_zero(A[i][j]):
                        pair = (i, j)
                        break
                if pair:
                    break
            if pair is None:
                null += len(idx)
                break
            if not fresh:
                # entries carry the Bareiss scaling; restart the block fresh
                sub = [[A[i][j] for j in idx] for i in idx]
                p2, n2, z2 = _eliminate(sub, list(range(len(idx))), order)
                if prev_sign < 0:
                    p2, n2 = n2, p2
                pos += p2
                neg += n2
                null += z2
                break
            i, j = pair
            c = A[i][j]
            cc = order.conj(c)
            for k in idx:
                A[i][k] = order.add(A[i][k], order.mul(c, A[j][k]))
            for k in idx:
                A[k][i] = order.add(A[k][i], order.mul(A[k][j], cc))
            continue

        d = order.real_part_only(A[piv][piv])
        d_sign = order.real_sign(d)
        if d_sign * prev_sign > 0:
            pos += 1
        else:
            neg += 1
        inv_prev = order.real_inverse(order.real_part_only(prev))
        rest = [i for i in idx if i != piv]
        dpair = A[piv][piv]
        for k in rest:
            aki = A[k][piv]
            if order.is_zero(aki):
                for m_ in rest:
                    if not order.is_zero(A[k][m_]):
                        A[k][m_] = order.divide_real(order.mul(dpair, A[k][m_]), inv_prev)
                continue
            for m_ in rest:
                t = order.sub(order.mul(dpair, A[k][m_]), order.mul(aki, A[piv][m_]))
                A[k][m_] = order.divide_real(t, inv_prev)
        idx = rest
        prev = dpair
        prev_sign = d_sign
        fresh = False
    return pos, neg, null


def connected_blocks(V) -> list[list[int]]:
    """Index sets of the connected components of the nonzero pattern of V+V^T."""
    n = len(V)
    seen = [False] * n
    blocks = []
    for s in range(n):
        if seen[s]:
            continue
        comp, stack = [], [s]
        seen[s] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if not seen[j] and (V[i][j] != 0 or V[j][i] != 0):
                    seen[j] = True
                    stack.append(j)
        blocks.append(sorted(comp))
    return blocks


def _block_signature(V, order_factory) -> tuple[int, int, int]:
    pos = neg = null = 0
    for block in connected_blocks(V):
        sub = [[V[i][j] for j in block] for i in block]
        order = order_factory()
        A = hermitian_entries(sub, order)
        p, ng, z = signature_triple(A, order)
        pos, neg, null = pos + p, neg + ng, null + z
    return pos, neg, null


def signature_at_sample(V, z: Fraction) -> int:
    """Exact signature of (1-omega)V + (1-conj(omega))V^T at the unit-circle
    point with omega + conj(omega) = z, z rational in (-2, 2), off the roots
    of the Alexander polynomial.

    Raises SingularSampleError when the matrix is singular there (z hit a
    root of a symmetric factor).
    """
    if len(V) == 0:
        return 0
    pos, neg, null = _block_signature(V, lambda: order_for_sample(z))
    if null:
        raise SingularSampleError(f"sample z = {z} is a root of the Alexander polynomial")
    sig = pos - neg
    assert sig % 2 == 0, "signature at a nonsingular point must be even"
    return sig


def signature_at_root(V, q, root: RealRoot) -> tuple[int, int]:
    """(signature, nullity) of the hermitian matrix at an algebraic circle point.

    q is the (irreducible, positive-leading) trace polynomial of the point
    and root its isolating interval in (-2, 2); the matrix may be singular.
    """
    if len(V) == 0:
        return 0, 0
    pos, neg, null = _block_signature(V, lambda: ScaledOrder(q, root))
    return pos - neg, null


def symmetric_signature(M) -> tuple[int, int, int]:
    """(positive, negative, nullity) of a rational symmetric matrix.

    Plain fraction-based symmetric elimination with the same pivot-repair
    rule; used for the Murasugi signature at omega = -1 and as an
    independent cross-check of the fraction-free path.
    """
    n = len(M)
    A = [[Fraction(M[i][j]) for j in range(n)] for i in range(n)]
    idx = list(range(n))
    pos = neg = null = 0
    while idx:
        piv = next((i for i in idx if A[i][i] != 0), None)
        if piv is None:
            pair = None
            for a_pos, i in enumerate(idx):
                for j in idx[a_pos + 1 :]:
                    if A[i][j] != 0:
                        pair = (i, j)
                        break
                if pair:
                    break
            if pair is None:
                null += len(idx)
                break
            i, j = pair
            for k in idx:
                A[i][k] += A[j][k]
            for k in idx:
                A[k][i] += A[k][j]
            continue
        d = A[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        rest = [i for i in idx if i != piv]
        for k in rest:
            f = A[k][piv] / d
            if f:
                for m_ in rest:
                    A[k][m_] -= f * A[piv][m_]
        idx = rest
    return pos, neg, null
