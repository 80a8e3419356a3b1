"""Laurent polynomials over the rationals, and the trace substitution.

A LaurentPoly stores the lowest exponent and a dense tuple of Fraction
coefficients whose first and last entries are nonzero (unless zero).  The
trace substitution z = x + 1/x turns a palindromic polynomial p of even
span into an ordinary polynomial q with p(x) = x^(deg q) * q(x + 1/x);
unit-circle roots of p correspond to roots of q in (-2, 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import intpoly as ip
from .errors import DivisibilityError, ParityError, SymmetryError


class LaurentPoly:
    """Immutable exact-rational Laurent polynomial."""

    __slots__ = ("low", "coeffs")

    def __init__(self, low: int, coeffs):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[0] == 0:
            cs.pop(0)
            low += 1
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "low", low if cs else 0)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):  # immutability
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls(0, ())

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls(0, (1,))

    @classmethod
    def constant(cls, c) -> "LaurentPoly":
        return cls(0, (c,))

    @classmethod
    def x_power(cls, k: int) -> "LaurentPoly":
        return cls(k, (1,))

    @classmethod
    def from_poly(cls, coeffs, low: int = 0) -> "LaurentPoly":
        return cls(low, coeffs)

    # -- basic structure ---------------------------------------------------

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    @property
    def span(self) -> int:
        """high - low; 0 for monomials and for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def poly_part(self):
        """The coefficient tuple as an ordinary polynomial (unit x^low dropped)."""
        return self.coeffs

    def int_coeffs(self):
        """Primitive integer coefficients (unit and content dropped).

        Returns (unit, prim) with self = unit * x^low * prim as polynomials.
        """
        unit, prim = ip.rational_primitive(self.coeffs)
        return unit, prim

    # -- arithmetic ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, LaurentPoly) and self.low == other.low
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.low, self.coeffs))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.low, ip.neg(self.coeffs))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        low = min(self.low, other.low)
        a = ip.shift(self.coeffs, self.low - low)
        b = ip.shift(other.coeffs, other.low - low)
        return LaurentPoly(low, ip.add(a, b))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.is_zero() or other.is_zero():
            return LaurentPoly.zero()
        return LaurentPoly(self.low + other.low, ip.mul(self.coeffs, other.coeffs))

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers of general Laurent polynomials")
        out = LaurentPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient; DivisibilityError when the remainder is nonzero."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        q, r = ip.divmod_exact(self.coeffs, other.coeffs)
        if not ip.is_zero(r):
            raise DivisibilityError("Laurent division left a nonzero remainder")
        return LaurentPoly(self.low - other.low, q)

    def gcd(self, other: "LaurentPoly") -> "LaurentPoly":
        """Gcd up to units: primitive integer, positive leading coefficient,
        lowest exponent 0."""
        _, a = ip.rational_primitive(self.coeffs)
        _, b = ip.rational_primitive(other.coeffs)
        return LaurentPoly(0, ip.gcd_int_poly(a, b))

    def derivative(self) -> "LaurentPoly":
        cs = [(self.low + i) * c for i, c in enumerate(self.coeffs)]
        return LaurentPoly(self.low - 1, cs)

    def evaluate(self, x: Fraction) -> Fraction:
        x = Fraction(x)
        if self.is_zero():
            return Fraction(0)
        if x == 0:
            raise ZeroDivisionError("Laurent polynomial at 0")
        return ip.eval_at(self.coeffs, x) * x**self.low

    # -- symmetry ------------------------------------------------------------

    def reciprocal(self) -> "LaurentPoly":
        """The substitution x -> 1/x."""
        return LaurentPoly(-self.high, tuple(reversed(self.coeffs)))

    def self_reciprocal_sign(self) -> int | None:
        """+1 / -1 when p(1/x) = +-x^k p(x) for some k, else None."""
        rev = tuple(reversed(self.coeffs))
        if rev == self.coeffs:
            return 1
        if rev == ip.neg(self.coeffs):
            return -1
        return None

    def __repr__(self) -> str:
        if self.is_zero():
            return "LaurentPoly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = self.low + i
            terms.append(f"{c}" if e == 0 else f"{c}*x^{e}")
        return "LaurentPoly(" + " + ".join(terms) + ")"


@dataclass(frozen=True)
class TracePoly:
    """q(z) with source(x) = x^(deg q) * q(x + 1/x) up to a unit.

    coeffs are exact rationals ascending in z; source keeps the provenance
    link so the substitution identity can be rechecked.
    """

    coeffs: tuple
    source: LaurentPoly

    @property
    def degree(self) -> int:
        return ip.degree(self.coeffs)

    def int_primitive(self):
        """(unit, primitive-integer coefficients with positive lead)."""
        return ip.rational_primitive(self.coeffs)


def to_trace_poly(p: LaurentPoly) -> TracePoly:
    """Express a self-reciprocal even-span p as q(x + 1/x) times a unit.

    Anti-palindromic input (p(1/x) = -x^k p(x)) cannot be a polynomial in
    x + 1/x and raises SymmetryError, as does asymmetric input; odd span
    raises ParityError.
    """
    if p.is_zero():
        raise SymmetryError("the zero polynomial has no trace form")
    sign = p.self_reciprocal_sign()
    if sign is None:
        raise SymmetryError("polynomial is not self-reciprocal")
    if p.span % 2 != 0:
        raise ParityError("self-reciprocal polynomial has odd span")
    if sign == -1:
        raise SymmetryError("anti-palindromic polynomial is not a polynomial in x + 1/x")
    m = p.span // 2
    cs = p.coeffs  # palindromic, length 2m+1
    # x^j + x^-j as monic integer polynomials in z (T~_0 = 2, T~_1 = z, ...)
    tj = [(Fraction(2),), (Fraction(0), Fraction(1))]
    for _ in range(2, m + 1):
        tj.append(ip.sub(ip.shift(tj[-1], 1), tj[-2]))
    q = ip.scale((Fraction(1),), cs[m]) if cs[m] else ()
    for j in range(1, m + 1):
        q = ip.add(q, ip.scale(tj[j], cs[m + j]))
    out = TracePoly(tuple(Fraction(c) for c in q), p)
    assert from_trace_poly(out.coeffs).exact_div(LaurentPoly(p.low, p.coeffs)).span == 0
    return out


def from_trace_poly(q) -> LaurentPoly:
    """The pull-back x^(deg q) * q(x + 1/x) as a LaurentPoly."""
    q = ip.trim(tuple(Fraction(c) for c in q))
    z = LaurentPoly(-1, (1, 0, 1))  # x + 1/x
    out = LaurentPoly.zero()
    for c in reversed(q):
        out = out * z + LaurentPoly.constant(c)
    m = ip.degree(q)
    return LaurentPoly(out.low + m, out.coeffs)


def normalize_alexander(p: LaurentPoly) -> LaurentPoly:
    """The canonical symmetric representative with value 1 at x = 1.

    Input may be any unit multiple; the result is palindromic about 0 with
    even span and p(1) = 1, which pins the representative uniquely.
    """
    if p.is_zero():
        raise ValueError("Alexander polynomial cannot be zero")
    if p.self_reciprocal_sign() is None:
        raise SymmetryError("not symmetric up to units")
    if p.span % 2 != 0:
        raise ParityError("Alexander polynomial must have even span")
    at1 = sum(p.coeffs)
    if abs(at1) != 1:
        raise ValueError(f"p(1) = {at1}, expected a unit (is this det(V - xV^T)?)")
    cs = ip.scale(p.coeffs, Fraction(1 if at1 > 0 else -1))
    return LaurentPoly(-(len(cs) - 1) // 2, cs)
