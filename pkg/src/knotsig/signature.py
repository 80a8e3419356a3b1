"""The signature step function of a knot from its Seifert matrix.

The function t -> signature((1-w)V + (1-conj(w))V^T), w = exp(2*pi*i*t), is
an even-valued step function on t in (0, 1/2] that can only jump at roots
of the Alexander polynomial.  Everything is computed in the trace
coordinate z = 2*cos(2*pi*t), which runs from 2 down to -2 as t runs from
0 to 1/2: breakpoints are the roots in (-2, 2) of the trace polynomials of
the self-reciprocal irreducible factors of the Alexander polynomial, and
each plateau value is one exact signature at a rational z between
consecutive roots.

At a breakpoint three numbers are recorded: the jump (half the difference
of one-sided limits), the balanced value (their average, stored doubled so
reports never need fractions), and the non-balanced value, the honest
signature of the singular hermitian matrix at the root, computed by exact
congruence diagonalization over the corresponding number field (the
relation of the non-balanced value to the adjacent plateaus is not
determined by them, so it is never inferred).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import intpoly as ip
from .errors import KnotsigError
from .hermitian import signature_at_root, signature_at_sample as _sig_sample_raw
from .laurent import LaurentPoly, to_trace_poly
from .factor import factor_int_poly
from .seifert import SeifertMatrix, alexander_polynomial
from .sturm import RealRoot, isolate_real_roots


@dataclass(frozen=True)
class UnitRoot:
    """A point on the open upper unit circle, algebraically certified.

    x_factor is the irreducible self-reciprocal factor of the Alexander
    polynomial it comes from; trace its trace polynomial (irreducible over
    Q); root isolates z = 2*cos(2*pi*t) in (-2, 2).  For cyclotomic factors
    the angle is exactly rational and exact_t is set.
    """

    x_factor: tuple
    trace: tuple
    root: RealRoot
    cyclotomic: int | None = None
    exact_t: Fraction | None = None


@dataclass(frozen=True)
class BreakpointFactor:
    """An irreducible self-reciprocal factor with its upper-circle roots."""

    x_factor: tuple
    multiplicity: int
    roots: tuple  # UnitRoots ordered by increasing t (decreasing z)

    @property
    def laurent(self) -> LaurentPoly:
        span = ip.degree(self.x_factor)
        return LaurentPoly(-(span // 2), self.x_factor)


@dataclass(frozen=True)
class Breakpoint:
    root: UnitRoot
    multiplicity: int
    left: int           # plateau value on the smaller-t side
    right: int          # plateau value on the larger-t side
    jump: int           # (right - left) / 2
    balanced2: int      # left + right  (twice the two-sided average)
    nonbalanced: int | None


@dataclass(frozen=True)
class SignatureFunction:
    """Plateau values and breakpoint data on t in (0, 1/2].

    plateaus has one entry per open interval between consecutive
    breakpoints, starting with the interval at t -> 0+ (always value 0)
    and ending with the interval reaching t = 1/2; breakpoints are ordered
    by increasing t.
    """

    plateaus: tuple
    breakpoints: tuple

    @property
    def sigma_at_minus_one(self) -> int:
        return self.plateaus[-1]

    def extremes(self) -> tuple[int, int]:
        """(min, max) of the step function over the whole circle.

        Balanced breakpoint values are averages of the adjacent plateaus,
        so the plateau extremes already decide these.
        """
        return min(self.plateaus), max(self.plateaus)

    def nonbalanced_extremes(self) -> tuple[int, int]:
        vals = list(self.plateaus)
        for bp in self.breakpoints:
            if bp.nonbalanced is None:
                raise KnotsigError("step function computed without non-balanced values")
            vals.append(bp.nonbalanced)
        return min(vals), max(vals)

    def factor_groups(self) -> list[tuple[tuple, int, tuple]]:
        """[(x_factor, multiplicity, breakpoints-of-that-factor), ...] ordered
        by factor degree then coefficients."""
        groups: dict[tuple, list] = {}
        mults: dict[tuple, int] = {}
        for bp in self.breakpoints:
            groups.setdefault(bp.root.x_factor, []).append(bp)
            mults[bp.root.x_factor] = bp.multiplicity
        keys = sorted(groups, key=lambda f: (len(f), f))
        return [(f, mults[f], tuple(groups[f])) for f in keys]

    def negated(self) -> "SignatureFunction":
        return SignatureFunction(
            tuple(-p for p in self.plateaus),
            tuple(Breakpoint(bp.root, bp.multiplicity, -bp.left, -bp.right, -bp.jump,
                             -bp.balanced2,
                             None if bp.nonbalanced is None else -bp.nonbalanced)
                  for bp in self.breakpoints))

    def summary(self):
        """Hash-friendly content view used by the property tests."""
        return (self.plateaus,
                tuple((bp.root.x_factor, bp.multiplicity, bp.jump, bp.balanced2,
                       bp.nonbalanced) for bp in self.breakpoints))


def _cyclotomic_index(f) -> int | None:
    d = ip.degree(f)
    # phi(n) >= sqrt(n/2), so n <= 2 d^2 + 2 covers every candidate index
    for n in range(1, 2 * d * d + 3):
        phi = ip.cyclotomic(n)
        if ip.degree(phi) == d and tuple(phi) == tuple(f):
            return n
    return None


def breakpoint_candidates(delta: LaurentPoly) -> list[BreakpointFactor]:
    """The irreducible self-reciprocal factors of delta with circle roots.

    Factors without unit-circle roots are dropped; multiplicity never
    affects which roots appear (a factor of even multiplicity still yields
    breakpoints, where the jump may well be 0).
    """
    if delta.is_zero():
        raise ValueError("zero Alexander polynomial")
    _, prim = delta.int_coeffs()
    _, factors = factor_int_poly(prim)
    out = []
    for f, mult in factors:
        if tuple(f) != tuple(reversed(f)) or ip.degree(f) % 2 != 0 or ip.degree(f) == 0:
            continue
        trace = to_trace_poly(LaurentPoly(0, f))
        _, q = trace.int_primitive()
        roots = isolate_real_roots(q, Fraction(-2), Fraction(2))
        if not roots:
            continue
        roots = list(reversed(roots))  # decreasing z = increasing t
        n = _cyclotomic_index(f)
        exact_ts: list[Fraction | None] = [None] * len(roots)
        if n is not None:
            ks = [k for k in range(1, (n + 1) // 2) if gcd(k, n) == 1 and 2 * k < n]
            assert len(ks) == len(roots)
            exact_ts = [Fraction(k, n) for k in sorted(ks)]
        unit_roots = tuple(
            UnitRoot(x_factor=tuple(f), trace=tuple(q), root=r, cyclotomic=n, exact_t=t)
            for r, t in zip(roots, exact_ts))
        out.append(BreakpointFactor(tuple(f), mult, unit_roots))
    out.sort(key=lambda bf: (len(bf.x_factor), bf.x_factor))
    return out


def signature_at_sample(V: SeifertMatrix, z: Fraction) -> int:
    """Exact signature at the circle point with omega + 1/omega = z.

    z must be rational in (-2, 2) and off the trace roots of the
    breakpoint factors; hitting a root raises SingularSampleError.
    """
    return _sig_sample_raw(V.rows, Fraction(z))


def nonbalanced_at_root(V: SeifertMatrix, r: UnitRoot) -> int:
    """The non-balanced signature: the honest signature (zero eigenvalues
    contribute nothing) of the hermitian matrix at the algebraic point r."""
    s, _null = signature_at_root(V.rows, r.trace, r.root)
    return s


def _separate_all(roots: list[UnitRoot]) -> None:
    while True:
        order = sorted(roots, key=lambda u: u.root.lo)
        clean = True
        for a, b in zip(order, order[1:]):
            if not (a.root.hi < b.root.lo or b.root.hi < a.root.lo):
                a.root.separate_from(b.root)
                clean = False
        if clean:
            return


def step_function(V: SeifertMatrix, include_nonbalanced: bool = True,
                  jobs: int = 1) -> SignatureFunction:
    """The full signature step function of the knot with Seifert matrix V.

    jobs > 1 evaluates the (independent, pure) plateau samples and
    breakpoint signatures on a thread pool; results are collected in order,
    so the output is identical for every thread count.
    """
    delta = alexander_polynomial(V)
    factors = breakpoint_candidates(delta)
    roots = [ur for bf in factors for ur in bf.roots]
    mult_of = {bf.x_factor: bf.multiplicity for bf in factors}
    _separate_all(roots)
    roots.sort(key=lambda u: u.root.lo, reverse=True)  # decreasing z = increasing t

    samples: list[Fraction] = []
    if roots:
        samples.append((roots[0].root.hi + 2) / 2)
        for a, b in zip(roots, roots[1:]):
            samples.append((a.root.lo + b.root.hi) / 2)
        samples.append((roots[-1].root.lo - 2) / 2)
    else:
        samples.append(Fraction(0))

    plateaus = tuple(_ordered_map(lambda z: signature_at_sample(V, z), samples, jobs))
    if plateaus[0] != 0:
        raise AssertionError("signature near omega = 1 must vanish")
    for p in plateaus:
        if p % 2 != 0:
            raise AssertionError("plateau values must be even")

    if include_nonbalanced:
        nb_values = _ordered_map(lambda ur: nonbalanced_at_root(V, ur), roots, jobs)
    else:
        nb_values = [None] * len(roots)

    bps = []
    for i, ur in enumerate(roots):
        left, right = plateaus[i], plateaus[i + 1]
        if (right - left) % 2 != 0:
            raise AssertionError("adjacent plateaus differ by an odd amount")
        bps.append(Breakpoint(root=ur, multiplicity=mult_of[ur.x_factor],
                              left=left, right=right, jump=(right - left) // 2,
                              balanced2=left + right, nonbalanced=nb_values[i]))
    return SignatureFunction(plateaus, tuple(bps))


def _ordered_map(fn, items, jobs: int):
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))
