"""Shared test helpers: a floating-point signature oracle, random expression
generation, and a Kronecker factorization oracle independent of the library's
Hensel-lifting path."""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

import numpy as np
import pytest

from knotsig import intpoly as ip


def float_signature(V_rows, z: float, require_gap: bool = True) -> int | None:
    """Signature of (1-w)V + (1-conj(w))V^T by certified eigenvalue counts.

    Returns None when an eigenvalue sits too close to zero for the count to
    be certified (callers resample; the comparison only applies to points
    with certified separation).
    """
    n = len(V_rows)
    if n == 0:
        return 0
    V = np.array(V_rows, dtype=float)
    w = complex(z / 2, math.sqrt(max(0.0, 4 - z * z)) / 2)
    W = (1 - w) * V + (1 - w.conjugate()) * V.T
    eigs = np.linalg.eigvalsh(W)
    scale = max(1.0, float(np.abs(eigs).max()))
    gap = float(np.abs(eigs).min())
    if require_gap and gap <= 1e-8 * scale:
        return None
    return int(np.sum(eigs > 0) - np.sum(eigs < 0))


def float_signature_at_angle(V_rows, t: float, zero_tol: float = 1e-7) -> tuple[int, int]:
    """(signature, nullity) at omega = exp(2 pi i t), tolerating zeros."""
    n = len(V_rows)
    if n == 0:
        return 0, 0
    V = np.array(V_rows, dtype=float)
    w = np.exp(2j * np.pi * t)
    W = (1 - w) * V + (1 - np.conj(w)) * V.T
    eigs = np.linalg.eigvalsh(W)
    scale = max(1.0, float(np.abs(eigs).max()))
    null = int(np.sum(np.abs(eigs) <= zero_tol * scale))
    pos = int(np.sum(eigs > zero_tol * scale))
    neg = int(np.sum(eigs < -zero_tol * scale))
    return pos - neg, null


_TABLE_NAMES = ("3_1", "4_1", "5_1", "7_4", "8_2", "8_20", "10_132", "11n6")


def random_expressions(count: int, seed: int = 20260811) -> list[str]:
    """Deterministic random connected-sum / mirror / multiple expressions."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        k = rng.randint(1, 3)
        parts = []
        for _ in range(k):
            name = rng.choice(_TABLE_NAMES)
            piece = name
            if rng.random() < 0.25:
                piece = f"2*{piece}"
            if rng.random() < 0.5:
                piece = f"-{piece}"
            parts.append(piece)
        out.append(" # ".join(parts))
    return out


def random_sample_points(count: int, seed: int) -> list[Fraction]:
    rng = random.Random(seed)
    pts = []
    while len(pts) < count:
        num = rng.randint(-1999, 1999)
        den = rng.choice([1000, 1009, 997])
        z = Fraction(num, den)
        if -2 < z < 2:
            pts.append(z)
    return pts


# ---- Kronecker factor search: an independent irreducibility oracle ----

def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = set()
    for d in range(1, int(math.isqrt(n)) + 1):
        if n % d == 0:
            out.update((d, n // d, -d, -(n // d)))
    return sorted(out)


def kronecker_has_factor(f, max_degree: int | None = None) -> bool:
    """True when the primitive integer polynomial f has a nonconstant proper
    factor, found by interpolating through divisor tuples of its values."""
    n = ip.degree(f)
    if n <= 1:
        return False
    top = max_degree if max_degree is not None else n // 2
    for d in range(1, top + 1):
        points = [0, 1, -1, 2, -2, 3, -3][: d + 1]
        values = [ip.eval_at(f, x) for x in points]
        if any(v == 0 for v in values):
            return True  # rational root
        div_lists = [_divisors(v) for v in values]
        for combo in itertools.product(*div_lists):
            g = _interpolate_int(points, combo)
            if g is None or ip.degree(g) != d:
                continue
            _, r = ip.divmod_exact(f, g)
            if ip.is_zero(r):
                return True
    return False


def _interpolate_int(points, values):
    coeffs = [Fraction(0)] * len(points)
    for i, xi in enumerate(points):
        basis = (Fraction(1),)
        den = Fraction(1)
        for j, xj in enumerate(points):
            if i != j:
                basis = ip.mul(basis, (Fraction(-xj), Fraction(1)))
                den *= xi - xj
        coeffs = ip.add(coeffs, ip.scale(basis, Fraction(values[i]) / den))
    coeffs = ip.trim(coeffs)
    if any(c.denominator != 1 for c in coeffs):
        return None
    return tuple(int(c) for c in coeffs)


@pytest.fixture(scope="session")
def table_names():
    return _TABLE_NAMES


# ---- the shared property-suite corpus and check functions ----
# (used by both the property tests and the acceptance suite, computed once)

@pytest.fixture(scope="session")
def corpus():
    """(label, SeifertMatrix, SignatureFunction) for the table and 50 random
    connected-sum/mirror expressions."""
    from knotsig.expressions import resolve
    from knotsig.knot_table import lookup
    from knotsig.signature import step_function

    entries = []
    for name in _TABLE_NAMES:
        V = lookup(name)
        entries.append((name, V, step_function(V)))
    for expr in random_expressions(50):
        V = resolve(expr)
        entries.append((expr, V, step_function(V)))
    return entries


def check_parity_invariant(sf):
    """All jumps and balanced values at roots of one factor share parity."""
    for factor, _mult, bps in sf.factor_groups():
        parities = {bp.jump % 2 for bp in bps} | {(bp.balanced2 // 2) % 2 for bp in bps}
        assert len(parities) == 1, f"parity violated for factor {factor}"


def check_first_plateau_zero(sf):
    assert sf.plateaus[0] == 0
    assert all(p % 2 == 0 for p in sf.plateaus)


def check_mirror_antisymmetry(V, sf):
    from knotsig.signature import step_function

    mirrored = step_function(V.mirror())
    assert mirrored.summary() == sf.negated().summary()


def check_stabilization(V, sf):
    from knotsig.seifert import stabilize
    from knotsig.signature import step_function

    assert step_function(stabilize(V)).summary() == sf.summary()


def check_bound_chain(V):
    from knotsig.bounds import report_for_matrix

    rep = report_for_matrix(V, "corpus", include_nonbalanced=False)
    assert rep.u1 <= rep.u2 <= 2 * rep.u1, (rep.u1, rep.u2)
    assert rep.u2 >= max((f.u_factor for f in rep.factors), default=0)
    return rep


def check_np_mirror_duality(V):
    from knotsig.bounds import report_for_matrix

    a = report_for_matrix(V, "k", include_nonbalanced=False)
    b = report_for_matrix(V.mirror(), "-k", include_nonbalanced=False)
    fa = {f.invariants.factor: f.signed for f in a.factors}
    fb = {f.invariants.factor: f.signed for f in b.factors}
    assert set(fa) == set(fb)
    for factor, sa in fa.items():
        sb = fb[factor]
        assert (sa.negative_to_positive, sa.positive_to_negative) == \
            (sb.positive_to_negative, sb.negative_to_positive), factor


def _breakpoint_index(sf):
    out = {}
    for factor, _mult, bps in sf.factor_groups():
        for i, bp in enumerate(bps):
            out[(factor, i)] = bp
    return out


def check_additivity(VA, sfA, VB, sfB):
    """Step function of a block sum is the pointwise sum."""
    from knotsig.errors import SingularSampleError
    from knotsig.seifert import connected_sum
    from knotsig.signature import signature_at_sample, step_function

    VS = connected_sum(VA, VB)
    sfS = step_function(VS)
    ia, ib, isum = _breakpoint_index(sfA), _breakpoint_index(sfB), _breakpoint_index(sfS)
    assert set(isum) == set(ia) | set(ib)
    for key, bp in isum.items():
        ja = ia[key].jump if key in ia else 0
        jb = ib[key].jump if key in ib else 0
        assert bp.jump == ja + jb, key
        ba = ia[key].balanced2 if key in ia else _plateau_value_at(VA, bp)
        bb = ib[key].balanced2 if key in ib else _plateau_value_at(VB, bp)
        assert bp.balanced2 == ba + bb, key
        na = ia[key].nonbalanced if key in ia else ba // 2
        nb = ib[key].nonbalanced if key in ib else bb // 2
        assert bp.nonbalanced == na + nb, key
    for z in random_sample_points(8, seed=len(VS.rows) * 31 + 7):
        try:
            assert signature_at_sample(VS, z) == \
                signature_at_sample(VA, z) + signature_at_sample(VB, z)
        except SingularSampleError:
            continue


def _plateau_value_at(V, bp):
    # balanced (= plateau, doubled) value of V at a circle point where its
    # Alexander polynomial does not vanish
    from knotsig.signature import nonbalanced_at_root

    return 2 * nonbalanced_at_root(V, bp.root)


def check_float_crossval(V, samples: int, seed: int):
    from knotsig.errors import SingularSampleError
    from knotsig.signature import signature_at_sample

    rng = random.Random(seed)
    done = 0
    while done < samples:
        z = Fraction(rng.randint(-1999, 1999), rng.choice([1000, 997, 1009]))
        if not -2 < z < 2:
            continue
        try:
            exact = signature_at_sample(V, z)
        except SingularSampleError:
            continue
        approx = float_signature(V.rows, float(z))
        if approx is None:
            continue  # separation not certified at this sample
        assert exact == approx, f"mismatch at z = {z}"
        done += 1
