"""Property suites over the built-in table and 50 random expressions.

The shared corpus fixture (conftest) computes every step function once per
session; each property below must hold for all entries.
"""

import random
import zlib

from conftest import (check_additivity, check_bound_chain, check_first_plateau_zero,
                      check_float_crossval, check_mirror_antisymmetry,
                      check_np_mirror_duality, check_parity_invariant,
                      check_stabilization)


def test_parity_invariant(corpus):
    for _label, _V, sf in corpus:
        check_parity_invariant(sf)


def test_first_plateau_zero_and_even(corpus):
    for _label, _V, sf in corpus:
        check_first_plateau_zero(sf)


def test_mirror_antisymmetry(corpus):
    for _label, V, sf in corpus:
        check_mirror_antisymmetry(V, sf)


def test_stabilization_invariance(corpus):
    for _label, V, sf in corpus:
        check_stabilization(V, sf)


def test_bound_chain_u1_u2(corpus):
    for _label, V, _sf in corpus:
        check_bound_chain(V)


def test_np_mirror_duality(corpus):
    for _label, V, _sf in corpus:
        check_np_mirror_duality(V)


def test_connected_sum_additivity(corpus):
    rng = random.Random(99)
    pairs = [(rng.randrange(len(corpus)), rng.randrange(len(corpus))) for _ in range(12)]
    for i, j in pairs:
        _, VA, sfA = corpus[i]
        _, VB, sfB = corpus[j]
        if VA.size + VB.size > 28:
            continue
        check_additivity(VA, sfA, VB, sfB)


def test_balanced_bounded_by_genus(corpus):
    for _label, V, sf in corpus:
        g2 = V.size  # 2 * genus
        for bp in sf.breakpoints:
            assert abs(bp.balanced2) <= 2 * g2  # |sigma| = |balanced2|/2 <= 2g
        lo, hi = sf.extremes()
        assert max(abs(lo), abs(hi)) <= g2


def test_float_cross_validation(corpus):
    for label, V, _sf in corpus:
        check_float_crossval(V, samples=100, seed=zlib.crc32(label.encode()))
