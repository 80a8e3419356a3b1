import pytest

from knotsig.errors import ParityError
from knotsig.oracle import (MOVES, LatticeState, apply_move, exhaustive_check,
                            minimal_moves)


def test_state_validation():
    with pytest.raises(ValueError):
        LatticeState(-1, -1, 1)
    with pytest.raises(ValueError):
        LatticeState(0, 2, 0)
    with pytest.raises(ParityError):
        LatticeState(1, 0, 2)
    LatticeState(1, -1, 3)


def test_apply_examples():
    assert apply_move(LatticeState(0, -2, -2), "F3+") == LatticeState(0, 0, 0)
    assert apply_move(LatticeState(2, 0, 2), "G1-") == LatticeState(1, -1, 1)
    assert apply_move(LatticeState(0, 0, 0), "F1+") is None  # smin would pass smax
    assert apply_move(LatticeState(0, 0, 0), "G1-") is None  # j would go negative


def test_move_table_is_complete():
    assert len(MOVES) == 10
    assert set(MOVES) == {"F1-", "F2-", "F3-", "F1+", "F2+", "F3+",
                          "G1-", "G2-", "G1+", "G2+"}


def test_f_and_g_moves_commute():
    # all moves are translations; when both orders stay in the lattice the
    # results agree
    states = [LatticeState(j, a, b)
              for j in range(0, 5) for a in range(-4, 5) for b in range(a, 5)
              if (a - j) % 2 == 0 and (b - j) % 2 == 0]
    fmoves = [m for m in MOVES if m.startswith("F")]
    gmoves = [m for m in MOVES if m.startswith("G")]
    for s in states:
        for f in fmoves:
            for g in gmoves:
                fg = apply_move(s, f)
                fg = apply_move(fg, g) if fg else None
                gf = apply_move(s, g)
                gf = apply_move(gf, f) if gf else None
                if fg is not None and gf is not None:
                    assert fg == gf


def test_minimal_moves_examples():
    r = minimal_moves(LatticeState(2, 0, 2))
    assert r.total == 3
    assert (r.min_negative_to_positive, r.min_positive_to_negative) == (2, 1)

    r = minimal_moves(LatticeState(3, 1, 13))
    assert r.total == 9
    assert (r.min_negative_to_positive, r.min_positive_to_negative) == (8, 1)

    r = minimal_moves(LatticeState(0, 0, 0))
    assert r.total == 0 and r.witness == ()


def test_witness_is_a_valid_path():
    start = LatticeState(3, -1, 5)
    r = minimal_moves(start)
    s = start
    for move in r.witness:
        s = apply_move(s, move)
        assert s is not None
    assert s == LatticeState(0, 0, 0)
    assert len(r.witness) == r.total
    n = sum(1 for m in r.witness if m.endswith("-"))
    p = r.total - n
    assert n >= r.min_negative_to_positive
    assert p >= r.min_positive_to_negative
    assert r.lex_split[0] + r.lex_split[1] == r.total


def test_exhaustive_small_ranges():
    rep = exhaustive_check(0)
    assert rep.states_checked == 1 and rep.ok

    rep = exhaustive_check(8)
    assert rep.ok, rep.mismatches
    assert rep.states_checked > 300


def test_exhaustive_agrees_with_per_state_search():
    rep = exhaustive_check(4)
    assert rep.ok
    for j in range(0, 5):
        for a in range(-4, 5):
            if (a - j) % 2:
                continue
            for b in range(a, 5):
                if (b - j) % 2:
                    continue
                from knotsig.bounds import FactorInvariants, signed_bounds, unknotting_bound

                r = minimal_moves(LatticeState(j, a, b))
                f = FactorInvariants((), j, 2 * a, 2 * b)
                assert r.total == unknotting_bound(f)
                sb = signed_bounds(f)
                assert r.min_negative_to_positive == sb.negative_to_positive
                assert r.min_positive_to_negative == sb.positive_to_negative


def test_margin_stability():
    a = exhaustive_check(6, margin=4)
    b = exhaustive_check(6, margin=8)
    assert a.ok and b.ok
    assert a.states_checked == b.states_checked


def test_mutation_detected():
    # an off-by-one formula must be caught, with (1, 1, 1) among the witnesses
    def broken_total(j, smin, smax):
        from knotsig.bounds import FactorInvariants, unknotting_bound

        return unknotting_bound(FactorInvariants((), j, 2 * smin, 2 * smax)) + (
            1 if (j, smin, smax) == (1, 1, 1) else 0)

    rep = exhaustive_check(4, total_formula=broken_total)
    assert not rep.ok
    assert any(m.state == (1, 1, 1) and m.kind == "total" for m in rep.mismatches)


def test_report_dict():
    rep = exhaustive_check(2)
    d = rep.to_dict()
    assert d["ok"] is True
    assert d["mismatch_count"] == 0
    assert d["states_checked"] == rep.states_checked
