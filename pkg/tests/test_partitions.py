import pytest
from hypothesis import given, settings, strategies as st

from queerlab.partitions import (
    EMPTY,
    PosetIdeal,
    StrictPartition,
    add_box_candidates,
    all_strict_upto,
    contains,
    delta,
    enumerate_strict,
    ideal_member,
    remove_box_candidates,
    staircase,
)


def sp(*parts):
    return StrictPartition(tuple(parts))


def test_validation():
    with pytest.raises(ValueError):
        sp(2, 2)
    with pytest.raises(ValueError):
        sp(1, 2)
    with pytest.raises(ValueError):
        sp(0)


def test_delta():
    assert delta(sp(2, 1)) == 0
    assert delta(sp(3)) == 1
    assert delta(EMPTY) == 0


def test_contains_examples():
    assert contains(sp(2), sp(2, 1))
    assert not contains(sp(2), sp(1))
    assert contains(sp(3, 1), sp(4, 1))


def test_enumerate_strict():
    assert [p.parts for p in enumerate_strict(4)] == [(4,), (3, 1)]
    assert [p.parts for p in enumerate_strict(0)] == [()]
    assert [p.parts for p in enumerate_strict(6)] == [(6,), (5, 1), (4, 2), (3, 2, 1)]


def test_staircase():
    assert staircase(0).parts == (1,)
    assert staircase(1).parts == (2, 1)
    assert staircase(2).parts == (3, 2, 1)


def test_partial_order_axioms_up_to_8():
    univ = all_strict_upto(8)
    for lam in univ:
        assert contains(lam, lam)
    pairs = [(a, b) for a in univ for b in univ if contains(a, b)]
    for a, b in pairs:
        if contains(b, a):
            assert a == b
    below = {}
    for a, b in pairs:
        below.setdefault(b, []).append(a)
    for b, c in pairs:
        for a in below[b]:
            assert contains(a, c)


def test_ideal_member_examples():
    I = PosetIdeal([sp(2)])
    assert ideal_member(I, sp(3, 1))
    assert not ideal_member(I, sp(1))
    I2 = PosetIdeal([staircase(2)])
    for mu in all_strict_upto(9):
        if mu.length > 2:
            assert ideal_member(I2, mu)


def test_ideal_reduction_antichain():
    I = PosetIdeal([sp(2), sp(3, 1), sp(2, 1)])
    # (3,1) contains (2); (2,1) contains (2): the antichain is {(2)}
    assert I.generators == frozenset({sp(2)})
    assert I == PosetIdeal([sp(2)])


def test_ideal_member_monotone():
    univ = all_strict_upto(7)
    I = PosetIdeal([sp(3), sp(2, 1)])
    for mu in univ:
        for nu in univ:
            if contains(mu, nu) and ideal_member(I, mu):
                assert ideal_member(I, nu)


def test_staircase_boundedness():
    # every strict mu with l(mu) >= k contains the staircase with top part k,
    # and hence any lambda with lambda_1 = k; exhaustive for k <= 4, |mu| <= 12
    univ = all_strict_upto(12)
    for k in range(1, 5):
        lam_star = staircase(k - 1)
        for mu in univ:
            if mu.length >= k:
                assert contains(lam_star, mu)
        for lam in all_strict_upto(10):
            if lam.parts and lam.parts[0] == k:
                for mu in univ:
                    if mu.length >= k:
                        assert contains(lam, mu)


def test_box_moves():
    assert {p.parts for p in add_box_candidates(sp(2))} == {(3,), (2, 1)}
    assert {p.parts for p in add_box_candidates(EMPTY)} == {(1,)}
    assert {p.parts for p in add_box_candidates(sp(3, 1))} == {(4, 1), (3, 2)}
    assert {p.parts for p in remove_box_candidates(sp(3, 1))} == {(2, 1), (3,)}
    assert {p.parts for p in remove_box_candidates(sp(1))} == {()}


@given(st.integers(0, 10))
@settings(deadline=None)
def test_serialization_roundtrip(n):
    for p in enumerate_strict(n):
        assert StrictPartition.parse(p.serialize()) == p
    assert StrictPartition.parse("") == EMPTY
    assert EMPTY.serialize() == ""
